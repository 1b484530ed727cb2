#include "pspchain/psp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pspchain/log_real.hpp"

namespace pspchain {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<InterfaceIndex> full_support(int n) {
    std::vector<InterfaceIndex> support;
    support.reserve(static_cast<std::size_t>(2 * n + 2));
    for (int t2 = -(2 * n + 1); t2 <= 2 * n + 1; t2 += 2) support.push_back({t2});
    return support;
}

}  // namespace

double PspDistribution::probability_of(InterfaceIndex t) const {
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i].twice == t.twice) return probability[i];
    throw std::out_of_range("interface index outside the distribution support");
}

PspDistribution psp_distribution(const CouplingFamily& family, double beta, int n,
                                 const EnumerationOptions& options) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    require_within_cap(n, options);
    const int sites = 2 * n + 1;
    const int buckets = 2 * n + 2;
    const std::vector<double> couplings = family.values(-n, n + 1);
    const std::uint64_t total = std::uint64_t{1} << sites;

    // one log-sum-exp accumulator per bucket; chunks merge in index order
    auto map_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<double> logs(static_cast<std::size_t>(buckets), kNegInf);
        std::vector<int> spins(static_cast<std::size_t>(sites));
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            for (int i = 0; i < sites; ++i)
                spins[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? +1 : -1;
            const double w =
                -beta * detail::energy_of_packed(bits, sites, couplings.data(), false, true);
            const int t2 = detail::psp_twice_of_span(spins.data(), n);
            const auto k = static_cast<std::size_t>((t2 + 2 * n + 1) / 2);
            logs[k] = log_add_exp(logs[k], w);
        }
        return logs;
    };
    auto reduce = [](std::vector<double> acc, std::vector<double> chunk) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = log_add_exp(acc[i], chunk[i]);
        return acc;
    };
    const std::vector<double> bucket_logs =
        chunked_reduce<std::vector<double>>(total,
                                            std::vector<double>(static_cast<std::size_t>(buckets), kNegInf),
                                            map_chunk, reduce, options.threads);

    double log_z = kNegInf;
    for (double v : bucket_logs) log_z = log_add_exp(log_z, v);

    PspDistribution dist;
    dist.n = n;
    dist.beta = beta;
    dist.family = family.describe();
    dist.family_symmetric = validate_reflection_symmetry(family, -static_cast<long>(n), n + 1).ok();
    dist.support = full_support(n);
    dist.log_normalizer = log_z;
    dist.probability.reserve(bucket_logs.size());
    dist.log_probability.reserve(bucket_logs.size());
    for (double v : bucket_logs) {
        dist.log_probability.push_back(v - log_z);
        dist.probability.push_back(std::exp(v - log_z));
    }
    return dist;
}

Moments psp_moments(const PspDistribution& dist) {
    double mean = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const double theta = dist.support[i].value();
        mean += theta * dist.probability[i];
        second += theta * theta * dist.probability[i];
    }
    return Moments{mean, second - mean * mean};
}

VarianceEnvelope variance_envelope(double beta) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    const double tau = std::exp(-beta);
    // combination of hyperbolic factors bounding the two sub-block sums
    const double c = std::cosh(tau * tau / (1.0 - tau));
    const double a = c * std::cosh(tau * (1.0 + tau)) -
                     std::sinh(tau * tau) * std::sinh(tau * (1.0 + tau));
    const double upper = tau * a * c / (2.0 * std::sinh(2.0 * tau)) *
                         (1.0 + 3.0 * tau * (tau + 3.0) / ((1.0 - tau) * (1.0 - tau)));
    return VarianceEnvelope{0.25, upper, beta >= 5.0};
}

TailSeries tail_series(double tau, int m_max) {
    if (!(tau > 0.0 && tau < 1.0))
        throw std::domain_error("tail_series: tau must lie in (0, 1)");
    if (m_max < 1) throw std::invalid_argument("tail_series: m_max must be >= 1");
    double partial = 0.0;
    double power = 1.0;
    for (int m = 1; m <= m_max; ++m) {
        power *= tau;
        const double half = m + 0.5;
        partial += half * half * power;
    }
    const double om = 1.0 - tau;
    const double closed_compact = 3.0 * tau * (tau + 3.0) / (4.0 * om * om);
    const double closed_exact =
        tau * (1.0 + tau) / (om * om * om) + tau / (om * om) + tau / (4.0 * om);
    return TailSeries{partial, closed_compact, closed_exact};
}

NecessaryConditionVerdict psp_necessary_conditions(const SpinConfiguration& config,
                                                   InterfaceIndex t) {
    const auto points = interface_points(config);
    const bool is_member =
        std::any_of(points.begin(), points.end(),
                    [&](InterfaceIndex p) { return p.twice == t.twice; });
    if (!is_member)
        throw std::invalid_argument("position is not an interface point of the configuration");
    const InterfaceStats stats = interface_stats(config, t);
    const bool leftmost = points.front().twice == t.twice;
    const bool rightmost = points.back().twice == t.twice;
    bool satisfied = false;
    if (leftmost && stats.l_plus == 0 && stats.l_minus >= stats.l_plus &&
        stats.r_plus > stats.r_minus)
        satisfied = true;
    if (rightmost && stats.r_minus == 0 && stats.r_plus >= stats.r_minus &&
        stats.l_minus > stats.l_plus)
        satisfied = true;
    if (!leftmost && !rightmost && stats.l_minus > stats.l_plus && stats.r_plus > stats.r_minus)
        satisfied = true;
    return NecessaryConditionVerdict{satisfied, leftmost, rightmost, stats};
}

ContourResult contour_probability(const CouplingFamily& family, double beta, int n,
                                  ContourQuery b, const EnumerationOptions& options) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    require_within_cap(n, options);
    if (b.left > b.right) throw std::invalid_argument("contour query must be non-empty");
    if (b.left < -n || b.right > n)
        throw std::out_of_range("contour query must lie inside the volume");

    const int sites = 2 * n + 1;
    const std::vector<double> couplings = family.values(-n, n + 1);
    const std::uint64_t total = std::uint64_t{1} << sites;

    // the event: every site of B is -1 and both outer neighbours are +1
    // (sites beyond the volume are +1 under the all-plus boundary)
    std::uint64_t b_mask = 0;
    for (int x = b.left; x <= b.right; ++x) b_mask |= std::uint64_t{1} << (x + n);
    const int left_neighbor = b.left - 1;
    const int right_neighbor = b.right + 1;

    auto map_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        double log_event = kNegInf;
        for (std::uint64_t bits = lo; bits < hi; ++bits) {
            if ((bits & b_mask) != 0) continue;
            if (left_neighbor >= -n && !((bits >> (left_neighbor + n)) & 1)) continue;
            if (right_neighbor <= n && !((bits >> (right_neighbor + n)) & 1)) continue;
            log_event = log_add_exp(
                log_event, -beta * detail::energy_of_packed(bits, sites, couplings.data(), true, true));
        }
        return log_event;
    };
    const double log_numerator =
        chunked_reduce<double>(total, kNegInf, map_chunk,
                               [](double a, double c) { return log_add_exp(a, c); }, options.threads);
    const LogReal z_plus = brute_force_partition(family, beta, n, BoundaryCondition::plus(), options);
    const double p = std::exp(log_numerator - z_plus.log());
    const double bound = std::exp(-beta * (family.value(b.left) + family.value(b.right + 1)));
    return ContourResult{p, bound};
}

DecompositionReport decomposition_check(const CouplingFamily& family, double beta, int n,
                                        const EnumerationOptions& options) {
    const PspDistribution dist = psp_distribution(family, beta, n, options);
    const double log_z = dist.log_normalizer;

    DecompositionReport report;
    report.total_probability = 0.0;
    report.max_exact_joint_gap = 0.0;
    report.max_product_excess = 0.0;

    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const InterfaceIndex theta = dist.support[i];
        const double log_bond = -beta * family.value(theta.right_site());
        const CrystalPair crystal = crystal_partitions(family, beta, n, theta, options);
        const double joint_p =
            crystal.joint.is_zero() ? 0.0 : std::exp(log_bond + crystal.joint.log() - log_z);
        report.total_probability += joint_p;
        report.max_exact_joint_gap =
            std::max(report.max_exact_joint_gap, std::abs(joint_p - dist.probability[i]));

        if (theta.twice < 1) continue;
        const double product_p =
            (crystal.left.is_zero() || crystal.right.is_zero())
                ? 0.0
                : std::exp(log_bond + crystal.left.log() + crystal.right.log() - log_z);
        const RarefiedPair left = rarefied_left(family, beta, n, theta);
        const RarefiedPair right = rarefied_right(family, beta, n, theta);
        const double bound_p = std::exp(log_bond + left.aligned.log() + right.aligned.log() - log_z);
        report.rows.push_back({theta, dist.probability[i], joint_p, product_p, bound_p});
        report.max_product_excess =
            std::max(report.max_product_excess, product_p - dist.probability[i]);
    }

    for (const auto& row : report.rows) {
        if (std::abs(row.exact - row.joint) > 1e-12) {
            std::ostringstream os;
            os << "crystal joint route disagrees with the exact distribution at theta="
               << row.theta.value() << ": " << row.joint << " vs " << row.exact;
            throw std::logic_error(os.str());
        }
        if (row.exact > row.rarefied_bound * (1.0 + 1e-9) + 1e-300) {
            std::ostringstream os;
            os << "rarefied bound undershot at theta=" << row.theta.value() << ": exact "
               << row.exact << " > bound " << row.rarefied_bound;
            throw std::logic_error(os.str());
        }
    }
    return report;
}

}  // namespace pspchain
