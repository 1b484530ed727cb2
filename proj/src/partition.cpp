#include "pspchain/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pspchain/interface.hpp"

namespace pspchain {

namespace {

constexpr double kLn2 = 0.6931471805599453;

/// log(1 + e^z), stable for any z.
double log1p_exp(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

/// log|1 - e^z|; -inf at z == 0.
double log_abs_1m_exp(double z) {
    if (z == 0.0) return -std::numeric_limits<double>::infinity();
    if (z > 0.0) return std::log(std::expm1(z));
    return z > -kLn2 ? std::log(-std::expm1(z)) : std::log1p(-std::exp(z));
}

void require_reflection_symmetry(const CouplingFamily& family, int n, const char* what) {
    const auto report = validate_reflection_symmetry(family, -static_cast<long>(n), n + 1);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        std::ostringstream os;
        os << what << " requires the reflection symmetry I(m) == I(1-m) on [-" << n << ", "
           << n + 1 << "]; first violation at m=" << v.n << " (I(m)=" << v.value
           << ", I(1-m)=" << v.mirrored << ")";
        throw std::domain_error(os.str());
    }
}

/// Energy of a packed configuration. couplings[j] = I(j - n) for
/// j = 0..2n+1; bit i of `bits` holds the spin at site i - n.
double energy_of_bits(std::uint64_t bits, int sites, const double* couplings,
                      bool left_plus, bool right_plus) {
    double e = 0.0;
    const std::uint64_t diff = bits ^ (bits >> 1);
    for (int i = 0; i + 1 < sites; ++i)
        if ((diff >> i) & 1) e += couplings[i + 1];
    if (static_cast<bool>(bits & 1) != left_plus) e += couplings[0];
    if (static_cast<bool>((bits >> (sites - 1)) & 1) != right_plus) e += couplings[sites];
    return e;
}

}  // namespace

PartitionPair closed_form_partition(const CouplingFamily& family, double beta, int n) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (n < 0) throw std::invalid_argument("half-width must be >= 0");
    require_reflection_symmetry(family, n, "closed_form_partition");
    double log_y = 0.0;  // log of the plus-product squared
    double log_x = 0.0;  // log of the minus-product squared
    for (int i = 0; i <= n; ++i) {
        const double z = -beta * family.value(i + 1);
        log_y += 2.0 * log1p_exp(z);
        log_x += 2.0 * log_abs_1m_exp(z);
    }
    // both products are squares, hence non-negative; and strictly
    // log_x < log_y for finite couplings
    return PartitionPair{
        LogReal::from_log(log_add_exp(log_y, log_x) - kLn2),
        LogReal::from_log(log_diff_exp(log_y, log_x) - kLn2),
    };
}

std::vector<PartitionPair> recursive_partition(const CouplingFamily& family, double beta, int n) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    if (n < 0) throw std::invalid_argument("half-width must be >= 0");
    require_reflection_symmetry(family, n, "recursive_partition");
    std::vector<PartitionPair> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    // base volume {0}: two boundary bonds with couplings I(0), I(1)
    double log_plus = log1p_exp(-beta * (family.value(0) + family.value(1)));
    double log_mixed = log_add_exp(-beta * family.value(0), -beta * family.value(1));
    out.push_back({LogReal::from_log(log_plus), LogReal::from_log(log_mixed)});
    for (int m = 1; m <= n; ++m) {
        const double bi = beta * family.value(m + 1);
        const double log_same = log1p_exp(-2.0 * bi);  // log(1 + e^{-2 beta I})
        const double log_cross = kLn2 - bi;            // log(2 e^{-beta I})
        const double next_plus = log_add_exp(log_same + log_plus, log_cross + log_mixed);
        const double next_mixed = log_add_exp(log_same + log_mixed, log_cross + log_plus);
        log_plus = next_plus;
        log_mixed = next_mixed;
        out.push_back({LogReal::from_log(log_plus), LogReal::from_log(log_mixed)});
    }
    return out;
}

LogReal brute_force_partition(const CouplingFamily& family, double beta, int n,
                              BoundaryCondition bc, const EnumerationOptions& options) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    require_within_cap(n, options);
    const int sites = 2 * n + 1;
    const std::vector<double> couplings = family.values(-n, n + 1);
    const bool left_plus = bc.left > 0;
    const bool right_plus = bc.right > 0;
    const std::uint64_t total = std::uint64_t{1} << sites;

    auto map_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<double> logs;
        logs.reserve(hi - lo);
        for (std::uint64_t bits = lo; bits < hi; ++bits)
            logs.push_back(-beta * energy_of_bits(bits, sites, couplings.data(), left_plus, right_plus));
        const double peak = *std::max_element(logs.begin(), logs.end());
        double sum = 0.0;
        for (double v : logs) sum += std::exp(v - peak);
        return peak + std::log(sum);
    };
    const double neg_inf = -std::numeric_limits<double>::infinity();
    const double log_z =
        chunked_reduce<double>(total, neg_inf, map_chunk,
                               [](double a, double b) { return log_add_exp(a, b); }, options.threads);
    return LogReal::from_log(log_z);
}

double ising_ratio(const CouplingFamily& family, double beta, int n) {
    if (family.describe().rfind("const:", 0) != 0)
        throw std::invalid_argument("ising_ratio is defined for constant coupling families only");
    const PartitionPair pair = closed_form_partition(family, beta, n);
    return std::exp(pair.plus.log() - pair.mixed.log());
}

namespace detail {

void require_in_interface_range(InterfaceIndex theta, int n) {
    if ((theta.twice & 1) == 0)
        throw std::invalid_argument("interface index must be a half-integer (odd doubled value)");
    if (theta.twice > 2 * n + 1 || theta.twice < -(2 * n + 1))
        throw std::out_of_range("interface index outside the volume's range");
}

RarefiedPair block_partition(const CouplingFamily& family, double beta, long a, long b) {
    if (b < a - 2) throw std::logic_error("block_partition: malformed block");
    if (b == a - 2) return {LogReal::one(), LogReal::zero()};  // nothing left, not even a bond
    // Track (log of the half-sum, log of the half-difference) of the two
    // transfer products over I(a)..I(b+1). Folding one factor in maps
    // (s, d) -> (s + tau d, d + tau s), which involves only additions, so
    // the half-difference keeps its tiny log even when every e^{-beta I(j)}
    // underflows as a linear-domain double. Signed factors from negative
    // couplings are absorbed by the same recursion.
    double log_sum = 0.0;
    double log_diff = -std::numeric_limits<double>::infinity();
    for (long j = a; j <= b + 1; ++j) {
        const double z = -beta * family.value(j);
        const double next_sum = log_add_exp(log_sum, z + log_diff);
        const double next_diff = log_add_exp(log_diff, z + log_sum);
        log_sum = next_sum;
        log_diff = next_diff;
    }
    return {LogReal::from_log(log_sum), LogReal::from_log(log_diff)};
}

}  // namespace detail

RarefiedPair rarefied_right(const CouplingFamily& family, double beta, int n, InterfaceIndex theta) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    detail::require_in_interface_range(theta, n);
    return detail::block_partition(family, beta, theta.right_site() + 1, n);
}

RarefiedPair rarefied_left(const CouplingFamily& family, double beta, int n, InterfaceIndex theta) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    detail::require_in_interface_range(theta, n);
    return detail::block_partition(family, beta, -static_cast<long>(n), theta.left_site() - 1);
}

CrystalPair crystal_partitions(const CouplingFamily& family, double beta, int n,
                               InterfaceIndex theta, const EnumerationOptions& options) {
    if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
    require_within_cap(n, options);
    detail::require_in_interface_range(theta, n);

    const int tm = theta.left_site();   // fixed -1 here when inside the volume
    const int tp = theta.right_site();  // fixed +1 here when inside the volume
    const int left_lo = -n, left_hi = tm - 1;
    const int right_lo = tp + 1, right_hi = n;
    const int left_count = std::max(0, left_hi - left_lo + 1);
    const int right_count = std::max(0, right_hi - right_lo + 1);

    // per-side block energies, indexed by the packed side bits
    const std::vector<double> couplings = family.values(-n, n + 1);
    const auto coupling_at = [&](int x) { return couplings[static_cast<std::size_t>(x + n)]; };
    std::vector<double> left_energy(std::size_t{1} << left_count, 0.0);
    for (std::uint64_t bits = 0; bits < left_energy.size(); ++bits) {
        double e = 0.0;
        for (int i = 0; i + 1 < left_count; ++i)
            if (((bits >> i) & 1) != ((bits >> (i + 1)) & 1)) e += coupling_at(left_lo + i + 1);
        if (left_count > 0) {
            if (bits & 1) e += coupling_at(left_lo);  // disagrees with the -1 outer spin
            if ((bits >> (left_count - 1)) & 1) e += coupling_at(left_hi + 1);
        }
        left_energy[bits] = e;
    }
    std::vector<double> right_energy(std::size_t{1} << right_count, 0.0);
    for (std::uint64_t bits = 0; bits < right_energy.size(); ++bits) {
        double e = 0.0;
        for (int i = 0; i + 1 < right_count; ++i)
            if (((bits >> i) & 1) != ((bits >> (i + 1)) & 1)) e += coupling_at(right_lo + i + 1);
        if (right_count > 0) {
            if (!(bits & 1)) e += coupling_at(right_lo);  // disagrees with the +1 inner spin
            if (!((bits >> (right_count - 1)) & 1)) e += coupling_at(right_hi + 1);
        }
        right_energy[bits] = e;
    }

    // joint filtered enumeration: admit a pair iff the assembled
    // configuration separates exactly at theta
    std::vector<int> spins(static_cast<std::size_t>(2 * n + 1), +1);
    const auto site_slot = [&](int x) { return static_cast<std::size_t>(x + n); };
    if (tm >= -n) spins[site_slot(tm)] = -1;
    if (tp <= n) spins[site_slot(tp)] = +1;

    std::vector<std::uint8_t> left_admitted(left_energy.size(), 0);
    std::vector<std::uint8_t> right_admitted(right_energy.size(), 0);
    double log_joint = -std::numeric_limits<double>::infinity();
    for (std::uint64_t lbits = 0; lbits < left_energy.size(); ++lbits) {
        for (int i = 0; i < left_count; ++i)
            spins[site_slot(left_lo + i)] = ((lbits >> i) & 1) ? +1 : -1;
        for (std::uint64_t rbits = 0; rbits < right_energy.size(); ++rbits) {
            for (int i = 0; i < right_count; ++i)
                spins[site_slot(right_lo + i)] = ((rbits >> i) & 1) ? +1 : -1;
            if (detail::psp_twice_of_span(spins.data(), n) != theta.twice) continue;
            left_admitted[lbits] = 1;
            right_admitted[rbits] = 1;
            log_joint = log_add_exp(log_joint, -beta * (left_energy[lbits] + right_energy[rbits]));
        }
    }

    const auto marginal = [&](const std::vector<std::uint8_t>& admitted,
                              const std::vector<double>& energies) {
        double log_sum = -std::numeric_limits<double>::infinity();
        for (std::uint64_t bits = 0; bits < energies.size(); ++bits)
            if (admitted[bits]) log_sum = log_add_exp(log_sum, -beta * energies[bits]);
        return LogReal::from_log(log_sum);
    };
    return CrystalPair{marginal(left_admitted, left_energy),
                       marginal(right_admitted, right_energy),
                       LogReal::from_log(log_joint)};
}

namespace detail {

double energy_of_packed(std::uint64_t bits, int sites, const double* couplings,
                        bool left_plus, bool right_plus) {
    return energy_of_bits(bits, sites, couplings, left_plus, right_plus);
}

}  // namespace detail

}  // namespace pspchain
