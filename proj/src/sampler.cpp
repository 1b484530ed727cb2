#include "pspchain/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pspchain {

namespace {

/// Deterministic start: left phase on the negative half, right phase from
/// the center on, i.e. the pure two-phase state matching the boundary.
SpinConfiguration initial_configuration(Volume volume, BoundaryCondition bc) {
    std::vector<int> spins;
    spins.reserve(static_cast<std::size_t>(volume.site_count()));
    for (int x = -volume.half_width; x <= volume.half_width; ++x)
        spins.push_back(x < 0 ? bc.left : bc.right);
    return SpinConfiguration(volume, std::move(spins));
}

}  // namespace

ChainState::ChainState(CouplingFamily family, double beta, int n, BoundaryCondition bc,
                       std::uint64_t seed)
    : family_(std::move(family)),
      beta_(beta),
      bc_(bc),
      config_(initial_configuration(Volume{n}, bc)),
      couplings_(family_.values(-n, n + 1)),
      rng_(seed),
      seed_(seed),
      energy_(0.0) {
    if (beta < 0.0) throw std::invalid_argument("beta must be non-negative");
    if (n < 0) throw std::invalid_argument("half-width must be >= 0");
    energy_ = recompute_energy();
}

double ChainState::recompute_energy() const {
    return energy(config_, family_, bc_);
}

void ChainState::sweep() {
    const int n = config_.half_width();
    for (int x = -n; x <= n; ++x) {
        const int left = x > -n ? config_.spin(x - 1) : bc_.left;
        const int right = x < n ? config_.spin(x + 1) : bc_.right;
        // local disagreement cost of placing spin s at x; the conditional
        // depends only on the cost gap, which keeps it finite at any beta
        const double cost_plus = (left != +1) * coupling(x) + (right != +1) * coupling(x + 1);
        const double cost_minus = (left != -1) * coupling(x) + (right != -1) * coupling(x + 1);
        const double p_plus = 1.0 / (1.0 + std::exp(-beta_ * (cost_minus - cost_plus)));
        const int old_spin = config_.spin(x);
        const int new_spin = rng_.next_double() < p_plus ? +1 : -1;
        if (new_spin != old_spin) {
            const double old_cost = old_spin > 0 ? cost_plus : cost_minus;
            const double new_cost = new_spin > 0 ? cost_plus : cost_minus;
            energy_ += new_cost - old_cost;
            config_.set_spin(x, new_spin);
        }
    }
    ++sweeps_;
    if (sweeps_ % 1000 == 0) {
        const double exact = recompute_energy();
        if (std::abs(exact - energy_) > 1e-9) {
            std::ostringstream os;
            os << "incremental energy drifted from the recomputed value: " << energy_
               << " vs " << exact;
            throw std::logic_error(os.str());
        }
        energy_ = exact;
    }
}

SamplerSchedule SamplerSchedule::defaults_for(int n, long sweeps) {
    const long sites = 2L * n + 1;
    return SamplerSchedule{sweeps, 10 * sites, sites};
}

EstimateReport estimate_psp_distribution(const CouplingFamily& family, double beta, int n,
                                         const SamplerSchedule& schedule, std::uint64_t seed) {
    if (schedule.burn_in < 0 || schedule.sweeps <= schedule.burn_in)
        throw std::invalid_argument("sampler schedule requires sweeps > burn_in >= 0");
    if (schedule.thin < 1) throw std::invalid_argument("sampler schedule requires thin >= 1");

    ChainState chain(family, beta, n, BoundaryCondition::pm(), seed);
    std::vector<int> samples;  // bucket index per recorded sweep
    samples.reserve(static_cast<std::size_t>((schedule.sweeps - schedule.burn_in) / schedule.thin + 1));
    for (long s = 1; s <= schedule.sweeps; ++s) {
        chain.sweep();
        if (s > schedule.burn_in && (s - schedule.burn_in) % schedule.thin == 0) {
            const int t2 = psp(chain.config()).twice;
            samples.push_back((t2 + 2 * n + 1) / 2);
        }
    }
    if (samples.empty())
        throw std::invalid_argument("sampler schedule produced no samples");

    // batch means: batch length ~ sqrt(m); only whole batches are used so
    // the point estimates and the error bars describe the same samples
    const long m_all = static_cast<long>(samples.size());
    const long batch_len = std::max(1L, static_cast<long>(std::sqrt(static_cast<double>(m_all))));
    const long n_batches = m_all / batch_len;
    const long m_used = n_batches * batch_len;

    const int buckets = 2 * n + 2;
    std::vector<long> counts(static_cast<std::size_t>(buckets), 0);
    for (long i = 0; i < m_used; ++i) ++counts[static_cast<std::size_t>(samples[static_cast<std::size_t>(i)])];

    EstimateReport report;
    report.n = n;
    report.beta = beta;
    report.family = family.describe();
    report.seed = seed;
    report.rng = SplitMix64::name();
    report.sweeps = schedule.sweeps;
    report.burn_in = schedule.burn_in;
    report.thin = schedule.thin;
    report.n_samples = m_used;
    report.support.reserve(static_cast<std::size_t>(buckets));
    for (int t2 = -(2 * n + 1); t2 <= 2 * n + 1; t2 += 2) report.support.push_back({t2});

    report.probability.resize(static_cast<std::size_t>(buckets));
    report.std_error.resize(static_cast<std::size_t>(buckets));
    for (int k = 0; k < buckets; ++k) {
        const double p_hat =
            static_cast<double>(counts[static_cast<std::size_t>(k)]) / static_cast<double>(m_used);
        double ss = 0.0;
        for (long b = 0; b < n_batches; ++b) {
            long hits = 0;
            for (long i = b * batch_len; i < (b + 1) * batch_len; ++i)
                hits += samples[static_cast<std::size_t>(i)] == k;
            const double batch_mean = static_cast<double>(hits) / static_cast<double>(batch_len);
            ss += (batch_mean - p_hat) * (batch_mean - p_hat);
        }
        const double se = n_batches > 1
                              ? std::sqrt(ss / (static_cast<double>(n_batches) *
                                                static_cast<double>(n_batches - 1)))
                              : 0.0;
        report.probability[static_cast<std::size_t>(k)] = p_hat;
        report.std_error[static_cast<std::size_t>(k)] = se;
    }
    return report;
}

EstimateReport merge_reports(const std::vector<EstimateReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("merge_reports: no reports given");
    EstimateReport merged = reports.front();
    for (const auto& r : reports) {
        if (r.n != merged.n || r.beta != merged.beta || r.family != merged.family)
            throw std::invalid_argument("merge_reports: reports target different ensembles");
        if (r.support.size() != merged.support.size())
            throw std::invalid_argument("merge_reports: mismatched supports");
        if (r.n_samples <= 0) throw std::invalid_argument("merge_reports: empty report");
    }
    if (reports.size() == 1) return merged;

    double total_samples = 0.0;
    long total_sweeps = 0;
    for (const auto& r : reports) {
        total_samples += static_cast<double>(r.n_samples);
        total_sweeps += r.sweeps;
    }
    for (std::size_t k = 0; k < merged.support.size(); ++k) {
        double p = 0.0;
        double var = 0.0;
        for (const auto& r : reports) {
            const double w = static_cast<double>(r.n_samples) / total_samples;
            p += w * r.probability[k];
            var += w * w * r.std_error[k] * r.std_error[k];
        }
        merged.probability[k] = p;
        merged.std_error[k] = std::sqrt(var);
    }
    merged.sweeps = total_sweeps;
    merged.n_samples = static_cast<long>(total_samples);
    return merged;
}

}  // namespace pspchain
