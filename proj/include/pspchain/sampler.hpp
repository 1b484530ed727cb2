#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pspchain/coupling.hpp"
#include "pspchain/interface.hpp"
#include "pspchain/lattice.hpp"

namespace pspchain {

/// Counter-style 64-bit generator (splitmix64). Small, seedable, and
/// fully specified, so runs are portable across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1) with 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static constexpr const char* name() { return "splitmix64"; }

private:
    std::uint64_t state_;
};

/// A single-site heat-bath chain targeting the Gibbs measure of the
/// volume under a fixed boundary condition. Sites are updated in a fixed
/// left-to-right order; each update resamples the spin from its exact
/// conditional. The running energy is maintained incrementally and
/// revalidated against a full recomputation every 1000 sweeps.
class ChainState {
public:
    ChainState(CouplingFamily family, double beta, int n, BoundaryCondition bc,
               std::uint64_t seed);

    /// One left-to-right heat-bath pass over all sites.
    void sweep();

    const SpinConfiguration& config() const { return config_; }
    const CouplingFamily& family() const { return family_; }
    double beta() const { return beta_; }
    BoundaryCondition boundary() const { return bc_; }
    long sweep_count() const { return sweeps_; }
    std::uint64_t seed() const { return seed_; }

    double cached_energy() const { return energy_; }
    double recompute_energy() const;

private:
    double coupling(int x) const { return couplings_[static_cast<std::size_t>(x + config_.half_width())]; }

    CouplingFamily family_;
    double beta_;
    BoundaryCondition bc_;
    SpinConfiguration config_;
    std::vector<double> couplings_;  // I(-n)..I(n+1)
    SplitMix64 rng_;
    std::uint64_t seed_;
    long sweeps_ = 0;
    double energy_;
};

struct SamplerSchedule {
    long sweeps;
    long burn_in;
    long thin;

    /// burn_in = 10 (2n+1), thin = 2n+1: a crude mixing heuristic.
    static SamplerSchedule defaults_for(int n, long sweeps);
};

/// Empirical distribution of the phase-separation point from a heat-bath
/// run under the minus/plus boundary, with batch-means standard errors.
struct EstimateReport {
    int n = 0;
    double beta = 0.0;
    std::string family;
    std::uint64_t seed = 0;
    std::string rng;
    long sweeps = 0;
    long burn_in = 0;
    long thin = 0;
    long n_samples = 0;  // samples actually used (whole batches only)

    std::vector<InterfaceIndex> support;
    std::vector<double> probability;
    std::vector<double> std_error;
};

/// Runs the chain for `schedule.sweeps` sweeps, recording the separation
/// point every `thin` sweeps after `burn_in`. Identical seed and schedule
/// give a bitwise-identical report.
EstimateReport estimate_psp_distribution(const CouplingFamily& family, double beta, int n,
                                         const SamplerSchedule& schedule, std::uint64_t seed);

/// Pools independently seeded runs of the same target (family, beta,
/// volume) into one estimate: probabilities combine weighted by sample
/// count and the error bars in quadrature with the same weights. The
/// merged report keeps the first run's seed and schedule fields; its
/// sweep and sample counts are the pooled totals.
EstimateReport merge_reports(const std::vector<EstimateReport>& reports);

}  // namespace pspchain
