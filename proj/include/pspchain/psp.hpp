#pragma once

#include <string>
#include <vector>

#include "pspchain/coupling.hpp"
#include "pspchain/enumeration.hpp"
#include "pspchain/interface.hpp"
#include "pspchain/lattice.hpp"
#include "pspchain/partition.hpp"

namespace pspchain {

/// Exact distribution of the phase-separation point under the Gibbs
/// measure with minus/plus boundary. Support is all of T_n, ascending.
struct PspDistribution {
    int n = 0;
    double beta = 0.0;
    std::string family;
    bool family_symmetric = false;  // reflection symmetry held on the window

    std::vector<InterfaceIndex> support;
    std::vector<double> probability;
    std::vector<double> log_probability;
    double log_normalizer = 0.0;  // log of the mixed-boundary partition sum

    double probability_of(InterfaceIndex t) const;
};

struct Moments {
    double mean;
    double variance;
};

/// Enumerates every configuration, buckets the Gibbs weight by the
/// phase-separation point and normalizes. Warns via `family_symmetric`
/// when the reflection symmetry fails (the distribution is then not
/// guaranteed to be even).
PspDistribution psp_distribution(const CouplingFamily& family, double beta, int n,
                                 const EnumerationOptions& options = {});

/// Mean and variance of the separation point. When the distribution is
/// even the mean vanishes and the variance is the plain second moment.
Moments psp_moments(const PspDistribution& dist);

/// Large-beta envelope for the variance of the separation point under the
/// ramp family: a hard lower bound of 1/4 and an asymptotic upper bound
/// built from hyperbolic functions of tau = e^{-beta}. `asymptotic_regime`
/// flags beta >= 5, where the upper expression is meaningful.
struct VarianceEnvelope {
    double lower;
    double upper;
    bool asymptotic_regime;
};
VarianceEnvelope variance_envelope(double beta);

/// The series sum_{m>=1} (m+1/2)^2 tau^m truncated at m_max, next to two
/// closed forms: `closed_compact` = 3 tau (tau+3) / (4 (1-tau)^2), and
/// `closed_exact` assembled from the standard power sums. The compact
/// form does not reproduce the series; both are exposed on purpose and
/// only the exact one is asserted against the partial sum.
struct TailSeries {
    double partial;
    double closed_compact;
    double closed_exact;
};
TailSeries tail_series(double tau, int m_max);

/// Necessary conditions for an interface point to be the separation
/// point: strictly more minus than plus spins to its left and strictly
/// more plus than minus to its right, with the strictness relaxed on the
/// side that has no further interface. Satisfied by every actual
/// separation point, but not sufficient.
struct NecessaryConditionVerdict {
    bool satisfied;
    bool leftmost;   // t is the first interface point
    bool rightmost;  // t is the last interface point
    InterfaceStats stats;
};
NecessaryConditionVerdict psp_necessary_conditions(const SpinConfiguration& config,
                                                   InterfaceIndex t);

/// A connected run of sites [left, right] inside the volume.
struct ContourQuery {
    int left;
    int right;
};

struct ContourResult {
    double p_plus;  // probability that the run is a maximal minus-island
    double bound;   // e^{-beta (I(left) + I(right+1))}
};

/// Probability, under the all-plus boundary Gibbs measure, that B is a
/// maximal connected component of the minus-spin set, together with its
/// coupling-only upper bound.
ContourResult contour_probability(const CouplingFamily& family, double beta, int n,
                                  ContourQuery b, const EnumerationOptions& options = {});

/// Side-by-side evaluation of the crystal decomposition of P_n(theta)
/// for theta >= 1/2:
///   exact          bucketed enumeration
///   joint          crystal route (joint filter); must equal `exact`
///   product        product of per-side filtered sums (need not be exact)
///   rarefied_bound unrestricted sub-block bound; always >= exact
struct DecompositionRow {
    InterfaceIndex theta;
    double exact;
    double joint;
    double product;
    double rarefied_bound;
};

struct DecompositionReport {
    std::vector<DecompositionRow> rows;
    double total_probability;    // joint route summed over all of T_n
    double max_exact_joint_gap;  // largest |exact - joint| over the rows
    double max_product_excess;   // largest product - exact (factorization gap)
};

/// Throws std::logic_error if the joint route disagrees with the exact
/// distribution beyond 1e-12 or the rarefied bound is ever undershot;
/// the product-form gap is reported, never asserted.
DecompositionReport decomposition_check(const CouplingFamily& family, double beta, int n,
                                        const EnumerationOptions& options = {});

}  // namespace pspchain
