#pragma once

#include <vector>

#include "pspchain/coupling.hpp"
#include "pspchain/enumeration.hpp"
#include "pspchain/lattice.hpp"
#include "pspchain/log_real.hpp"

namespace pspchain {

/// The two statistical sums of the volume [-n, n]: `plus` under the
/// all-plus boundary, `mixed` under the minus/plus boundary.
struct PartitionPair {
    LogReal plus;
    LogReal mixed;
};

/// Sub-block partition functions next to a prescribed interface position:
/// `aligned` keeps the block's outer boundary spin equal to the phase it
/// belongs to, `flipped` reverses it.
struct RarefiedPair {
    LogReal aligned;
    LogReal flipped;
};

/// Restricted ("crystal") sub-block sums for a prescribed interface
/// position theta. `joint` is the exact sum over admissible (left, right)
/// block pairs of the product of their Gibbs weights; `left`/`right` are
/// the per-side sums over blocks that appear in at least one admissible
/// pair. All are zero() when the admissible set is empty.
struct CrystalPair {
    LogReal left;
    LogReal right;
    LogReal joint;
};

/// Closed-form partition pair from the two telescoping products over the
/// couplings I(1)..I(n+1). Requires the reflection symmetry I(m) == I(1-m)
/// on the window [-n, n+1]; throws std::domain_error with the first
/// violation otherwise.
PartitionPair closed_form_partition(const CouplingFamily& family, double beta, int n);

/// The two-term volume recursion, returning the pair for every half-width
/// m = 0..n. Same symmetry precondition as the closed form; the final
/// entry agrees with it to ~1e-10 in log space.
std::vector<PartitionPair> recursive_partition(const CouplingFamily& family, double beta, int n);

/// Exact log-sum-exp over all 2^(2n+1) configurations under the given
/// boundary condition, using the deterministic chunked reduction. Valid
/// for any coupling family; subject to the enumeration cap.
LogReal brute_force_partition(const CouplingFamily& family, double beta, int n,
                              BoundaryCondition bc, const EnumerationOptions& options = {});

/// Z_plus / Z_mixed for a constant family (the homogeneous chain), where
/// the ratio decreases to 1 as the volume grows.
double ising_ratio(const CouplingFamily& family, double beta, int n);

/// Rarefied partition functions of the right block [theta+3/2, n]:
/// aligned = plus boundary spins on both sides, flipped = minus on the
/// outer (right) side. theta must lie in T_n.
RarefiedPair rarefied_right(const CouplingFamily& family, double beta, int n, InterfaceIndex theta);

/// Rarefied partition functions of the left block [-n, theta-3/2]:
/// aligned = minus boundary spins on both sides, flipped = plus on the
/// outer (left) side.
RarefiedPair rarefied_left(const CouplingFamily& family, double beta, int n, InterfaceIndex theta);

/// Crystal sums for theta: both blocks are enumerated jointly and a pair
/// is admitted iff the assembled configuration (with the two fixed spins
/// -1 at theta-1/2 and +1 at theta+1/2) has its phase-separation point
/// exactly at theta.
CrystalPair crystal_partitions(const CouplingFamily& family, double beta, int n,
                               InterfaceIndex theta, const EnumerationOptions& options = {});

namespace detail {

/// Partition function of the sites [a, b] with fixed outer spins
/// (left_bc at a-1 via coupling I(a), right_bc at b+1 via I(b+1)),
/// as the half-sum/half-difference of the two transfer products over
/// I(a)..I(b+1). Handles the empty block b == a-1 (one bridging bond)
/// and b == a-2 (no bond at all).
RarefiedPair block_partition(const CouplingFamily& family, double beta, long a, long b);

void require_in_interface_range(InterfaceIndex theta, int n);

/// Energy of a packed configuration (bit i = spin at site i - n, set means
/// +1) against a dense coupling cache couplings[j] = I(j - n), j = 0..2n+1.
double energy_of_packed(std::uint64_t bits, int sites, const double* couplings,
                        bool left_plus, bool right_plus);

}  // namespace detail

}  // namespace pspchain
