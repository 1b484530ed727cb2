#pragma once

#include <vector>

#include "pspchain/lattice.hpp"

namespace pspchain {

/// Disagreement counts around a half-integer position t of a
/// minus/plus-extended configuration, restricted to the volume:
/// l_minus = minus spins left of t, r_plus = plus spins right of t,
/// and their complements. l_minus + r_plus is the score the
/// phase-separation point maximizes.
struct InterfaceStats {
    int l_minus;
    int r_plus;
    int l_plus;
    int r_minus;

    int norm() const { return l_minus + r_plus; }
};

/// Which half of the configuration space a configuration belongs to:
/// Plus when at least n+1 spins are +1 (2n+1 is odd, so the split is total).
enum class MajorityClass { Plus, Minus };

/// All half-integer positions t with |2t| <= 2n+1 where the two adjacent
/// spins of the minus/plus-extended configuration differ, ascending.
/// The list is never empty and always has odd length.
std::vector<InterfaceIndex> interface_points(const SpinConfiguration& config);

/// Counts around t (any position in T_n, interface or not).
InterfaceStats interface_stats(const SpinConfiguration& config, InterfaceIndex t);

MajorityClass majority_class(const SpinConfiguration& config);

/// The phase-separation point: among interface points of maximal score
/// l_minus + r_plus, the largest one when the configuration is in the
/// Minus class and the smallest when in the Plus class.
InterfaceIndex psp(const SpinConfiguration& config);

namespace detail {

/// Core of psp() on a raw site buffer (spins[i] = spin at site i - n),
/// returning 2t. Kept allocation-free for enumeration loops.
int psp_twice_of_span(const int* spins, int n);

}  // namespace detail

}  // namespace pspchain
