#pragma once

#include <stdexcept>

#include <cstdint>
#include <vector>

#include "pspchain/coupling.hpp"

namespace pspchain {

/// The finite window [-n, n] of the chain: 2n+1 sites.
struct Volume {
    int half_width = 0;

    int site_count() const { return 2 * half_width + 1; }
    bool contains(int x) const { return x >= -half_width && x <= half_width; }

    bool operator==(const Volume&) const = default;
};

/// Fixed spins outside the volume: `left` for every site < -n, `right`
/// for every site > n.
struct BoundaryCondition {
    int left;
    int right;

    static constexpr BoundaryCondition plus() { return {+1, +1}; }
    static constexpr BoundaryCondition minus() { return {-1, -1}; }
    /// minus phase on the left, plus phase on the right
    static constexpr BoundaryCondition pm() { return {-1, +1}; }
    static constexpr BoundaryCondition mp() { return {+1, -1}; }

    bool operator==(const BoundaryCondition&) const = default;
};

/// A half-integer position t between lattice sites, stored exactly as 2t.
/// For a volume of half-width n the admissible values are the odd integers
/// with |2t| <= 2n+1.
struct InterfaceIndex {
    int twice;

    double value() const { return 0.5 * twice; }
    int left_site() const { return (twice - 1) / 2; }   // exact: twice is odd
    int right_site() const { return (twice + 1) / 2; }

    auto operator<=>(const InterfaceIndex&) const = default;
};

/// Spins on a volume, values in {-1, +1}. Packed form: bit i of the index
/// holds the spin at site x = i - n, with a set bit meaning +1.
class SpinConfiguration {
public:
    SpinConfiguration(Volume volume, std::vector<int> spins);

    /// All sites set to `spin` (+1 or -1).
    static SpinConfiguration filled(Volume volume, int spin);
    static SpinConfiguration unpack(Volume volume, std::uint64_t bits);
    std::uint64_t pack() const;

    Volume volume() const { return volume_; }
    int half_width() const { return volume_.half_width; }

    int spin(int x) const {
        if (!volume_.contains(x)) throw std::out_of_range("site outside the volume");
        return spins_[static_cast<std::size_t>(x + volume_.half_width)];
    }
    void set_spin(int x, int s);

    /// Spin at any site of the chain, using the boundary condition for
    /// sites outside the volume.
    int extended_spin(int x, BoundaryCondition bc) const {
        if (x < -volume_.half_width) return bc.left;
        if (x > volume_.half_width) return bc.right;
        return spin(x);
    }

    int plus_count() const;

    bool operator==(const SpinConfiguration&) const = default;

private:
    Volume volume_;
    std::vector<int> spins_;  // index i holds the spin at site i - n
};

/// Energy of a configuration under a boundary condition: the sum of I(x)
/// over every disagreeing bond (x-1, x) with both endpoints in the volume,
/// plus I(-n) when sigma(-n) disagrees with the left boundary spin and
/// I(n+1) when sigma(n) disagrees with the right one.
double energy(const SpinConfiguration& config, const CouplingFamily& family, BoundaryCondition bc);

/// The mixed-boundary energy H_pm = energy(config, plus) + I(-n) * sigma(-n).
/// This coincides identically with energy(config, pm()): replacing the
/// left boundary indicator costs exactly I(-n) * sigma(-n).
double energy_pm(const SpinConfiguration& config, const CouplingFamily& family);

/// Global spin flip: sigma(x) -> -sigma(x).
SpinConfiguration flipped(const SpinConfiguration& config);
/// Spatial reflection: sigma(x) -> sigma(-x).
SpinConfiguration reflected(const SpinConfiguration& config);
/// Flip composed with reflection: sigma(x) -> -sigma(-x). Maps the set of
/// minus/plus-extended configurations onto itself and is an involution.
SpinConfiguration flip_reflected(const SpinConfiguration& config);

/// Transforms a boundary condition the way `flipped` transforms configurations.
inline BoundaryCondition flipped(BoundaryCondition bc) { return {-bc.left, -bc.right}; }
/// Transforms a boundary condition the way `reflected` does.
inline BoundaryCondition reflected(BoundaryCondition bc) { return {bc.right, bc.left}; }

}  // namespace pspchain
