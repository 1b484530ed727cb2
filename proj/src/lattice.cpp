#include "pspchain/lattice.hpp"

#include <stdexcept>

namespace pspchain {

namespace {
void check_spin(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("spin values must be +1 or -1");
}
}  // namespace

SpinConfiguration::SpinConfiguration(Volume volume, std::vector<int> spins)
    : volume_(volume), spins_(std::move(spins)) {
    if (volume_.half_width < 0) throw std::invalid_argument("volume half-width must be >= 0");
    if (spins_.size() != static_cast<std::size_t>(volume_.site_count()))
        throw std::invalid_argument("expected exactly 2n+1 spins");
    for (int s : spins_) check_spin(s);
}

SpinConfiguration SpinConfiguration::filled(Volume volume, int spin) {
    check_spin(spin);
    return SpinConfiguration(volume, std::vector<int>(static_cast<std::size_t>(volume.site_count()), spin));
}

SpinConfiguration SpinConfiguration::unpack(Volume volume, std::uint64_t bits) {
    const int sites = volume.site_count();
    if (sites > 63) throw std::invalid_argument("volume too large for 64-bit packing");
    if (sites < 63 && (bits >> sites) != 0)
        throw std::invalid_argument("packed configuration has bits beyond the volume");
    std::vector<int> spins(static_cast<std::size_t>(sites));
    for (int i = 0; i < sites; ++i) spins[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? +1 : -1;
    return SpinConfiguration(volume, std::move(spins));
}

std::uint64_t SpinConfiguration::pack() const {
    const int sites = volume_.site_count();
    if (sites > 63) throw std::invalid_argument("volume too large for 64-bit packing");
    std::uint64_t bits = 0;
    for (int i = 0; i < sites; ++i)
        if (spins_[static_cast<std::size_t>(i)] > 0) bits |= std::uint64_t{1} << i;
    return bits;
}

void SpinConfiguration::set_spin(int x, int s) {
    check_spin(s);
    if (!volume_.contains(x)) throw std::out_of_range("site outside the volume");
    spins_[static_cast<std::size_t>(x + volume_.half_width)] = s;
}

int SpinConfiguration::plus_count() const {
    int count = 0;
    for (int s : spins_) count += (s > 0);
    return count;
}

double energy(const SpinConfiguration& config, const CouplingFamily& family, BoundaryCondition bc) {
    const int n = config.half_width();
    double e = 0.0;
    for (int x = -n + 1; x <= n; ++x)
        if (config.spin(x - 1) != config.spin(x)) e += family.value(x);
    if (config.spin(-n) != bc.left) e += family.value(-n);
    if (config.spin(n) != bc.right) e += family.value(n + 1);
    return e;
}

double energy_pm(const SpinConfiguration& config, const CouplingFamily& family) {
    const int n = config.half_width();
    return energy(config, family, BoundaryCondition::plus()) +
           family.value(-n) * config.spin(-n);
}

SpinConfiguration flipped(const SpinConfiguration& config) {
    const int n = config.half_width();
    std::vector<int> spins;
    spins.reserve(static_cast<std::size_t>(config.volume().site_count()));
    for (int x = -n; x <= n; ++x) spins.push_back(-config.spin(x));
    return SpinConfiguration(config.volume(), std::move(spins));
}

SpinConfiguration reflected(const SpinConfiguration& config) {
    const int n = config.half_width();
    std::vector<int> spins;
    spins.reserve(static_cast<std::size_t>(config.volume().site_count()));
    for (int x = -n; x <= n; ++x) spins.push_back(config.spin(-x));
    return SpinConfiguration(config.volume(), std::move(spins));
}

SpinConfiguration flip_reflected(const SpinConfiguration& config) {
    const int n = config.half_width();
    std::vector<int> spins;
    spins.reserve(static_cast<std::size_t>(config.volume().site_count()));
    for (int x = -n; x <= n; ++x) spins.push_back(-config.spin(-x));
    return SpinConfiguration(config.volume(), std::move(spins));
}

}  // namespace pspchain
