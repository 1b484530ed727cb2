#include <doctest.h>

#include <cmath>

#include "pspchain/lattice.hpp"
#include "pspchain/sampler.hpp"
#include "test_support.hpp"

using namespace pspchain;

namespace {

template <class Fn>
void for_each_config(int n, Fn&& fn) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n + 1);
    for (std::uint64_t bits = 0; bits < total; ++bits)
        fn(SpinConfiguration::unpack(Volume{n}, bits));
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("packing round trip") {
    for (int n = 0; n <= 3; ++n)
        for_each_config(n, [](const SpinConfiguration& c) {
            CHECK(SpinConfiguration::unpack(c.volume(), c.pack()) == c);
        });
    // random spot checks at a larger volume
    SplitMix64 rng(123);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t bits = rng.next() & ((std::uint64_t{1} << 17) - 1);
        CHECK(SpinConfiguration::unpack(Volume{8}, bits).pack() == bits);
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(SpinConfiguration(Volume{1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SpinConfiguration(Volume{1}, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SpinConfiguration::unpack(Volume{1}, 8), std::invalid_argument);
    CHECK_THROWS_AS(SpinConfiguration::filled(Volume{1}, 2), std::invalid_argument);
    const auto c = SpinConfiguration::filled(Volume{1}, 1);
    CHECK_THROWS_AS(c.spin(5), std::exception);  // out of the volume
}

TEST_CASE("energy examples") {
    const auto one = CouplingFamily::constant(1.0);
    const auto ramp = CouplingFamily::sullivan25();

    CHECK(energy(SpinConfiguration::filled(Volume{0}, +1), one, BoundaryCondition::plus()) == 0.0);
    // a single down spin pays both boundary bonds
    CHECK(energy(SpinConfiguration::filled(Volume{0}, -1), ramp, BoundaryCondition::plus()) == 2.0);
    // two internal disagreements
    CHECK(energy(SpinConfiguration(Volume{1}, {+1, -1, +1}), one, BoundaryCondition::plus()) == 2.0);
}

TEST_CASE("energy matches the extended-bond oracle") {
    const CouplingFamily families[] = {CouplingFamily::sullivan25(),
                                       testsupport::symmetric_table_family(),
                                       CouplingFamily::absolute_value()};
    const BoundaryCondition bcs[] = {BoundaryCondition::plus(), BoundaryCondition::minus(),
                                     BoundaryCondition::pm(), BoundaryCondition::mp()};
    for (const auto& family : families)
        for (int n = 0; n <= 3; ++n)
            for_each_config(n, [&](const SpinConfiguration& c) {
                for (const auto bc : bcs)
                    CHECK(energy(c, family, bc) ==
                          doctest::Approx(testsupport::naive_energy(c, family, bc)).epsilon(1e-14));
            });
}

TEST_CASE("mixed-boundary energy") {
    const auto ramp = CouplingFamily::sullivan25();
    CHECK(energy_pm(SpinConfiguration::filled(Volume{0}, +1), ramp) == 1.0);
    CHECK(energy_pm(SpinConfiguration::filled(Volume{0}, -1), ramp) == 1.0);

    // the shifted-boundary form coincides with the pm-boundary energy,
    // configuration by configuration and for any coupling family
    for (const auto& family : {ramp, CouplingFamily::absolute_value()})
        for (int n = 0; n <= 4; ++n)
            for_each_config(n, [&](const SpinConfiguration& c) {
                CHECK(energy_pm(c, family) == energy(c, family, BoundaryCondition::pm()));
            });
}

TEST_CASE("symmetry maps") {
    const SpinConfiguration sig2(Volume{2}, {-1, -1, +1, -1, +1});
    const SpinConfiguration expected(Volume{2}, {-1, +1, -1, +1, +1});
    CHECK(flip_reflected(sig2) == expected);

    for (int n = 0; n <= 3; ++n)
        for_each_config(n, [&](const SpinConfiguration& c) {
            CHECK(flip_reflected(flip_reflected(c)) == c);
            CHECK(flipped(flipped(c)) == c);
            CHECK(reflected(reflected(c)) == c);
            CHECK(flip_reflected(c) == flipped(reflected(c)));
            CHECK(flip_reflected(c) == reflected(flipped(c)));
            // flip-reflection acts on the whole minus/plus-extended chain:
            // the extension of the image is the image of the extension
            const auto image = flip_reflected(c);
            const auto pm = BoundaryCondition::pm();
            for (int x = -n - 3; x <= n + 3; ++x)
                CHECK(image.extended_spin(x, pm) == -c.extended_spin(-x, pm));
        });
}

TEST_CASE("energy invariance under the symmetry maps") {
    const auto ramp = CouplingFamily::sullivan25();
    const auto table = testsupport::symmetric_table_family();
    const BoundaryCondition bcs[] = {BoundaryCondition::plus(), BoundaryCondition::minus(),
                                     BoundaryCondition::pm(), BoundaryCondition::mp()};
    for (int n = 0; n <= 4; ++n)
        for_each_config(n, [&](const SpinConfiguration& c) {
            for (const auto bc : bcs) {
                // a global flip with the boundary flipped preserves every bond
                CHECK(energy(c, ramp, bc) == energy(flipped(c), ramp, flipped(bc)));
                // reflection with the boundary reversed needs the symmetric couplings
                CHECK(energy(c, ramp, bc) == energy(reflected(c), ramp, reflected(bc)));
                CHECK(energy(c, table, bc) ==
                      doctest::Approx(energy(reflected(c), table, reflected(bc))).epsilon(1e-14));
            }
        });
    // consequently the mixed-boundary energy is flip-reflect invariant
    for (int n = 0; n <= 4; ++n)
        for_each_config(n, [&](const SpinConfiguration& c) {
            CHECK(energy_pm(c, ramp) == energy_pm(flip_reflected(c), ramp));
        });
}

}  // TEST_SUITE
