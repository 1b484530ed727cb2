#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pspchain/coupling.hpp"
#include "test_support.hpp"

using namespace pspchain;

TEST_SUITE("coupling") {

TEST_CASE("built-in family values") {
    const auto ramp = CouplingFamily::sullivan25();
    CHECK(ramp.value(3) == 3.0);
    CHECK(ramp.value(-2) == 3.0);
    CHECK(ramp.value(0) == 1.0);
    CHECK(ramp.value(1) == 1.0);

    CHECK(CouplingFamily::constant(1.0).value(17) == 1.0);
    CHECK(CouplingFamily::constant(-0.5).value(-3) == -0.5);

    const auto abs_family = CouplingFamily::absolute_value();
    CHECK(abs_family.value(-5) == 5.0);
    CHECK(abs_family.value(0) == 0.0);
}

TEST_CASE("table lookup and extension rules") {
    const auto strict = CouplingFamily::table({{1, 0.7}, {2, 1.3}}, TableExtension::ErrorOutside);
    CHECK(strict.value(1) == 0.7);
    CHECK(strict.value(2) == 1.3);
    CHECK_THROWS_AS(strict.value(0), std::out_of_range);
    CHECK_THROWS_AS(strict.value(3), std::out_of_range);

    const auto mirrored = CouplingFamily::table({{1, 0.7}, {2, 1.3}}, TableExtension::SymmetricPair);
    CHECK(mirrored.value(0) == 0.7);   // partner of 1
    CHECK(mirrored.value(-1) == 1.3);  // partner of 2
    CHECK_THROWS_AS(mirrored.value(5), std::out_of_range);

    // a stored value wins over the mirror rule
    const auto both = CouplingFamily::table({{0, 9.0}, {1, 0.7}}, TableExtension::SymmetricPair);
    CHECK(both.value(0) == 9.0);
}

TEST_CASE("family spec parsing") {
    CHECK(parse_family_spec("sullivan25").value(4) == 4.0);
    CHECK(parse_family_spec("abs").value(-2) == 2.0);
    CHECK(parse_family_spec("const:1.5").value(0) == 1.5);
    CHECK_THROWS_AS(parse_family_spec("const:zzz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("const:1.5junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("gaussian"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("table:/nonexistent/file.csv"), std::invalid_argument);

    const char* path = "coupling_table_test.csv";
    {
        std::ofstream out(path);
        out << "# index,value\n1,0.7\n2, 1.3\n3\t2.2\n";
    }
    const auto strict = parse_family_spec(std::string("table:") + path);
    CHECK(strict.value(3) == 2.2);
    CHECK_THROWS_AS(strict.value(0), std::out_of_range);
    const auto mirrored = parse_family_spec(std::string("table:") + path + ";sym8");
    CHECK(mirrored.value(0) == 0.7);
    CHECK(mirrored.value(-2) == 2.2);
    std::remove(path);
}

TEST_CASE("growth condition scan") {
    CHECK(validate_growth_condition(CouplingFamily::absolute_value(), -10, 10, 10).ok());
    CHECK(validate_growth_condition(CouplingFamily::sullivan25(), -10, 10, 10).ok());

    const auto report = validate_growth_condition(CouplingFamily::constant(0.1), 0, 1, 2);
    CHECK_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.n == 0 && v.r == 2) {
            found = true;
            CHECK(v.sum == doctest::Approx(0.2));
        }
    CHECK(found);
}

TEST_CASE("reflection symmetry scan") {
    CHECK(validate_reflection_symmetry(CouplingFamily::sullivan25(), -8, 8).ok());
    CHECK(validate_reflection_symmetry(CouplingFamily::constant(2.5), -20, 20).ok());
    CHECK(validate_reflection_symmetry(testsupport::symmetric_table_family(), -9, 10).ok());

    const auto report = validate_reflection_symmetry(CouplingFamily::absolute_value(), 0, 1);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.size() == 2);  // both n=0 and n=1 expose I(0) != I(1)
    CHECK(report.violations[0].n == 0);
    CHECK(report.violations[0].value == 0.0);
    CHECK(report.violations[0].mirrored == 1.0);
}

TEST_CASE("summability diagnostic") {
    // constant couplings: linearly growing partial sums, no convergence
    const auto flat = summability_diagnostic(CouplingFamily::constant(1.0), 1.0, 20);
    REQUIRE(flat.partial_sums.size() == 20);
    const double step = flat.partial_sums[1] - flat.partial_sums[0];
    CHECK(flat.partial_sums[19] == doctest::Approx(20.0 * step).epsilon(1e-12));
    CHECK_FALSE(flat.looks_convergent);
    CHECK(flat.last_increment_ratio == doctest::Approx(1.0));

    // geometric tail: partial sums approach e^-2 / (1 - e^-2)
    const double limit = 0.15651764274966568;
    const auto ramp = summability_diagnostic(CouplingFamily::sullivan25(), 1.0, 50);
    CHECK(ramp.partial_sums.back() == doctest::Approx(limit).epsilon(1e-12));
    CHECK(ramp.looks_convergent);
    CHECK(ramp.last_increment_ratio == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    const auto abs_tail = summability_diagnostic(CouplingFamily::absolute_value(), 1.0, 50);
    CHECK(abs_tail.partial_sums.back() == doctest::Approx(limit).epsilon(1e-12));
    CHECK(abs_tail.looks_convergent);

    CHECK_THROWS_AS(summability_diagnostic(CouplingFamily::sullivan25(), 1.0, 0),
                    std::invalid_argument);
}

}  // TEST_SUITE
