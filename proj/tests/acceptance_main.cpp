// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line. The process exits non-zero if any criterion
// fails. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pspchain/coupling.hpp"
#include "pspchain/interface.hpp"
#include "pspchain/lattice.hpp"
#include "pspchain/partition.hpp"
#include "pspchain/psp.hpp"
#include "pspchain/sampler.hpp"

using namespace pspchain;

namespace {

double rel_log_gap(double got, double reference) {
    return std::abs(got - reference) / std::max(1.0, std::abs(reference));
}

CouplingFamily symmetric_table_family() {
    return CouplingFamily::table({{1, 0.7}, {2, 1.3}, {3, 2.2}, {4, 2.9}, {5, 4.1}, {6, 4.6},
                                  {7, 5.8}, {8, 6.9}, {9, 7.4}, {10, 8.8}},
                                 TableExtension::SymmetricPair);
}

std::vector<CouplingFamily> agreement_families() {
    return {CouplingFamily::sullivan25(), CouplingFamily::constant(1.0), symmetric_table_family()};
}

template <class Fn>
bool all_configs(int n, Fn&& fn) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n + 1);
    for (std::uint64_t bits = 0; bits < total; ++bits)
        if (!fn(SpinConfiguration::unpack(Volume{n}, bits))) return false;
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// 1. closed form vs exact enumeration across three families
bool criterion_partition_oracle(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& family : agreement_families())
        for (int n = 0; n <= 6; ++n)
            for (double beta : {0.25, 1.0, 4.0}) {
                const PartitionPair closed = closed_form_partition(family, beta, n);
                const double zp =
                    brute_force_partition(family, beta, n, BoundaryCondition::plus()).log();
                const double zpm =
                    brute_force_partition(family, beta, n, BoundaryCondition::pm()).log();
                worst = std::max(worst, std::abs(zp - closed.plus.log()));
                worst = std::max(worst, std::abs(zpm - closed.mixed.log()));
            }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "worst |dlog| " << worst << ", " << seconds << " s";
    detail = os.str();
    return worst <= 1e-10 && seconds < 10.0;
}

// 2. flipping the boundary leaves the sums unchanged for symmetric couplings
bool criterion_boundary_flip(std::string& detail) {
    double worst = 0.0;
    for (const auto& family : {CouplingFamily::sullivan25(), symmetric_table_family()})
        for (int n = 0; n <= 5; ++n)
            for (double beta : {0.5, 1.0, 2.0}) {
                const double zp =
                    brute_force_partition(family, beta, n, BoundaryCondition::plus()).log();
                const double zm =
                    brute_force_partition(family, beta, n, BoundaryCondition::minus()).log();
                const double zpm =
                    brute_force_partition(family, beta, n, BoundaryCondition::pm()).log();
                const double zmp =
                    brute_force_partition(family, beta, n, BoundaryCondition::mp()).log();
                worst = std::max(worst, rel_log_gap(zm, zp));
                worst = std::max(worst, rel_log_gap(zmp, zpm));
            }
    detail = "worst relative gap " + std::to_string(worst);
    return worst <= 1e-12;
}

// 3. flip-reflect invariances and the even distribution with zero mean
bool criterion_symmetry_suite(std::string& detail) {
    const auto family = CouplingFamily::sullivan25();
    for (int n = 0; n <= 4; ++n) {
        const bool invariant = all_configs(n, [&](const SpinConfiguration& c) {
            return energy_pm(c, family) == energy_pm(flip_reflected(c), family) &&
                   psp(flip_reflected(c)).twice == -psp(c).twice;
        });
        if (!invariant) {
            detail = "invariance failed at n=" + std::to_string(n);
            return false;
        }
        for (double beta : {0.5, 1.0, 2.0}) {
            const auto dist = psp_distribution(family, beta, n);
            const std::size_t size = dist.support.size();
            for (std::size_t i = 0; i < size; ++i)
                if (std::abs(dist.probability[i] - dist.probability[size - 1 - i]) > 1e-12) {
                    detail = "distribution asymmetry at n=" + std::to_string(n);
                    return false;
                }
            if (std::abs(psp_moments(dist).mean) > 1e-12) {
                detail = "nonzero mean at n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "exhaustive through n=4";
    return true;
}

// 4. the separation point always satisfies the necessary conditions, and
// the two-maximizer example resolves to +3/2
bool criterion_necessary_conditions(std::string& detail) {
    for (int n = 0; n <= 4; ++n)
        if (!all_configs(n, [&](const SpinConfiguration& c) {
                return psp_necessary_conditions(c, psp(c)).satisfied;
            })) {
            detail = "violated at n=" + std::to_string(n);
            return false;
        }
    const SpinConfiguration sig2(Volume{2}, {-1, -1, +1, -1, +1});
    const auto points = interface_points(sig2);
    int best = -1;
    for (const auto t : points) best = std::max(best, interface_stats(sig2, t).norm());
    std::vector<int> argmax;
    for (const auto t : points)
        if (interface_stats(sig2, t).norm() == best) argmax.push_back(t.twice);
    detail = "exhaustive through n=4; two-maximizer example resolved";
    return argmax == std::vector<int>{-1, 3} && psp(sig2).twice == 3;
}

// 5. island probabilities never exceed the coupling bound
bool criterion_contour_bound(std::string& detail) {
    double worst = -1e300;
    for (int n = 0; n <= 4; ++n)
        for (double beta : {0.5, 1.0, 2.0})
            for (int a = -n; a <= n; ++a)
                for (int b = a; b <= n; ++b) {
                    const auto r = contour_probability(CouplingFamily::sullivan25(), beta, n,
                                                       ContourQuery{a, b});
                    worst = std::max(worst, r.p_plus - r.bound);
                }
    detail = "worst p - bound = " + std::to_string(worst);
    return worst <= 1e-12;
}

// 6. crystal sums below rarefied sums, and the joint route resolves the
// distribution exactly
bool criterion_crystal_decomposition(std::string& detail) {
    const auto family = CouplingFamily::sullivan25();
    for (int n = 0; n <= 5; ++n)
        for (double beta : {1.0, 2.0}) {
            for (int t2 = -(2 * n + 1); t2 <= 2 * n + 1; t2 += 2) {
                const InterfaceIndex theta{t2};
                const auto crystal = crystal_partitions(family, beta, n, theta);
                if (crystal.left.log() > rarefied_left(family, beta, n, theta).aligned.log() + 1e-12 ||
                    crystal.right.log() > rarefied_right(family, beta, n, theta).aligned.log() + 1e-12) {
                    detail = "crystal exceeded rarefied at n=" + std::to_string(n);
                    return false;
                }
            }
            const auto report = decomposition_check(family, beta, n);
            if (std::abs(report.total_probability - 1.0) > 1e-12) {
                detail = "partition of unity off by " +
                         std::to_string(std::abs(report.total_probability - 1.0));
                return false;
            }
        }
    detail = "all volumes n=0..5";
    return true;
}

// 7. variance floor, low-temperature approach to 1/4, and the envelope
bool criterion_variance_envelope(std::string& detail) {
    const auto ramp = CouplingFamily::sullivan25();
    for (const auto& family : agreement_families())
        for (int n = 2; n <= 6; ++n)
            for (double beta : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
                const double var = psp_moments(psp_distribution(family, beta, n)).variance;
                if (var < 0.25 - 1e-12) {
                    detail = "variance below 1/4 for " + family.describe();
                    return false;
                }
            }
    for (int n = 2; n <= 6; ++n) {
        const double at_10 = psp_moments(psp_distribution(ramp, 10.0, n)).variance;
        const double at_20 = psp_moments(psp_distribution(ramp, 20.0, n)).variance;
        if (std::abs(at_10 - 0.25) > 1e-3 || std::abs(at_20 - 0.25) > 1e-6) {
            detail = "approach to 1/4 too slow at n=" + std::to_string(n);
            return false;
        }
        for (double beta : {5.0, 10.0, 20.0}) {
            const double var = psp_moments(psp_distribution(ramp, beta, n)).variance;
            const auto envelope = variance_envelope(beta);
            if (var > 1.1 * envelope.upper) {
                detail = "variance above envelope at beta=" + std::to_string(beta);
                return false;
            }
        }
    }
    detail = "floor, approach and envelope all hold";
    return true;
}

// 8. low-temperature concentration on the central pair
bool criterion_concentration(std::string& detail) {
    const auto dist = psp_distribution(CouplingFamily::sullivan25(), 10.0, 4);
    const double central =
        dist.probability_of(InterfaceIndex{1}) + dist.probability_of(InterfaceIndex{-1});
    detail = "P(+-1/2) = " + std::to_string(central);
    return central >= 0.99;
}

// 9. the homogeneous ratio decreases and reaches 1 by n = 40 (ulp-level
// ties allowed once the ratio saturates at 1 in double precision)
bool criterion_homogeneous_limit(std::string& detail) {
    const auto family = CouplingFamily::constant(1.0);
    double previous = 1e300;
    for (int n = 0; n <= 40; ++n) {
        const double ratio = ising_ratio(family, 1.0, n);
        if (ratio > previous * (1.0 + 1e-14) || ratio < 1.0 - 1e-14) {
            detail = "ratio not decreasing toward 1 at n=" + std::to_string(n);
            return false;
        }
        previous = ratio;
    }
    detail = "ratio(40) - 1 = " + std::to_string(previous - 1.0);
    return std::abs(previous - 1.0) <= 1e-3;
}

// 10. the sampler reproduces the exact distribution bucket by bucket
bool criterion_sampler_agreement(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto family = CouplingFamily::sullivan25();
    const int n = 4;
    const auto exact = psp_distribution(family, 1.0, n);
    const auto report = estimate_psp_distribution(
        family, 1.0, n, SamplerSchedule::defaults_for(n, 200000), 11);
    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < report.support.size(); ++i) {
        if (report.std_error[i] <= 0.0) {
            detail = "degenerate error bar in bucket " + std::to_string(i);
            return false;
        }
        worst_sigma = std::max(worst_sigma, std::abs(report.probability[i] - exact.probability[i]) /
                                                report.std_error[i]);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "worst deviation " << worst_sigma << " sigma, " << seconds << " s";
    detail = os.str();
    return worst_sigma <= 4.0 && seconds < 60.0;
}

// 11. byte-identical output files for repeated runs and any worker count
bool criterion_determinism(std::string& detail) {
#ifndef PSPCHAIN_CLI_PATH
    detail = "CLI path not wired in";
    return false;
#else
    const std::string cli = PSPCHAIN_CLI_PATH;
    const auto run = [&](const std::string& args) {
        return WEXITSTATUS(std::system((cli + " " + args).c_str())) == 0;
    };
    if (!run("sample --family sullivan25 --beta 1 --n 3 --sweeps 30000 --seed 7 --out acc_a.csv") ||
        !run("sample --family sullivan25 --beta 1 --n 3 --sweeps 30000 --seed 7 --out acc_b.csv")) {
        detail = "sample command failed";
        return false;
    }
    const bool sample_identical = slurp("acc_a.csv") == slurp("acc_b.csv");
    if (!run("psp-dist --family sullivan25 --beta 2 --n 6 --threads 1 --out acc_t1.csv") ||
        !run("psp-dist --family sullivan25 --beta 2 --n 6 --threads 3 --out acc_t3.csv")) {
        detail = "psp-dist command failed";
        return false;
    }
    const bool threads_identical = slurp("acc_t1.csv") == slurp("acc_t3.csv");
    if (!run("partition --family sullivan25 --beta-grid 0.5:8:7 --n-grid 0:5 --check --format json "
             "--out acc_p1.json") ||
        !run("partition --family sullivan25 --beta-grid 0.5:8:7 --n-grid 0:5 --check --format json "
             "--out acc_p2.json")) {
        detail = "partition command failed";
        return false;
    }
    const bool partition_identical = slurp("acc_p1.json") == slurp("acc_p2.json");
    for (const char* f : {"acc_a.csv", "acc_b.csv", "acc_t1.csv", "acc_t3.csv", "acc_p1.json",
                          "acc_p2.json"})
        std::remove(f);
    detail = "sample, threaded psp-dist and partition outputs byte-identical";
    return sample_identical && threads_identical && partition_identical;
#endif
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "partition oracle equivalence (three families, n <= 6)", criterion_partition_oracle},
        {2, "boundary flip symmetry of the exact sums", criterion_boundary_flip},
        {3, "flip-reflect invariance, even distribution, zero mean", criterion_symmetry_suite},
        {4, "necessary separation conditions, exhaustive", criterion_necessary_conditions},
        {5, "minus-island probability bound", criterion_contour_bound},
        {6, "crystal below rarefied and exact decomposition", criterion_crystal_decomposition},
        {7, "variance floor, approach to 1/4 and envelope", criterion_variance_envelope},
        {8, "low-temperature concentration on the central pair", criterion_concentration},
        {9, "homogeneous-chain ratio limit", criterion_homogeneous_limit},
        {10, "sampler agreement with the exact distribution", criterion_sampler_agreement},
        {11, "byte-identical reruns across seeds and worker counts", criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, detail.c_str());
        std::fflush(stdout);
        failures += !ok;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
