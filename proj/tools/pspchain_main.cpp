// pspchain: exact partition functions, phase-separation-point statistics
// and Monte Carlo estimation for the one-dimensional spin chain with
// site-dependent bond couplings.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pspchain/coupling.hpp"
#include "pspchain/interface.hpp"
#include "pspchain/lattice.hpp"
#include "pspchain/partition.hpp"
#include "pspchain/psp.hpp"
#include "pspchain/sampler.hpp"
#include "pspchain/table_io.hpp"

namespace {

using namespace pspchain;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string family_spec = "sullivan25";
    std::optional<double> beta;
    std::string beta_grid;
    std::optional<int> n;
    std::string n_grid;
    std::string out;
    std::string format = "csv";
    int cap = kDefaultEnumerationCap;
    unsigned threads = 1;
    bool check = false;
    long sweeps = 0;
    long burn_in = -1;
    long thin = -1;
    std::uint64_t seed = 1;
};

std::vector<int> parse_n_values(const RunConfig& cfg) {
    if (cfg.n && !cfg.n_grid.empty())
        throw std::invalid_argument("give either --n or --n-grid, not both");
    if (cfg.n) {
        if (*cfg.n < 0) throw std::invalid_argument("--n must be >= 0");
        return {*cfg.n};
    }
    if (cfg.n_grid.empty()) throw std::invalid_argument("one of --n or --n-grid is required");
    const auto colon = cfg.n_grid.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--n-grid expects start:stop (inclusive integers)");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(cfg.n_grid.substr(0, colon));
        hi = std::stoi(cfg.n_grid.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--n-grid expects start:stop (inclusive integers)");
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("--n-grid requires 0 <= start <= stop");
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
}

std::vector<double> parse_beta_values(const RunConfig& cfg) {
    if (cfg.beta && !cfg.beta_grid.empty())
        throw std::invalid_argument("give either --beta or --beta-grid, not both");
    if (cfg.beta) {
        if (*cfg.beta <= 0.0) throw std::invalid_argument("--beta must be positive");
        return {*cfg.beta};
    }
    if (cfg.beta_grid.empty()) throw std::invalid_argument("one of --beta or --beta-grid is required");
    const auto c1 = cfg.beta_grid.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : cfg.beta_grid.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("--beta-grid expects start:stop:count (geometric spacing)");
    double lo = 0.0, hi = 0.0;
    long count = 0;
    try {
        lo = std::stod(cfg.beta_grid.substr(0, c1));
        hi = std::stod(cfg.beta_grid.substr(c1 + 1, c2 - c1 - 1));
        count = std::stol(cfg.beta_grid.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--beta-grid expects start:stop:count (geometric spacing)");
    }
    if (lo <= 0.0 || hi < lo || count < 1)
        throw std::invalid_argument("--beta-grid requires 0 < start <= stop and count >= 1");
    std::vector<double> values;
    if (count == 1) {
        values.push_back(lo);
        return values;
    }
    const double ratio = std::pow(hi / lo, 1.0 / static_cast<double>(count - 1));
    double v = lo;
    for (long i = 0; i < count; ++i) {
        values.push_back(i + 1 == count ? hi : v);
        v *= ratio;
    }
    return values;
}

double rel_log_disagreement(double got, double reference) {
    return std::abs(got - reference) / std::max(1.0, std::abs(reference));
}

int cmd_partition(const RunConfig& cfg) {
    const CouplingFamily family = parse_family_spec(cfg.family_spec);
    const auto n_values = parse_n_values(cfg);
    const auto beta_values = parse_beta_values(cfg);
    const OutputFormat format = parse_output_format(cfg.format);
    const EnumerationOptions options{cfg.cap, cfg.threads};

    Table table;
    table.columns = {"n", "beta", "log_Zplus", "log_Zpm", "ratio", "method", "rel_disagreement"};
    for (int n : n_values) {
        for (double beta : beta_values) {
            const PartitionPair closed = closed_form_partition(family, beta, n);
            const double lp = closed.plus.log();
            const double lm = closed.mixed.log();
            double closed_disagreement = std::numeric_limits<double>::quiet_NaN();
            struct MethodRow {
                const char* method;
                double lp, lm, dis;
            };
            std::vector<MethodRow> method_rows;
            if (cfg.check) {
                const PartitionPair rec = recursive_partition(family, beta, n).back();
                const double blp =
                    brute_force_partition(family, beta, n, BoundaryCondition::plus(), options).log();
                const double blm =
                    brute_force_partition(family, beta, n, BoundaryCondition::pm(), options).log();
                const double rec_dis = std::max(rel_log_disagreement(rec.plus.log(), lp),
                                                rel_log_disagreement(rec.mixed.log(), lm));
                const double brute_dis = std::max(rel_log_disagreement(blp, lp),
                                                  rel_log_disagreement(blm, lm));
                closed_disagreement = std::max(rec_dis, brute_dis);
                method_rows.push_back({"recursive", rec.plus.log(), rec.mixed.log(), rec_dis});
                method_rows.push_back({"brute", blp, blm, brute_dis});
            }
            table.add_row({static_cast<long long>(n), beta, lp, lm, std::exp(lp - lm),
                           std::string("closed"), closed_disagreement});
            for (const auto& row : method_rows)
                table.add_row({static_cast<long long>(n), beta, row.lp, row.lm,
                               std::exp(row.lp - row.lm), std::string(row.method), row.dis});
        }
    }
    write_table(table, cfg.out, format);
    return 0;
}

int cmd_psp_dist(const RunConfig& cfg) {
    const CouplingFamily family = parse_family_spec(cfg.family_spec);
    if (!cfg.beta) throw std::invalid_argument("--beta is required");
    if (!cfg.n) throw std::invalid_argument("--n is required");
    const OutputFormat format = parse_output_format(cfg.format);
    const PspDistribution dist =
        psp_distribution(family, *cfg.beta, *cfg.n, EnumerationOptions{cfg.cap, cfg.threads});
    if (!dist.family_symmetric)
        std::cerr << "warning: family breaks the reflection symmetry I(m) == I(1-m); "
                     "the distribution need not be even\n";

    Table table;
    if (format == OutputFormat::Csv) {
        table.columns = {"twice_theta", "theta", "probability"};
        for (std::size_t i = 0; i < dist.support.size(); ++i)
            table.add_row({static_cast<long long>(dist.support[i].twice),
                           dist.support[i].value(), dist.probability[i]});
    } else {
        table.columns = {"twice_theta", "probability", "log_weight"};
        for (std::size_t i = 0; i < dist.support.size(); ++i)
            table.add_row({static_cast<long long>(dist.support[i].twice), dist.probability[i],
                           dist.log_probability[i]});
    }
    write_table(table, cfg.out, format);
    return 0;
}

int cmd_variance_sweep(const RunConfig& cfg) {
    const CouplingFamily family = parse_family_spec(cfg.family_spec);
    if (!cfg.n) throw std::invalid_argument("--n is required");
    const auto beta_values = parse_beta_values(cfg);
    const OutputFormat format = parse_output_format(cfg.format);
    const EnumerationOptions options{cfg.cap, cfg.threads};

    Table table;
    table.columns = {"beta", "variance", "lower_bound", "theorem9_upper", "in_envelope"};
    for (double beta : beta_values) {
        const Moments moments = psp_moments(psp_distribution(family, beta, *cfg.n, options));
        const VarianceEnvelope envelope = variance_envelope(beta);
        const bool in_envelope =
            moments.variance >= envelope.lower - 1e-12 &&
            (!envelope.asymptotic_regime || moments.variance <= 1.1 * envelope.upper);
        table.add_row({beta, moments.variance, envelope.lower, envelope.upper, in_envelope});
    }
    write_table(table, cfg.out, format);
    return 0;
}

int cmd_sample(const RunConfig& cfg) {
    const CouplingFamily family = parse_family_spec(cfg.family_spec);
    if (!cfg.beta) throw std::invalid_argument("--beta is required");
    if (!cfg.n) throw std::invalid_argument("--n is required");
    if (cfg.sweeps <= 0) throw std::invalid_argument("--sweeps is required and must be positive");
    const OutputFormat format = parse_output_format(cfg.format);

    SamplerSchedule schedule = SamplerSchedule::defaults_for(*cfg.n, cfg.sweeps);
    if (cfg.burn_in != -1) schedule.burn_in = cfg.burn_in;  // -1 keeps the default
    if (cfg.thin != -1) schedule.thin = cfg.thin;
    const EstimateReport report =
        estimate_psp_distribution(family, *cfg.beta, *cfg.n, schedule, cfg.seed);

    Table table;
    if (format == OutputFormat::Csv) {
        table.columns = {"twice_theta", "theta", "probability", "stderr", "n_samples", "seed"};
        for (std::size_t i = 0; i < report.support.size(); ++i)
            table.add_row({static_cast<long long>(report.support[i].twice),
                           report.support[i].value(), report.probability[i], report.std_error[i],
                           static_cast<long long>(report.n_samples),
                           static_cast<long long>(report.seed)});
    } else {
        table.columns = {"twice_theta", "probability", "log_weight", "stderr", "n_samples", "seed"};
        for (std::size_t i = 0; i < report.support.size(); ++i)
            table.add_row({static_cast<long long>(report.support[i].twice), report.probability[i],
                           std::log(report.probability[i]), report.std_error[i],
                           static_cast<long long>(report.n_samples),
                           static_cast<long long>(report.seed)});
    }
    write_table(table, cfg.out, format);
    return 0;
}

// ---------------------------------------------------------------------------
// verification suite

struct Check {
    std::string name;
    bool passed;
};

int cmd_verify(const RunConfig& cfg) {
    const CouplingFamily family = parse_family_spec(cfg.family_spec);
    const EnumerationOptions options{cfg.cap, cfg.threads};
    const std::vector<double> betas{0.5, 1.0, 2.0};
    const int n_max = 4;
    std::vector<Check> checks;

    const auto for_each_config = [&](int n, auto&& fn) {
        const std::uint64_t total = std::uint64_t{1} << (2 * n + 1);
        for (std::uint64_t bits = 0; bits < total; ++bits)
            fn(SpinConfiguration::unpack(Volume{n}, bits));
    };

    checks.push_back({"partition_cross_method_agreement", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : {0.25, 1.0, 4.0}) {
                const PartitionPair closed = closed_form_partition(family, beta, n);
                const PartitionPair rec = recursive_partition(family, beta, n).back();
                const double bp =
                    brute_force_partition(family, beta, n, BoundaryCondition::plus(), options).log();
                const double bm =
                    brute_force_partition(family, beta, n, BoundaryCondition::pm(), options).log();
                if (rel_log_disagreement(rec.plus.log(), closed.plus.log()) > 1e-10) return false;
                if (rel_log_disagreement(rec.mixed.log(), closed.mixed.log()) > 1e-10) return false;
                if (rel_log_disagreement(bp, closed.plus.log()) > 1e-10) return false;
                if (rel_log_disagreement(bm, closed.mixed.log()) > 1e-10) return false;
            }
        return true;
    }()});

    checks.push_back({"boundary_flip_symmetry", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : betas) {
                const double zp =
                    brute_force_partition(family, beta, n, BoundaryCondition::plus(), options).log();
                const double zm =
                    brute_force_partition(family, beta, n, BoundaryCondition::minus(), options).log();
                const double zpm =
                    brute_force_partition(family, beta, n, BoundaryCondition::pm(), options).log();
                const double zmp =
                    brute_force_partition(family, beta, n, BoundaryCondition::mp(), options).log();
                if (rel_log_disagreement(zm, zp) > 1e-12) return false;
                if (rel_log_disagreement(zmp, zpm) > 1e-12) return false;
            }
        return true;
    }()});

    checks.push_back({"contour_probability_bound", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : betas)
                for (int a = -n; a <= n; ++a)
                    for (int b = a; b <= n; ++b) {
                        const ContourResult r =
                            contour_probability(family, beta, n, ContourQuery{a, b}, options);
                        if (r.p_plus > r.bound * (1.0 + 1e-9)) return false;
                    }
        return true;
    }()});

    checks.push_back({"mixed_energy_flip_reflect_invariance", [&] {
        for (int n = 0; n <= n_max; ++n) {
            bool ok = true;
            for_each_config(n, [&](const SpinConfiguration& c) {
                if (energy_pm(c, family) != energy_pm(flip_reflected(c), family)) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }()});

    checks.push_back({"psp_antisymmetry_under_flip_reflect", [&] {
        for (int n = 0; n <= n_max; ++n) {
            bool ok = true;
            for_each_config(n, [&](const SpinConfiguration& c) {
                if (psp(flip_reflected(c)).twice != -psp(c).twice) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }()});

    checks.push_back({"psp_distribution_symmetry", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : betas) {
                const PspDistribution d = psp_distribution(family, beta, n, options);
                const std::size_t size = d.support.size();
                for (std::size_t i = 0; i < size; ++i)
                    if (std::abs(d.probability[i] - d.probability[size - 1 - i]) > 1e-12)
                        return false;
            }
        return true;
    }()});

    checks.push_back({"psp_distribution_zero_mean", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : betas)
                if (std::abs(psp_moments(psp_distribution(family, beta, n, options)).mean) > 1e-12)
                    return false;
        return true;
    }()});

    checks.push_back({"psp_necessary_conditions_exhaustive", [&] {
        for (int n = 0; n <= n_max; ++n) {
            bool ok = true;
            for_each_config(n, [&](const SpinConfiguration& c) {
                if (!psp_necessary_conditions(c, psp(c)).satisfied) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }()});

    checks.push_back({"crystal_below_rarefied", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : {1.0, 2.0})
                for (int t2 = -(2 * n + 1); t2 <= 2 * n + 1; t2 += 2) {
                    const InterfaceIndex theta{t2};
                    const CrystalPair crystal =
                        crystal_partitions(family, beta, n, theta, options);
                    const RarefiedPair left = rarefied_left(family, beta, n, theta);
                    const RarefiedPair right = rarefied_right(family, beta, n, theta);
                    if (!crystal.left.is_zero() &&
                        crystal.left.log() > left.aligned.log() + 1e-12)
                        return false;
                    if (!crystal.right.is_zero() &&
                        crystal.right.log() > right.aligned.log() + 1e-12)
                        return false;
                }
        return true;
    }()});

    checks.push_back({"psp_distribution_normalization", [&] {
        for (int n = 0; n <= n_max; ++n)
            for (double beta : betas) {
                const PspDistribution d = psp_distribution(family, beta, n, options);
                double total = 0.0;
                for (double p : d.probability) total += p;
                if (std::abs(total - 1.0) > 1e-12) return false;
            }
        return true;
    }()});

    checks.push_back({"crystal_partition_of_unity", [&] {
        for (int n = 1; n <= n_max; ++n)
            for (double beta : betas)
                if (std::abs(decomposition_check(family, beta, n, options).total_probability - 1.0) >
                    1e-12)
                    return false;
        return true;
    }()});

    checks.push_back({"majority_classes_swap_under_flip_reflect", [&] {
        for (int n = 0; n <= n_max; ++n) {
            bool ok = true;
            std::uint64_t plus_count = 0;
            for_each_config(n, [&](const SpinConfiguration& c) {
                const MajorityClass mc = majority_class(c);
                if (mc == MajorityClass::Plus) ++plus_count;
                if (majority_class(flip_reflected(c)) == mc) ok = false;
            });
            if (!ok || plus_count != std::uint64_t{1} << (2 * n)) return false;
        }
        return true;
    }()});

    std::cout << "pspchain verification suite (family " << family.describe()
              << ", volumes n <= " << n_max << ")\n";
    bool all = true;
    for (const auto& check : checks) {
        std::cout << (check.passed ? "PASS  " : "FAIL  ") << check.name << "\n";
        all = all && check.passed;
    }
    std::cout << "coverage: " << checks.size() << " checks executed\n";
    std::cout << "overall: " << (all ? "PASS" : "FAIL") << "\n";
    return all ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and Monte Carlo phase-separation-point computations for the "
                 "one-dimensional chain with site-dependent couplings"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env_cap = std::getenv("PSPCHAIN_CAP")) {
        try {
            cfg.cap = std::stoi(env_cap);
        } catch (const std::exception&) {
            std::cerr << "error: PSPCHAIN_CAP is not an integer\n";
            return kExitUsage;
        }
    }

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family_spec,
                        "coupling family: const:<I> | abs | sullivan25 | table:<csv>[;sym8]");
        sub->add_option("--out", cfg.out, "output path (stdout when omitted)");
        sub->add_option("--format", cfg.format, "output format: csv | json");
        sub->add_option("--cap", cfg.cap,
                        "enumeration cap on the half-width (PSPCHAIN_CAP overrides the default)");
        sub->add_option("--threads", cfg.threads, "worker threads for enumerations");
    };

    CLI::App* partition = app.add_subcommand(
        "partition", "partition sums by closed form (optionally recursive and brute force)");
    add_common(partition);
    partition->add_option("--beta", cfg.beta, "inverse temperature");
    partition->add_option("--beta-grid", cfg.beta_grid, "geometric grid start:stop:count");
    partition->add_option("--n", cfg.n, "volume half-width");
    partition->add_option("--n-grid", cfg.n_grid, "inclusive integer grid start:stop");
    partition->add_flag("--check", cfg.check,
                        "also run the recursion and the exact enumeration and report disagreement");

    CLI::App* psp_dist =
        app.add_subcommand("psp-dist", "exact distribution of the phase-separation point");
    add_common(psp_dist);
    psp_dist->add_option("--beta", cfg.beta, "inverse temperature");
    psp_dist->add_option("--n", cfg.n, "volume half-width");

    CLI::App* variance =
        app.add_subcommand("variance-sweep", "separation-point variance against its envelope");
    add_common(variance);
    variance->add_option("--beta", cfg.beta, "inverse temperature");
    variance->add_option("--beta-grid", cfg.beta_grid, "geometric grid start:stop:count");
    variance->add_option("--n", cfg.n, "volume half-width");

    CLI::App* sample =
        app.add_subcommand("sample", "heat-bath Monte Carlo estimate of the distribution");
    add_common(sample);
    sample->add_option("--beta", cfg.beta, "inverse temperature");
    sample->add_option("--n", cfg.n, "volume half-width");
    sample->add_option("--sweeps", cfg.sweeps, "total heat-bath sweeps");
    sample->add_option("--burn-in", cfg.burn_in, "sweeps discarded up front (default 10(2n+1))");
    sample->add_option("--thin", cfg.thin, "record every k-th sweep (default 2n+1)");
    sample->add_option("--seed", cfg.seed, "random seed");

    CLI::App* verify = app.add_subcommand(
        "verify", "run the invariant suite on small volumes and print a pass/fail table");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (partition->parsed()) return cmd_partition(cfg);
        if (psp_dist->parsed()) return cmd_psp_dist(cfg);
        if (variance->parsed()) return cmd_variance_sweep(cfg);
        if (sample->parsed()) return cmd_sample(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // an internal invariant failed; report as a verification failure
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
