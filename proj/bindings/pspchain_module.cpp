#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pspchain/coupling.hpp"
#include "pspchain/interface.hpp"
#include "pspchain/lattice.hpp"
#include "pspchain/log_real.hpp"
#include "pspchain/partition.hpp"
#include "pspchain/psp.hpp"
#include "pspchain/sampler.hpp"

namespace py = pybind11;
using namespace pspchain;

namespace {

EnumerationOptions make_options(int cap, unsigned threads) { return EnumerationOptions{cap, threads}; }

std::vector<int> config_spins(const SpinConfiguration& c) {
    std::vector<int> out;
    const int n = c.half_width();
    out.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int x = -n; x <= n; ++x) out.push_back(c.spin(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_pspchain, m) {
    m.doc() = "exact and Monte Carlo phase-separation-point computations for the "
              "one-dimensional chain with site-dependent bond couplings";

    py::enum_<TableExtension>(m, "TableExtension")
        .value("SymmetricPair", TableExtension::SymmetricPair)
        .value("ErrorOutside", TableExtension::ErrorOutside);

    py::class_<CouplingFamily>(m, "CouplingFamily")
        .def_static("constant", &CouplingFamily::constant, py::arg("value"))
        .def_static("absolute_value", &CouplingFamily::absolute_value)
        .def_static("sullivan25", &CouplingFamily::sullivan25)
        .def_static("table", &CouplingFamily::table, py::arg("entries"),
                    py::arg("extension") = TableExtension::ErrorOutside)
        .def("value", &CouplingFamily::value, py::arg("index"))
        .def("describe", &CouplingFamily::describe)
        .def("__repr__",
             [](const CouplingFamily& f) { return "CouplingFamily(" + f.describe() + ")"; });

    m.def("parse_family_spec", &parse_family_spec, py::arg("spec"));

    py::class_<GrowthConditionViolation>(m, "GrowthConditionViolation")
        .def_readonly("n", &GrowthConditionViolation::n)
        .def_readonly("r", &GrowthConditionViolation::r)
        .def_readonly("sum", &GrowthConditionViolation::sum);
    py::class_<GrowthConditionReport>(m, "GrowthConditionReport")
        .def_readonly("violations", &GrowthConditionReport::violations)
        .def("ok", &GrowthConditionReport::ok);
    m.def("validate_growth_condition", &validate_growth_condition, py::arg("family"),
          py::arg("n_lo"), py::arg("n_hi"), py::arg("r_max"));

    py::class_<ReflectionSymmetryViolation>(m, "ReflectionSymmetryViolation")
        .def_readonly("n", &ReflectionSymmetryViolation::n)
        .def_readonly("value", &ReflectionSymmetryViolation::value)
        .def_readonly("mirrored", &ReflectionSymmetryViolation::mirrored);
    py::class_<ReflectionSymmetryReport>(m, "ReflectionSymmetryReport")
        .def_readonly("violations", &ReflectionSymmetryReport::violations)
        .def("ok", &ReflectionSymmetryReport::ok);
    m.def("validate_reflection_symmetry", &validate_reflection_symmetry, py::arg("family"),
          py::arg("n_lo"), py::arg("n_hi"));

    py::class_<SummabilityReport>(m, "SummabilityReport")
        .def_readonly("partial_sums", &SummabilityReport::partial_sums)
        .def_readonly("last_increment_ratio", &SummabilityReport::last_increment_ratio)
        .def_readonly("looks_convergent", &SummabilityReport::looks_convergent);
    m.def("summability_diagnostic", &summability_diagnostic, py::arg("family"), py::arg("beta"),
          py::arg("n_terms"));

    py::class_<BoundaryCondition>(m, "BoundaryCondition")
        .def(py::init([](int left, int right) { return BoundaryCondition{left, right}; }),
             py::arg("left"), py::arg("right"))
        .def_static("plus", &BoundaryCondition::plus)
        .def_static("minus", &BoundaryCondition::minus)
        .def_static("pm", &BoundaryCondition::pm)
        .def_static("mp", &BoundaryCondition::mp)
        .def_readwrite("left", &BoundaryCondition::left)
        .def_readwrite("right", &BoundaryCondition::right);

    py::class_<InterfaceIndex>(m, "InterfaceIndex")
        .def(py::init([](int twice) { return InterfaceIndex{twice}; }), py::arg("twice"))
        .def_readonly("twice", &InterfaceIndex::twice)
        .def("value", &InterfaceIndex::value)
        .def("__repr__",
             [](InterfaceIndex t) { return "InterfaceIndex(" + std::to_string(t.twice) + ")"; })
        .def("__eq__", [](InterfaceIndex a, InterfaceIndex b) { return a.twice == b.twice; })
        .def("__hash__", [](InterfaceIndex t) { return t.twice; });

    py::class_<SpinConfiguration>(m, "SpinConfiguration")
        .def(py::init([](int n, std::vector<int> spins) {
                 return SpinConfiguration(Volume{n}, std::move(spins));
             }),
             py::arg("n"), py::arg("spins"))
        .def_static(
            "unpack",
            [](int n, std::uint64_t bits) { return SpinConfiguration::unpack(Volume{n}, bits); },
            py::arg("n"), py::arg("bits"))
        .def_static(
            "filled", [](int n, int spin) { return SpinConfiguration::filled(Volume{n}, spin); },
            py::arg("n"), py::arg("spin"))
        .def("pack", &SpinConfiguration::pack)
        .def("spin", &SpinConfiguration::spin, py::arg("x"))
        .def("spins", &config_spins)
        .def_property_readonly("n", &SpinConfiguration::half_width);

    m.def("energy", &energy, py::arg("config"), py::arg("family"), py::arg("bc"));
    m.def("energy_pm", &energy_pm, py::arg("config"), py::arg("family"));
    m.def("flipped", py::overload_cast<const SpinConfiguration&>(&flipped), py::arg("config"));
    m.def("reflected", py::overload_cast<const SpinConfiguration&>(&reflected), py::arg("config"));
    m.def("flip_reflected", &flip_reflected, py::arg("config"));

    py::class_<LogReal>(m, "LogReal")
        .def_static("from_log", &LogReal::from_log, py::arg("log_magnitude"))
        .def_static("from_value", &LogReal::from_value, py::arg("value"))
        .def("log", &LogReal::log)
        .def("value", &LogReal::value)
        .def("is_zero", &LogReal::is_zero)
        .def("__repr__",
             [](LogReal v) { return "LogReal(log=" + std::to_string(v.log()) + ")"; });

    py::class_<PartitionPair>(m, "PartitionPair")
        .def_readonly("plus", &PartitionPair::plus)
        .def_readonly("mixed", &PartitionPair::mixed);
    py::class_<RarefiedPair>(m, "RarefiedPair")
        .def_readonly("aligned", &RarefiedPair::aligned)
        .def_readonly("flipped", &RarefiedPair::flipped);
    py::class_<CrystalPair>(m, "CrystalPair")
        .def_readonly("left", &CrystalPair::left)
        .def_readonly("right", &CrystalPair::right)
        .def_readonly("joint", &CrystalPair::joint);

    m.def("closed_form_partition", &closed_form_partition, py::arg("family"), py::arg("beta"),
          py::arg("n"));
    m.def("recursive_partition", &recursive_partition, py::arg("family"), py::arg("beta"),
          py::arg("n"));
    m.def(
        "brute_force_partition",
        [](const CouplingFamily& family, double beta, int n, BoundaryCondition bc, int cap,
           unsigned threads) {
            return brute_force_partition(family, beta, n, bc, make_options(cap, threads));
        },
        py::arg("family"), py::arg("beta"), py::arg("n"), py::arg("bc"),
        py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 1);
    m.def("ising_ratio", &ising_ratio, py::arg("family"), py::arg("beta"), py::arg("n"));
    m.def("rarefied_right", &rarefied_right, py::arg("family"), py::arg("beta"), py::arg("n"),
          py::arg("theta"));
    m.def("rarefied_left", &rarefied_left, py::arg("family"), py::arg("beta"), py::arg("n"),
          py::arg("theta"));
    m.def(
        "crystal_partitions",
        [](const CouplingFamily& family, double beta, int n, InterfaceIndex theta, int cap,
           unsigned threads) {
            return crystal_partitions(family, beta, n, theta, make_options(cap, threads));
        },
        py::arg("family"), py::arg("beta"), py::arg("n"), py::arg("theta"),
        py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 1);

    py::class_<InterfaceStats>(m, "InterfaceStats")
        .def_readonly("l_minus", &InterfaceStats::l_minus)
        .def_readonly("r_plus", &InterfaceStats::r_plus)
        .def_readonly("l_plus", &InterfaceStats::l_plus)
        .def_readonly("r_minus", &InterfaceStats::r_minus)
        .def("norm", &InterfaceStats::norm);
    py::enum_<MajorityClass>(m, "MajorityClass")
        .value("Plus", MajorityClass::Plus)
        .value("Minus", MajorityClass::Minus);

    m.def("interface_points", &interface_points, py::arg("config"));
    m.def("interface_stats", &interface_stats, py::arg("config"), py::arg("t"));
    m.def("majority_class", &majority_class, py::arg("config"));
    m.def("psp", &psp, py::arg("config"));

    py::class_<PspDistribution>(m, "PspDistribution")
        .def_readonly("n", &PspDistribution::n)
        .def_readonly("beta", &PspDistribution::beta)
        .def_readonly("family", &PspDistribution::family)
        .def_readonly("family_symmetric", &PspDistribution::family_symmetric)
        .def_readonly("support", &PspDistribution::support)
        .def_readonly("probability", &PspDistribution::probability)
        .def_readonly("log_probability", &PspDistribution::log_probability)
        .def_readonly("log_normalizer", &PspDistribution::log_normalizer)
        .def("probability_of", &PspDistribution::probability_of, py::arg("t"));
    py::class_<Moments>(m, "Moments")
        .def_readonly("mean", &Moments::mean)
        .def_readonly("variance", &Moments::variance);

    m.def(
        "psp_distribution",
        [](const CouplingFamily& family, double beta, int n, int cap, unsigned threads) {
            return psp_distribution(family, beta, n, make_options(cap, threads));
        },
        py::arg("family"), py::arg("beta"), py::arg("n"),
        py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 1);
    m.def("psp_moments", &psp_moments, py::arg("dist"));

    py::class_<VarianceEnvelope>(m, "VarianceEnvelope")
        .def_readonly("lower", &VarianceEnvelope::lower)
        .def_readonly("upper", &VarianceEnvelope::upper)
        .def_readonly("asymptotic_regime", &VarianceEnvelope::asymptotic_regime);
    m.def("variance_envelope", &variance_envelope, py::arg("beta"));

    py::class_<TailSeries>(m, "TailSeries")
        .def_readonly("partial", &TailSeries::partial)
        .def_readonly("closed_compact", &TailSeries::closed_compact)
        .def_readonly("closed_exact", &TailSeries::closed_exact);
    m.def("tail_series", &tail_series, py::arg("tau"), py::arg("m_max"));

    py::class_<NecessaryConditionVerdict>(m, "NecessaryConditionVerdict")
        .def_readonly("satisfied", &NecessaryConditionVerdict::satisfied)
        .def_readonly("leftmost", &NecessaryConditionVerdict::leftmost)
        .def_readonly("rightmost", &NecessaryConditionVerdict::rightmost)
        .def_readonly("stats", &NecessaryConditionVerdict::stats);
    m.def("psp_necessary_conditions", &psp_necessary_conditions, py::arg("config"), py::arg("t"));

    py::class_<ContourQuery>(m, "ContourQuery")
        .def(py::init([](int left, int right) { return ContourQuery{left, right}; }),
             py::arg("left"), py::arg("right"))
        .def_readwrite("left", &ContourQuery::left)
        .def_readwrite("right", &ContourQuery::right);
    py::class_<ContourResult>(m, "ContourResult")
        .def_readonly("p_plus", &ContourResult::p_plus)
        .def_readonly("bound", &ContourResult::bound);
    m.def(
        "contour_probability",
        [](const CouplingFamily& family, double beta, int n, ContourQuery b, int cap,
           unsigned threads) {
            return contour_probability(family, beta, n, b, make_options(cap, threads));
        },
        py::arg("family"), py::arg("beta"), py::arg("n"), py::arg("b"),
        py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 1);

    py::class_<DecompositionRow>(m, "DecompositionRow")
        .def_readonly("theta", &DecompositionRow::theta)
        .def_readonly("exact", &DecompositionRow::exact)
        .def_readonly("joint", &DecompositionRow::joint)
        .def_readonly("product", &DecompositionRow::product)
        .def_readonly("rarefied_bound", &DecompositionRow::rarefied_bound);
    py::class_<DecompositionReport>(m, "DecompositionReport")
        .def_readonly("rows", &DecompositionReport::rows)
        .def_readonly("total_probability", &DecompositionReport::total_probability)
        .def_readonly("max_exact_joint_gap", &DecompositionReport::max_exact_joint_gap)
        .def_readonly("max_product_excess", &DecompositionReport::max_product_excess);
    m.def(
        "decomposition_check",
        [](const CouplingFamily& family, double beta, int n, int cap, unsigned threads) {
            return decomposition_check(family, beta, n, make_options(cap, threads));
        },
        py::arg("family"), py::arg("beta"), py::arg("n"),
        py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 1);

    py::class_<ChainState>(m, "ChainState")
        .def(py::init<CouplingFamily, double, int, BoundaryCondition, std::uint64_t>(),
             py::arg("family"), py::arg("beta"), py::arg("n"), py::arg("bc"), py::arg("seed"))
        .def("sweep", &ChainState::sweep)
        .def("config", &ChainState::config)
        .def("cached_energy", &ChainState::cached_energy)
        .def("recompute_energy", &ChainState::recompute_energy)
        .def("sweep_count", &ChainState::sweep_count);

    py::class_<SamplerSchedule>(m, "SamplerSchedule")
        .def(py::init([](long sweeps, long burn_in, long thin) {
                 return SamplerSchedule{sweeps, burn_in, thin};
             }),
             py::arg("sweeps"), py::arg("burn_in"), py::arg("thin"))
        .def_static("defaults_for", &SamplerSchedule::defaults_for, py::arg("n"), py::arg("sweeps"))
        .def_readwrite("sweeps", &SamplerSchedule::sweeps)
        .def_readwrite("burn_in", &SamplerSchedule::burn_in)
        .def_readwrite("thin", &SamplerSchedule::thin);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("n", &EstimateReport::n)
        .def_readonly("beta", &EstimateReport::beta)
        .def_readonly("family", &EstimateReport::family)
        .def_readonly("seed", &EstimateReport::seed)
        .def_readonly("rng", &EstimateReport::rng)
        .def_readonly("sweeps", &EstimateReport::sweeps)
        .def_readonly("burn_in", &EstimateReport::burn_in)
        .def_readonly("thin", &EstimateReport::thin)
        .def_readonly("n_samples", &EstimateReport::n_samples)
        .def_readonly("support", &EstimateReport::support)
        .def_readonly("probability", &EstimateReport::probability)
        .def_readonly("std_error", &EstimateReport::std_error);
    m.def("estimate_psp_distribution", &estimate_psp_distribution, py::arg("family"),
          py::arg("beta"), py::arg("n"), py::arg("schedule"), py::arg("seed"));
    m.def("merge_reports", &merge_reports, py::arg("reports"));

    m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;
}
