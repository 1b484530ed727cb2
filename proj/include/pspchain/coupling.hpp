#pragma once

#include <map>
#include <string>
#include <vector>

namespace pspchain {

/// Lookup rule for couplings not stored in a table family.
enum class TableExtension {
    SymmetricPair,  // missing I(n) falls back to the reflection partner I(1-n)
    ErrorOutside,   // missing index is an error
};

/// The bond couplings I(n) of the chain: the energy penalty paid on bond
/// (n-1, n) when the two adjacent spins disagree. Values are dimensionless;
/// the inverse temperature multiplies them later.
///
/// Built-in families:
///   constant(I)     I(n) = I
///   absolute_value  I(n) = |n|        (note I(0) = 0, so the reflection
///                                      symmetry I(n) = I(1-n) fails at 0)
///   sullivan25      I(n) = n for n > 0, -n + 1 for n <= 0 (ramp; symmetric)
///   table           explicit entries with a configurable extension rule
class CouplingFamily {
public:
    static CouplingFamily constant(double value);
    static CouplingFamily absolute_value();
    static CouplingFamily sullivan25();
    static CouplingFamily table(std::map<long, double> entries, TableExtension extension);

    /// I(index). Throws std::out_of_range for a table family with the
    /// error-outside rule when the index (and, under the symmetric rule,
    /// its partner) is absent.
    double value(long index) const;

    /// I(index) for every index in [lo, hi], as a dense vector.
    std::vector<double> values(long lo, long hi) const;

    /// Canonical spec string ("sullivan25", "const:1", ...), used in reports.
    const std::string& describe() const { return spec_; }

private:
    enum class Kind { Constant, AbsoluteValue, Sullivan, Table };
    CouplingFamily(Kind kind, std::string spec) : kind_(kind), spec_(std::move(spec)) {}

    Kind kind_;
    std::string spec_;
    double constant_value_ = 0.0;
    std::map<long, double> entries_;
    TableExtension extension_ = TableExtension::ErrorOutside;
};

/// Parses the CLI family spec grammar:
///   "const:<I>" | "abs" | "sullivan25" | "table:<csv-path>[;sym8]"
/// where the CSV holds two columns (index, value). The ";sym8" suffix
/// selects the symmetric extension rule for missing indices.
CouplingFamily parse_family_spec(const std::string& spec);

struct GrowthConditionViolation {
    long n;
    int r;
    double sum;  // I(n) + I(n+r), which fell below r
};

struct GrowthConditionReport {
    std::vector<GrowthConditionViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Scans I(n) + I(n+r) >= r for n in [n_lo, n_hi] and 1 <= r <= r_max.
/// This is the growth condition under which the chain has a low-temperature
/// phase transition; the report lists every violating pair.
GrowthConditionReport validate_growth_condition(const CouplingFamily& family,
                                                long n_lo, long n_hi, int r_max);

struct ReflectionSymmetryViolation {
    long n;
    double value;     // I(n)
    double mirrored;  // I(1-n)
};

struct ReflectionSymmetryReport {
    std::vector<ReflectionSymmetryViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Scans I(n) == I(1-n) for n in [n_lo, n_hi]. The closed-form partition
/// formulas are only valid for families passing this check.
ReflectionSymmetryReport validate_reflection_symmetry(const CouplingFamily& family,
                                                      long n_lo, long n_hi);

struct SummabilityReport {
    std::vector<double> partial_sums;  // partial_sums[k-1] = sum_{m=1..k} e^{-2 beta I(m)}
    double last_increment_ratio;       // ratio of the final two increments
    bool looks_convergent;             // tail increments decay geometrically
};

/// Partial sums of sum_{m>=1} e^{-2 beta I(m)} up to N terms, with a crude
/// convergence heuristic. Finiteness of the full series is the classical
/// criterion for a phase transition in this chain.
SummabilityReport summability_diagnostic(const CouplingFamily& family, double beta, int n_terms);

}  // namespace pspchain
