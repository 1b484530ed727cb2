#include "pspchain/coupling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pspchain {

CouplingFamily CouplingFamily::constant(double value) {
    std::ostringstream os;
    os << "const:" << value;
    CouplingFamily f(Kind::Constant, os.str());
    f.constant_value_ = value;
    return f;
}

CouplingFamily CouplingFamily::absolute_value() {
    return CouplingFamily(Kind::AbsoluteValue, "abs");
}

CouplingFamily CouplingFamily::sullivan25() {
    return CouplingFamily(Kind::Sullivan, "sullivan25");
}

CouplingFamily CouplingFamily::table(std::map<long, double> entries, TableExtension extension) {
    std::ostringstream os;
    os << "table(" << entries.size() << " entries"
       << (extension == TableExtension::SymmetricPair ? ";sym8" : "") << ")";
    CouplingFamily f(Kind::Table, os.str());
    f.entries_ = std::move(entries);
    f.extension_ = extension;
    return f;
}

double CouplingFamily::value(long index) const {
    switch (kind_) {
        case Kind::Constant:
            return constant_value_;
        case Kind::AbsoluteValue:
            return static_cast<double>(std::labs(index));
        case Kind::Sullivan:
            return index > 0 ? static_cast<double>(index) : static_cast<double>(-index + 1);
        case Kind::Table: {
            auto it = entries_.find(index);
            if (it != entries_.end()) return it->second;
            if (extension_ == TableExtension::SymmetricPair) {
                it = entries_.find(1 - index);
                if (it != entries_.end()) return it->second;
            }
            throw std::out_of_range("coupling table has no entry for index " + std::to_string(index));
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> CouplingFamily::values(long lo, long hi) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long i = lo; i <= hi; ++i) out.push_back(value(i));
    return out;
}

CouplingFamily parse_family_spec(const std::string& spec) {
    if (spec == "abs") return CouplingFamily::absolute_value();
    if (spec == "sullivan25") return CouplingFamily::sullivan25();
    if (spec.rfind("const:", 0) == 0) {
        const std::string num = spec.substr(6);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(num, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid constant coupling value in '" + spec + "'");
        }
        if (used != num.size())
            throw std::invalid_argument("invalid constant coupling value in '" + spec + "'");
        return CouplingFamily::constant(v);
    }
    if (spec.rfind("table:", 0) == 0) {
        std::string rest = spec.substr(6);
        TableExtension ext = TableExtension::ErrorOutside;
        const std::string suffix = ";sym8";
        if (rest.size() > suffix.size() &&
            rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
            ext = TableExtension::SymmetricPair;
            rest.resize(rest.size() - suffix.size());
        }
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open coupling table file '" + rest + "'");
        std::map<long, double> entries;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            for (char& c : line)
                if (c == ',' || c == '\t' || c == ';') c = ' ';
            std::istringstream ls(line);
            long idx;
            double val;
            if (!(ls >> idx >> val))
                throw std::invalid_argument("malformed coupling table line " + std::to_string(line_no) +
                                            " in '" + rest + "'");
            entries[idx] = val;
        }
        if (entries.empty()) throw std::invalid_argument("coupling table '" + rest + "' is empty");
        return CouplingFamily::table(std::move(entries), ext);
    }
    throw std::invalid_argument("unknown coupling family spec '" + spec +
                                "' (expected const:<I>, abs, sullivan25, or table:<path>[;sym8])");
}

GrowthConditionReport validate_growth_condition(const CouplingFamily& family,
                                                long n_lo, long n_hi, int r_max) {
    GrowthConditionReport report;
    for (long n = n_lo; n <= n_hi; ++n) {
        for (int r = 1; r <= r_max; ++r) {
            const double sum = family.value(n) + family.value(n + r);
            if (sum < static_cast<double>(r))
                report.violations.push_back({n, r, sum});
        }
    }
    return report;
}

ReflectionSymmetryReport validate_reflection_symmetry(const CouplingFamily& family,
                                                      long n_lo, long n_hi) {
    ReflectionSymmetryReport report;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double v = family.value(n);
        const double m = family.value(1 - n);
        if (v != m) report.violations.push_back({n, v, m});
    }
    return report;
}

SummabilityReport summability_diagnostic(const CouplingFamily& family, double beta, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("summability_diagnostic: need at least one term");
    SummabilityReport report;
    report.partial_sums.reserve(static_cast<std::size_t>(n_terms));
    double sum = 0.0;
    double prev_increment = 0.0;
    double ratio = 1.0;
    bool tail_decays = true;
    for (int k = 1; k <= n_terms; ++k) {
        const double increment = std::exp(-2.0 * beta * family.value(k));
        sum += increment;
        report.partial_sums.push_back(sum);
        if (k > 1 && prev_increment > 0.0) {
            ratio = increment / prev_increment;
            // only the tail matters for the heuristic
            if (k > n_terms / 2 && ratio >= 1.0 - 1e-12) tail_decays = false;
        }
        prev_increment = increment;
    }
    report.last_increment_ratio = ratio;
    report.looks_convergent = n_terms > 1 && tail_decays;
    return report;
}

}  // namespace pspchain
