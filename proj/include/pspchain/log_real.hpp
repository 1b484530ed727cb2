#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pspchain {

/// log(e^a + e^b), stable for any finite or -inf inputs.
inline double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (std::isinf(a) && a < 0) return a;  // both -inf
    return a + std::log1p(std::exp(b - a));
}

/// log(e^a - e^b). Requires a > b; the small-gap branch goes through expm1
/// so that differences down to ~1e-300 in the exponents survive.
inline double log_diff_exp(double a, double b) {
    if (std::isinf(b) && b < 0) return a;
    if (!(a > b))
        throw std::domain_error("log_diff_exp: requires a > b (difference of a non-positive quantity)");
    const double d = a - b;
    if (d > 1.0) return a + std::log1p(-std::exp(-d));
    return b + std::log(std::expm1(d));
}

/// A non-negative real held as the natural log of its magnitude.
/// Zero is representable (log == -inf); everything else must be finite.
/// Partition sums, Gibbs weights and probabilities live in this type so
/// that beta up to several hundred never overflows or underflows.
class LogReal {
public:
    LogReal() : log_(-std::numeric_limits<double>::infinity()) {}

    static LogReal from_log(double log_magnitude) { return LogReal(log_magnitude); }
    static LogReal from_value(double v) {
        if (v < 0.0 || std::isnan(v))
            throw std::domain_error("LogReal: value must be non-negative");
        return LogReal(std::log(v));
    }
    static LogReal zero() { return LogReal(); }
    static LogReal one() { return LogReal(0.0); }

    double log() const { return log_; }
    double value() const { return std::exp(log_); }
    bool is_zero() const { return std::isinf(log_) && log_ < 0; }

    friend LogReal operator+(LogReal a, LogReal b) { return LogReal(log_add_exp(a.log_, b.log_)); }
    friend LogReal operator*(LogReal a, LogReal b) { return LogReal(a.log_ + b.log_); }
    friend LogReal operator/(LogReal a, LogReal b) {
        if (b.is_zero()) throw std::domain_error("LogReal: division by zero");
        return LogReal(a.log_ - b.log_);
    }
    /// *this - other; throws unless *this > other.
    LogReal minus(LogReal other) const { return LogReal(log_diff_exp(log_, other.log_)); }

    friend bool operator<(LogReal a, LogReal b) { return a.log_ < b.log_; }
    friend bool operator>(LogReal a, LogReal b) { return a.log_ > b.log_; }
    friend bool operator<=(LogReal a, LogReal b) { return a.log_ <= b.log_; }
    friend bool operator>=(LogReal a, LogReal b) { return a.log_ >= b.log_; }
    friend bool operator==(LogReal a, LogReal b) { return a.log_ == b.log_; }

private:
    explicit LogReal(double log_magnitude) : log_(log_magnitude) {
        if (std::isnan(log_magnitude) || (std::isinf(log_magnitude) && log_magnitude > 0))
            throw std::domain_error("LogReal: log magnitude must be finite or -inf");
    }
    double log_;
};

}  // namespace pspchain
