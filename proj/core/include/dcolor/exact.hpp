#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dcolor {

// Arbitrary-precision rational in canonical form. Values produced by the
// certified floating-point path carry a nonzero error_bound (absolute);
// exact values have error_bound == 0.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactValue(mpq_class q, double error_bound = 0.0);
    ExactValue(long numerator, unsigned long denominator);

    static ExactValue parse(const std::string& text);  // "p/q" or "p"

    const mpq_class& rational() const noexcept { return q_; }
    double error_bound() const noexcept { return error_bound_; }
    bool is_exact() const noexcept { return error_bound_ == 0.0; }

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }
    double to_double() const { return q_.get_d(); }

    // "p/q" (or "p" when integral).
    std::string fraction() const;
    // "p/q (≈ d)" with 17 significant digits; "± e" appended when inexact.
    std::string to_string() const;

    ExactValue& operator+=(const ExactValue& o);
    ExactValue& operator-=(const ExactValue& o);
    ExactValue& operator*=(const ExactValue& o);
    ExactValue& operator/=(const ExactValue& o);

    friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
    friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
    friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
    friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
    friend ExactValue operator-(ExactValue a) {
        a.q_ = -a.q_;
        return a;
    }

    // Comparisons look at the rational only.
    friend bool operator==(const ExactValue& a, const ExactValue& b) { return a.q_ == b.q_; }
    friend bool operator<(const ExactValue& a, const ExactValue& b) { return a.q_ < b.q_; }
    friend bool operator<=(const ExactValue& a, const ExactValue& b) { return a.q_ <= b.q_; }
    friend bool operator>(const ExactValue& a, const ExactValue& b) { return a.q_ > b.q_; }
    friend bool operator>=(const ExactValue& a, const ExactValue& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_{0};
    double error_bound_ = 0.0;
};

std::ostream& operator<<(std::ostream& out, const ExactValue& v);

}  // namespace dcolor
