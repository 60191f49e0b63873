#include "dcolor/exact.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dcolor {

ExactValue::ExactValue(mpq_class q, double error_bound) : q_(std::move(q)), error_bound_(error_bound) {
    q_.canonicalize();
    if (error_bound_ < 0.0) {
        throw std::invalid_argument("error bound must be non-negative");
    }
}

ExactValue::ExactValue(long numerator, unsigned long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

ExactValue ExactValue::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return ExactValue(std::move(q));
}

std::string ExactValue::fraction() const {
    return numerator() + "/" + denominator();
}

std::string ExactValue::to_string() const {
    std::string out = fmt::format("{} (≈ {:.17g})", fraction(), to_double());
    if (!is_exact()) {
        out += fmt::format(" ± {:.3g}", error_bound_);
    }
    return out;
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    q_ += o.q_;
    error_bound_ += o.error_bound_;
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
    q_ -= o.q_;
    error_bound_ += o.error_bound_;
    return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& o) {
    const double a = q_.get_d();
    const double b = o.q_.get_d();
    error_bound_ = std::abs(a) * o.error_bound_ + std::abs(b) * error_bound_ + error_bound_ * o.error_bound_;
    q_ *= o.q_;
    return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& o) {
    if (o.q_ == 0) {
        throw std::domain_error("division by zero");
    }
    if (!o.is_exact()) {
        throw std::domain_error("division by an inexact value is not supported");
    }
    error_bound_ /= std::abs(o.q_.get_d());
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& out, const ExactValue& v) { return out << v.to_string(); }

}  // namespace dcolor
