#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcob {

/// Exact fraction in lowest terms with positive denominator.
class Rational {
  public:
    using Value = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(Value v) : value_(std::move(v)) {}

    /// Parses "n", "n/d" or "-n/d".
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string numerator() const;
    [[nodiscard]] std::string denominator() const;
    [[nodiscard]] bool is_zero() const { return value_ == 0; }
    [[nodiscard]] const Value& value() const { return value_; }

    /// "n" when the denominator is 1, "n/d" otherwise.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(Value(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  private:
    Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hcob
