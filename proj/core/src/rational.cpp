#include "hcob/rational.hpp"

#include <ostream>

#include "hcob/error.hpp"

namespace hcob {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw InvariantViolation("rational: empty integer in \"" + std::string(whole) + "\"");
    }
    std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (i == text.size()) {
        throw InvariantViolation("rational: malformed \"" + std::string(whole) + "\"");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw InvariantViolation("rational: malformed \"" + std::string(whole) + "\"");
        }
    }
    return boost::multiprecision::cpp_int(std::string(text));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw InvariantViolation("rational: zero denominator");
    }
    value_ = Value(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Value(parse_integer(text, text)));
    }
    auto num = parse_integer(text.substr(0, slash), text);
    auto den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw InvariantViolation("rational: zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(Value(num, den));
}

std::string Rational::numerator() const {
    return boost::multiprecision::numerator(value_).str();
}

std::string Rational::denominator() const {
    return boost::multiprecision::denominator(value_).str();
}

std::string Rational::str() const {
    auto den = boost::multiprecision::denominator(value_);
    if (den == 1) {
        return numerator();
    }
    return numerator() + "/" + den.str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) {
        throw InvariantViolation("rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace hcob
