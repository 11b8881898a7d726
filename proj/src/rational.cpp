#include "bernlab/rational.hpp"

#include <cassert>
#include <cmath>
#include <ostream>
#include <utility>

namespace bernlab {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::msb;

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    assert(invariants_ok());
}

bool Rational::invariants_ok() const {
    if (den_.sign() <= 0) return false;
    if (num_.is_zero()) return den_ == 1;
    return gcd(abs(num_), den_) == 1;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::from_reduced(Integer numerator, Integer denominator) {
    Rational r;
    r.num_ = std::move(numerator);
    r.den_ = std::move(denominator);
    assert(r.invariants_ok());
    return r;
}

// Knuth-style addition: with reduced operands, coprime denominators make the
// plain cross sum already reduced; otherwise only gcd(t, g) can survive.
Rational Rational::add_impl(const Rational& a, const Rational& b, bool negate_b) {
    const Integer g = gcd(a.den_, b.den_);
    if (g == 1) {
        Integer cross = a.num_ * b.den_;
        if (negate_b)
            cross -= b.num_ * a.den_;
        else
            cross += b.num_ * a.den_;
        if (cross.is_zero()) return Rational();
        return from_reduced(std::move(cross), a.den_ * b.den_);
    }
    const Integer a_red = a.den_ / g;
    const Integer b_red = b.den_ / g;
    Integer t = a.num_ * b_red;
    if (negate_b)
        t -= b.num_ * a_red;
    else
        t += b.num_ * a_red;
    if (t.is_zero()) return Rational();
    const Integer g2 = gcd(abs(t), g);
    return from_reduced(t / g2, a_red * (b.den_ / g2));
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::add_impl(a, b, false);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::add_impl(a, b, true);
}

// Cross-cancelled product: both operands are reduced, so after removing
// gcd(|a.num|, b.den) and gcd(|b.num|, a.den) the result is already reduced.
Rational operator*(const Rational& a, const Rational& b) {
    const Integer g1 = gcd(abs(a.num_), b.den_);
    const Integer g2 = gcd(abs(b.num_), a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    if (r.num_.is_zero()) r.den_ = 1;
    assert(r.invariants_ok());
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_.sign() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return a * inv;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const Integer lhs = num_ * o.den_;
    const Integer rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    const auto scan_digits = [&]() -> std::string {
        std::string digits;
        while (i < text.size() && is_digit(text[i])) digits += text[i++];
        // a leading zero would read as an octal prefix in the Integer ctor
        const std::size_t nonzero = digits.find_first_not_of('0');
        if (nonzero == std::string::npos) return digits.empty() ? digits : "0";
        return digits.substr(nonzero);
    };

    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    std::string num_digits = scan_digits();
    if (num_digits.empty()) throw ParseError("expected a digit", i);

    Integer num(num_digits);
    if (negative) num = -num;
    if (i == text.size()) return Rational(std::move(num), 1);

    if (text[i] != '/') throw ParseError("unexpected character", i);
    ++i;
    const std::size_t den_start = i;
    std::string den_digits = scan_digits();
    if (den_digits.empty()) throw ParseError("expected a digit", i);
    if (i != text.size()) throw ParseError("unexpected character", i);

    Integer den(den_digits);
    if (den.is_zero()) throw ParseError("zero denominator", den_start);
    return Rational(std::move(num), std::move(den));
}

double Rational::approx() const {
    if (num_.is_zero()) return 0.0;
    const Integer n = abs(num_);
    const unsigned long nb = msb(n);
    const unsigned long db = msb(den_);
    const long ns = nb > 52 ? static_cast<long>(nb - 52) : 0;
    const long ds = db > 52 ? static_cast<long>(db - 52) : 0;
    const double top_n = Integer(n >> ns).convert_to<double>();
    const double top_d = Integer(den_ >> ds).convert_to<double>();
    long e = ns - ds;
    if (e > 4000) e = 4000;
    if (e < -4000) e = -4000;
    const double v = std::ldexp(top_n / top_d, static_cast<int>(e));
    return num_.sign() < 0 ? -v : v;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bernlab
