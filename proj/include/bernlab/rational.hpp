#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bernlab {

using Integer = boost::multiprecision::cpp_int;

/// Parse failure; offset() is the byte position of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Exact rational number, always stored reduced: the denominator is strictly
/// positive, gcd(|num|, den) == 1, and zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}

    /// Throws std::domain_error when the denominator is zero.
    Rational(Integer numerator, Integer denominator);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws std::domain_error when b is zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    bool operator==(const Rational& o) const noexcept = default;
    /// Exact comparison by cross-multiplication; a total order.
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Canonical text form "p/q"; the "/q" part is omitted when q == 1.
    std::string str() const;

    /// Accepts `[-]digits[/digits]` with a nonzero denominator; the result is
    /// stored reduced, so parse("4/8") == parse("1/2").
    static Rational parse(std::string_view text);

    /// Display-only decimal approximation; exactness lives in str().
    double approx() const;

    /// Audit hook for the reduced-form invariants.
    bool invariants_ok() const;

private:
    void normalize();

    /// Adopts components that are reduced by construction; audited, not
    /// re-reduced.
    static Rational from_reduced(Integer numerator, Integer denominator);

    static Rational add_impl(const Rational& a, const Rational& b, bool negate_b);

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bernlab
