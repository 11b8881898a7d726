#pragma once

#include "bernlab/rational.hpp"

#include <span>
#include <vector>

namespace bernlab {

/// Formal power series over Rational, truncated at x^order. Truncation is
/// explicit and caller-chosen; binary operations keep the smaller of the two
/// operand orders and never extend it.
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(unsigned order);

    /// Pads with zeros up to order; throws std::invalid_argument when more
    /// than order + 1 coefficients are supplied.
    PowerSeries(unsigned order, std::vector<Rational> coeffs);

    static PowerSeries constant(unsigned order, Rational value);
    /// The series x; requires order >= 1.
    static PowerSeries identity(unsigned order);
    /// e^x - 1: coefficients 1/k! for k >= 1.
    static PowerSeries exp_minus_one(unsigned order);
    /// ln(1 + x): coefficients (-1)^(k-1)/k for k >= 1.
    static PowerSeries log1p(unsigned order);

    unsigned order() const noexcept { return order_; }

    /// Throws std::out_of_range beyond the retained order.
    const Rational& coeff(unsigned j) const;

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Index of the first nonzero coefficient; order + 1 for the zero series.
    unsigned valuation() const;

    /// Copy restricted to new_order <= order.
    PowerSeries truncate(unsigned new_order) const;

    /// Termwise derivative; the result order drops by one.
    PowerSeries derive() const;

    PowerSeries scale(const Rational& c) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    /// num / den. The denominator needs a nonzero constant term, or num and
    /// den must share a leading factor x^j that cancels exactly (as in
    /// x / (e^x - 1)); anything else throws std::domain_error. Always
    /// verifies den * quotient == num over the result order before
    /// returning, so a successful division is self-certified.
    static PowerSeries divide(const PowerSeries& num, const PowerSeries& den);

    /// outer(inner(x)); inner must have a zero constant term.
    static PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

    bool operator==(const PowerSeries&) const = default;

private:
    unsigned order_;
    std::vector<Rational> coeffs_;  // size order_ + 1
};

/// Formal Laurent series kept on the exponent window [min_exp, max_exp].
/// Coefficients below the window are exact zeros; above it they are simply
/// not retained. Only a finite principal part is supported.
class LaurentSeries {
public:
    LaurentSeries(int min_exp, std::vector<Rational> coeffs);

    /// Reinterprets a power series with every exponent shifted by `shift`.
    static LaurentSeries from_power_series(const PowerSeries& s, int shift);

    /// Laurent expansion of 1/(e^x - 1) = (1/x) * (x/(e^x - 1)), retained
    /// through x^order; simple pole, residue 1.
    static LaurentSeries bernoulli_kernel(unsigned order);

    int min_exp() const noexcept { return min_exp_; }
    int max_exp() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }

    /// Minimal pole order, read off the first nonzero coefficient; zero for
    /// a series regular at 0 (and for the zero series).
    unsigned pole_order() const;

    /// Exact zero below the window; throws std::out_of_range above it.
    const Rational& coeff(int e) const;

    LaurentSeries derive() const;
    LaurentSeries scale(const Rational& c) const;
    /// Repeated multiplication; exponent >= 1. The pole order of the j-th
    /// power of a pole-m series is m*j.
    LaurentSeries pow(unsigned exponent) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    bool operator==(const LaurentSeries&) const = default;

private:
    int min_exp_;
    std::vector<Rational> coeffs_;
};

struct IdentityVerdict {
    bool equal = false;
    int first_diff_exp = 0;  // meaningful only when !equal
    Rational lhs;
    Rational rhs;
};

/// Machine check, coefficient by coefficient over Laurent series retained
/// through x^order, of
///   d^k/dx^k (1/(e^x-1)) == (-1)^k sum_{m=1}^{k+1} (m-1)! S(k+1,m) (1/(e^x-1))^m.
/// An unequal outcome is a verdict, not an error.
IdentityVerdict verify_exp_deriv_identity(unsigned k, unsigned order);

}  // namespace bernlab
