#include "bernlab/power_series.hpp"

#include "bernlab/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bernlab {

PowerSeries::PowerSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

PowerSeries::PowerSeries(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order_ + 1)
        throw std::invalid_argument("PowerSeries: more coefficients than the order admits");
    coeffs_.resize(order_ + 1);
}

PowerSeries PowerSeries::constant(unsigned order, Rational value) {
    PowerSeries r(order);
    r.coeffs_[0] = std::move(value);
    return r;
}

PowerSeries PowerSeries::identity(unsigned order) {
    if (order < 1) throw std::invalid_argument("PowerSeries::identity: needs order >= 1");
    PowerSeries r(order);
    r.coeffs_[1] = Rational(1);
    return r;
}

PowerSeries PowerSeries::exp_minus_one(unsigned order) {
    PowerSeries r(order);
    Rational c(1);
    for (unsigned k = 1; k <= order; ++k) {
        c /= Rational(k);
        r.coeffs_[k] = c;
    }
    return r;
}

PowerSeries PowerSeries::log1p(unsigned order) {
    PowerSeries r(order);
    for (unsigned k = 1; k <= order; ++k)
        r.coeffs_[k] = Rational(k % 2 == 1 ? 1 : -1, k);
    return r;
}

const Rational& PowerSeries::coeff(unsigned j) const {
    if (j > order_) throw std::out_of_range("PowerSeries::coeff: beyond retained order");
    return coeffs_[j];
}

unsigned PowerSeries::valuation() const {
    for (unsigned j = 0; j <= order_; ++j)
        if (!coeffs_[j].is_zero()) return j;
    return order_ + 1;
}

PowerSeries PowerSeries::truncate(unsigned new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("PowerSeries::truncate: cannot extend the order");
    PowerSeries r(new_order);
    std::copy_n(coeffs_.begin(), new_order + 1, r.coeffs_.begin());
    return r;
}

PowerSeries PowerSeries::derive() const {
    if (order_ == 0) return PowerSeries(0);
    PowerSeries r(order_ - 1);
    for (unsigned j = 1; j <= order_; ++j) r.coeffs_[j - 1] = coeffs_[j] * Rational(j);
    return r;
}

PowerSeries PowerSeries::scale(const Rational& c) const {
    PowerSeries r(order_);
    for (unsigned j = 0; j <= order_; ++j) r.coeffs_[j] = coeffs_[j] * c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const unsigned n = std::min(a.order_, b.order_);
    PowerSeries r(n);
    for (unsigned j = 0; j <= n; ++j) r.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const unsigned n = std::min(a.order_, b.order_);
    PowerSeries r(n);
    for (unsigned j = 0; j <= n; ++j) r.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const unsigned n = std::min(a.order_, b.order_);
    PowerSeries r(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::divide(const PowerSeries& num, const PowerSeries& den) {
    const unsigned dv = den.valuation();
    if (dv > den.order_) throw std::domain_error("series division by the zero series");
    if (dv > 0) {
        if (std::min(num.order_, den.order_) < dv)
            throw std::domain_error("series division: order too small to cancel the shared factor");
        for (unsigned j = 0; j < dv; ++j)
            if (!num.coeffs_[j].is_zero())
                throw std::domain_error(
                    "series division: denominator vanishes at 0 and the factor does not cancel");
    }
    const unsigned n = std::min(num.order_, den.order_) - dv;
    const auto nc = [&](unsigned j) -> const Rational& { return num.coeffs_[j + dv]; };
    const auto dc = [&](unsigned j) -> const Rational& { return den.coeffs_[j + dv]; };

    PowerSeries q(n);
    const Rational& d0 = dc(0);
    for (unsigned m = 0; m <= n; ++m) {
        Rational acc = nc(m);
        for (unsigned i = 1; i <= m; ++i) acc -= dc(i) * q.coeffs_[m - i];
        q.coeffs_[m] = acc / d0;
    }

    // self-check: den * quotient must reproduce num over the result window
    for (unsigned m = 0; m <= n; ++m) {
        Rational acc;
        for (unsigned i = 0; i <= m; ++i) acc += dc(i) * q.coeffs_[m - i];
        if (acc != nc(m)) throw std::logic_error("series division self-check failed");
    }
    return q;
}

PowerSeries PowerSeries::compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (!inner.coeffs_[0].is_zero())
        throw std::domain_error("series composition: inner constant term must be zero");
    const unsigned n = std::min(outer.order_, inner.order_);
    const PowerSeries in = inner.truncate(n);
    // Horner over the truncated ring; exact because inner has valuation >= 1.
    PowerSeries r = constant(n, outer.coeffs_[n]);
    for (unsigned k = n; k-- > 0;) {
        r = r * in;
        r.coeffs_[0] += outer.coeffs_[k];
    }
    return r;
}

LaurentSeries::LaurentSeries(int min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("LaurentSeries: empty coefficient window");
}

LaurentSeries LaurentSeries::from_power_series(const PowerSeries& s, int shift) {
    std::vector<Rational> cs(s.coeffs().begin(), s.coeffs().end());
    return LaurentSeries(shift, std::move(cs));
}

LaurentSeries LaurentSeries::bernoulli_kernel(unsigned order) {
    const PowerSeries t = PowerSeries::divide(PowerSeries::identity(order + 2),
                                              PowerSeries::exp_minus_one(order + 2));
    return from_power_series(t, -1);  // window [-1, order]
}

unsigned LaurentSeries::pole_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const int e = min_exp_ + static_cast<int>(i);
        return e < 0 ? static_cast<unsigned>(-e) : 0u;
    }
    return 0;
}

const Rational& LaurentSeries::coeff(int e) const {
    static const Rational zero;
    if (e < min_exp_) return zero;
    if (e > max_exp()) throw std::out_of_range("LaurentSeries::coeff: beyond retained window");
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentSeries LaurentSeries::derive() const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int e = min_exp_ + static_cast<int>(i);
        if (e != 0) cs[i] = coeffs_[i] * Rational(e);
    }
    return LaurentSeries(min_exp_ - 1, std::move(cs));
}

LaurentSeries LaurentSeries::scale(const Rational& c) const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i] * c;
    return LaurentSeries(min_exp_, std::move(cs));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int lo = std::min(a.min_exp_, b.min_exp_);
    const int hi = std::min(a.max_exp(), b.max_exp());
    if (hi < lo) throw std::domain_error("laurent addition: empty retained window");
    std::vector<Rational> cs(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) cs[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return LaurentSeries(lo, std::move(cs));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int lo = a.min_exp_ + b.min_exp_;
    const int hi = std::min(a.max_exp() + b.min_exp_, b.max_exp() + a.min_exp_);
    if (hi < lo) throw std::domain_error("laurent product: empty retained window");
    std::vector<Rational> cs(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        const int ea = a.min_exp_ + static_cast<int>(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            const int e = ea + b.min_exp_ + static_cast<int>(j);
            if (e > hi) break;
            if (b.coeffs_[j].is_zero()) continue;
            cs[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentSeries(lo, std::move(cs));
}

LaurentSeries LaurentSeries::pow(unsigned exponent) const {
    if (exponent == 0) throw std::invalid_argument("LaurentSeries::pow: needs exponent >= 1");
    LaurentSeries r = *this;
    for (unsigned i = 1; i < exponent; ++i) r = r * *this;
    return r;
}

IdentityVerdict verify_exp_deriv_identity(unsigned k, unsigned order) {
    const LaurentSeries kernel = LaurentSeries::bernoulli_kernel(order);

    LaurentSeries lhs = kernel;
    for (unsigned i = 0; i < k; ++i) lhs = lhs.derive();

    const StirlingTable st(k + 1);
    LaurentSeries power = kernel;
    LaurentSeries rhs = power.scale(Rational(st.at(k + 1, 1)));
    for (unsigned m = 2; m <= k + 1; ++m) {
        power = power * kernel;
        rhs = rhs + power.scale(Rational(factorial(m - 1) * st.at(k + 1, m)));
    }
    if (k % 2 == 1) rhs = rhs.scale(Rational(-1));

    const int lo = std::min(lhs.min_exp(), rhs.min_exp());
    const int hi = std::min(lhs.max_exp(), rhs.max_exp());
    if (hi < lo)
        throw std::invalid_argument("verify_exp_deriv_identity: order too small for this k");
    for (int e = lo; e <= hi; ++e) {
        const Rational& l = lhs.coeff(e);
        const Rational& r = rhs.coeff(e);
        if (l != r) return {false, e, l, r};
    }
    return {true, 0, {}, {}};
}

}  // namespace bernlab
