#include "bernlab/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bernlab {

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) at this point
    }
    return r;
}

Integer ipow(const Integer& base, unsigned exponent) {
    if (exponent == 0) return 1;
    return boost::multiprecision::pow(base, exponent);
}

Integer stirling_explicit(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer acc = 0;
    for (unsigned l = 0; l <= k; ++l) {
        const Integer term = binomial(k, l) * ipow(Integer(l), n);
        if ((k - l) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    const Integer kfact = factorial(k);
    const Integer q = acc / kfact;
    if (q * kfact != acc)
        throw std::logic_error("stirling_explicit: alternating sum not divisible by k!");
    return q;
}

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
    rows_[0].assign(1, Integer(1));
    for (unsigned n = 1; n <= max_n; ++n) {
        auto& row = rows_[n];
        row.assign(n + 1, Integer(0));
        const auto& prev = rows_[n - 1];
        for (unsigned k = 1; k <= n; ++k) {
            Integer v = prev[k - 1];
            if (k < n) v += Integer(k) * prev[k];
            row[k] = std::move(v);
        }
    }
}

const Integer& StirlingTable::at(unsigned n, unsigned k) const {
    if (n > max_n_) throw std::out_of_range("StirlingTable::at: n beyond max_n");
    static const Integer zero{0};
    if (k > n) return zero;
    return rows_[n][k];
}

const std::vector<Integer>& StirlingTable::row(unsigned n) const {
    if (n > max_n_) throw std::out_of_range("StirlingTable::row: n beyond max_n");
    return rows_[n];
}

namespace {

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace

Rational bell_partial(unsigned n, unsigned k, std::span<const Rational> xs) {
    if (k < 1 || k > n) throw std::invalid_argument("bell_partial: requires 1 <= k <= n");
    const unsigned m = n - k + 1;
    if (xs.size() != m)
        throw std::invalid_argument("bell_partial: needs exactly n - k + 1 arguments");

    Rational total;
    std::vector<unsigned> counts(m, 0);
    // Descend over l_1 .. l_m; prune on the two linear constraints.
    auto descend = [&](auto&& self, unsigned idx, unsigned parts_left,
                       unsigned weight_left) -> void {
        if (idx == m) {
            if (parts_left != 0 || weight_left != 0) return;
            Rational term(factorial(n));
            for (unsigned i = 0; i < m; ++i) {
                if (counts[i] == 0) continue;
                term /= Rational(factorial(counts[i]));
                term *= rational_pow(xs[i] / Rational(factorial(i + 1)), counts[i]);
            }
            total += term;
            return;
        }
        const unsigned size = idx + 1;
        const unsigned max_count = std::min(parts_left, weight_left / size);
        for (unsigned c = 0; c <= max_count; ++c) {
            const unsigned pl = parts_left - c;
            const unsigned wl = weight_left - c * size;
            // remaining parts have sizes in [size+1, m]
            if (pl == 0 ? wl != 0 : (wl < pl * (size + 1) || wl > pl * m)) continue;
            counts[idx] = c;
            self(self, idx + 1, pl, wl);
        }
        counts[idx] = 0;
    };
    descend(descend, 0, k, n);
    return total;
}

Rational faa_di_bruno(unsigned n, std::span<const Rational> f_derivs,
                      std::span<const Rational> g_derivs) {
    if (n < 1) throw std::invalid_argument("faa_di_bruno: requires n >= 1");
    if (f_derivs.size() < n || g_derivs.size() < n)
        throw std::invalid_argument("faa_di_bruno: needs derivative values through order n");
    Rational total;
    for (unsigned k = 1; k <= n; ++k)
        total += f_derivs[k - 1] * bell_partial(n, k, g_derivs.subspan(0, n - k + 1));
    return total;
}

Rational FaulhaberCoefficients::eval(const Integer& n) const {
    Rational acc;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * Rational(n) + coeffs[i];
    return acc;
}

FaulhaberCoefficients faulhaber_coefficients(unsigned p) {
    const unsigned dim = p + 2;  // coefficients A_0 .. A_{p+1}, nodes 0 .. p+1

    // power sums at the unit-spaced nodes, collapsed in place into the
    // forward differences diff[j] = Delta^j y_0
    std::vector<Integer> diff(dim);
    Integer sum = 0;
    for (unsigned r = 0; r < dim; ++r) {
        if (r > 0) sum += ipow(Integer(r), p);
        diff[r] = sum;
    }
    for (unsigned j = 1; j < dim; ++j)
        for (unsigned r = dim - 1; r >= j; --r) diff[r] -= diff[r - 1];

    // Newton forward form: P(n) = sum_j (Delta^j y_0 / j!) prod_{i<j} (n - i);
    // the falling-factorial basis is expanded into powers of n as we go
    std::vector<Rational> a(dim);
    std::vector<Integer> falling{1};
    Integer j_factorial = 1;
    for (unsigned j = 0; j < dim; ++j) {
        if (j > 0) {
            j_factorial *= j;
            falling.push_back(0);
            for (unsigned m = static_cast<unsigned>(falling.size()) - 1; m > 0; --m) {
                falling[m] = falling[m - 1] - Integer(j - 1) * falling[m];
            }
            falling[0] *= -static_cast<long long>(j - 1);
        }
        if (diff[j].is_zero()) continue;
        const Rational c(diff[j], j_factorial);
        for (unsigned m = 0; m <= j; ++m) {
            if (falling[m].is_zero()) continue;
            a[m] += c * Rational(falling[m]);
        }
    }

    FaulhaberCoefficients result{p, std::move(a)};
    assert(result.coeffs[0].is_zero());

    // definitional audit: reproduce the power sums at n = 1 .. p+2
    Integer check = 0;
    for (unsigned nn = 1; nn <= p + 2; ++nn) {
        check += ipow(Integer(nn), p);
        if (result.eval(Integer(nn)) != Rational(check))
            throw std::logic_error("faulhaber: coefficients fail the defining power sums");
    }
    return result;
}

}  // namespace bernlab
