#pragma once

#include "bernlab/rational.hpp"

#include <span>
#include <vector>

namespace bernlab {

Integer factorial(unsigned n);

/// C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// base^exponent with the 0^0 == 1 convention.
Integer ipow(const Integer& base, unsigned exponent);

/// Stirling number of the second kind from the alternating explicit sum
/// (1/k!) sum_{l=0}^{k} (-1)^{k-l} C(k,l) l^n. Zero when k > n. Throws
/// std::logic_error if the division by k! is inexact (an arithmetic bug).
Integer stirling_explicit(unsigned n, unsigned k);

/// Triangle of S(n, k) for 0 <= k <= n <= max_n, filled by the recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1). Immutable once built; freely
/// shareable across threads.
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_n);

    unsigned max_n() const noexcept { return max_n_; }

    /// Zero when k > n; throws std::out_of_range when n > max_n.
    const Integer& at(unsigned n, unsigned k) const;

    const std::vector<Integer>& row(unsigned n) const;

private:
    unsigned max_n_;
    std::vector<std::vector<Integer>> rows_;
};

/// Partial Bell polynomial B_{n,k} evaluated at xs = (x_1, .., x_{n-k+1}),
/// by direct enumeration of the count vectors (l_1, .., l_{n-k+1}) with
/// sum i*l_i = n and sum l_i = k. Requires 1 <= k <= n and
/// xs.size() == n - k + 1; violations throw std::invalid_argument.
Rational bell_partial(unsigned n, unsigned k, std::span<const Rational> xs);

/// n-th derivative of f(g(x)) at a point, from the derivative values
/// f', .., f^(n) taken at g(x0) and g', .., g^(n) taken at x0:
/// sum_{k=1}^{n} f^(k) B_{n,k}(g', .., g^(n-k+1)). Requires n >= 1 and at
/// least n values in each sequence.
Rational faa_di_bruno(unsigned n, std::span<const Rational> f_derivs,
                      std::span<const Rational> g_derivs);

/// Coefficients A_0 .. A_{p+1} of the closed form of sum_{m=1}^{n} m^p,
/// indexed by the power of n. A_0 is always zero.
struct FaulhaberCoefficients {
    unsigned exponent = 0;
    std::vector<Rational> coeffs;

    Rational eval(const Integer& n) const;
};

/// Exact interpolation through the power sums at the nodes n = 0 .. p+1,
/// solved in Newton forward-difference form on the unit-spaced nodes.
/// Self-checks against the defining sums at n = 1 .. p+2. Independent of
/// every Bernoulli route.
FaulhaberCoefficients faulhaber_coefficients(unsigned p);

}  // namespace bernlab
