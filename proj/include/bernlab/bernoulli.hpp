#pragma once

#include "bernlab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bernlab {

/// The independent computation routes. The three even-only routes take the
/// half-index k and produce B_{2k}; the rest accept any n >= 0. All routes
/// use the B_1 = -1/2 convention of the generating function x/(e^x - 1).
enum class BernoulliMethod {
    stirling_sum,
    gf_division,
    constant_term,
    recursion_faulhaber,
    double_stirling,
    tangent_formula,
    new_stirling,
};

inline constexpr std::array<BernoulliMethod, 7> kAllMethods = {
    BernoulliMethod::stirling_sum,      BernoulliMethod::gf_division,
    BernoulliMethod::constant_term,     BernoulliMethod::recursion_faulhaber,
    BernoulliMethod::double_stirling,   BernoulliMethod::tangent_formula,
    BernoulliMethod::new_stirling,
};

std::string_view to_string(BernoulliMethod m);
std::optional<BernoulliMethod> method_from_string(std::string_view name);
bool is_even_only(BernoulliMethod m);

/// B_n = sum_{k=0}^{n} (-1)^k k!/(k+1) S(n,k), Stirling row by recurrence.
Rational bernoulli_stirling(unsigned n);

/// B_n = n! [x^n] (x / (e^x - 1)), by exact series division. The division
/// self-verifies den * quotient == num, which makes this the designated
/// reference route for cross-checks.
Rational bernoulli_gf(unsigned n);

/// B_n = n! [x^n] sum_{k=1}^{n} (-1)^k (e^x - 1)^k / (k+1) for n >= 1
/// (terms beyond k = n have valuation > n, so the cut is exact); B_0 = 1.
Rational bernoulli_ct(unsigned n);

/// B_{2k} = 1/2 - 1/(2k+1) - 2k sum_{i=1}^{k-1} A_{2(k-i)} / (2(k-i)+1),
/// with A_m the power-sum coefficients for exponent 2k-1, obtained by
/// interpolation — never from a Bernoulli-producing route. Requires k >= 1.
Rational bernoulli_recursion_faulhaber(unsigned k);

/// Same recursion with the power-sum exponent chosen by the caller; used by
/// the exponent sweep. Requires k >= 1.
Rational bernoulli_recursion_with_exponent(unsigned k, unsigned power_sum_exponent);

/// B_{2k} = 1 + sum_{m=1}^{2k-1} S(2k+1,m+1) S(2k,2k-m) / C(2k,m)
///            - (2k/(2k+1)) sum_{m=1}^{2k} S(2k,m) S(2k+1,2k-m+1) / C(2k,m-1).
/// Requires k >= 1.
Rational bernoulli_double_stirling(unsigned k);

/// The tangent-derived closed form, evaluated literally as transcribed:
/// prefactor (-1)^(k-1) k / (2^(2(k-1)) (2^(2k) - 1)) times
/// sum_{i=0}^{k-1} sum_{l=0}^{k-i-1} (-1)^(i+l) C(2k,l) (k-i-l)^(2k-1).
/// Known not to reproduce B_{2k} (already at k = 1 it yields 1/3); kept as
/// a diagnostic route and quarantined from correctness verdicts.
Rational bernoulli_tangent_literal(unsigned k);

/// Same double sum with the power-of-two exponent in the prefactor replaced
/// by `two_exponent`; the sweep uses this hook. Requires k >= 1.
Rational bernoulli_tangent_variant(unsigned k, unsigned two_exponent);

/// B_n = sum_{i=0}^{n} (-1)^i C(n+1,i+1)/C(n+i,i) S(n+i,i); needs Stirling
/// values up to S(2n, n).
Rational bernoulli_new_stirling(unsigned n);

/// Uniform dispatch; n is always the Bernoulli index, so even-only methods
/// require an even n >= 2 and throw std::invalid_argument otherwise.
Rational bernoulli_by_method(BernoulliMethod m, unsigned n);

struct CrossCheckCell {
    unsigned n = 0;
    BernoulliMethod method = BernoulliMethod::gf_division;
    Rational value;
    std::uint64_t elapsed_ns = 0;
};

struct CrossCheckDisagreement {
    unsigned n = 0;
    BernoulliMethod method = BernoulliMethod::gf_division;
    Rational value;
    Rational reference;
};

struct CrossCheckReport {
    unsigned n_max = 0;
    bool agree = true;
    /// Verified methods only, sorted by n then method name.
    std::vector<CrossCheckCell> cells;
    std::vector<CrossCheckDisagreement> disagreements;
    /// The literal tangent transcription, reported separately so its known
    /// discrepancy never fails the verdict.
    std::vector<CrossCheckCell> literal_tangent;
    std::map<std::string, std::uint64_t> method_total_ns;
};

/// Runs every applicable verified method for each n in 0..n_max (even-only
/// methods skipped at odd n), compares everything against gf_division, and
/// records per-cell timings. Deterministic assembly order.
CrossCheckReport cross_check(unsigned n_max);

}  // namespace bernlab
