#pragma once

#include "bernlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bernlab {

/// Result of one verification check; `counterexample` holds the first
/// failing case, formatted for humans, and is empty on a pass.
struct CheckOutcome {
    bool pass = true;
    std::string counterexample;
};

/// stirling_explicit(n, k) == StirlingTable entry for all 0 <= k <= n <= max_n.
CheckOutcome check_stirling_dual_algorithms(unsigned max_n);

/// n! [x^n] ((e^x - 1)^k / k!) == S(n, k) for all 0 <= k <= n <= max_n.
CheckOutcome check_stirling_gf_coefficients(unsigned max_n);

/// B_{n,k}(1, .., 1) == S(n, k) for all 1 <= k <= n <= max_n.
CheckOutcome check_bell_specialization(unsigned max_n);

/// B_{n,k}(a b x_1, a b^2 x_2, ..) == a^k b^n B_{n,k}(x_1, ..) on random
/// rational inputs with 1 <= k <= n <= max_n.
CheckOutcome check_bell_homogeneity(unsigned cases, unsigned max_n, std::uint64_t seed);

/// faa_di_bruno(n, ..) == n! [x^n] compose(f, g) for random polynomial
/// pairs of degree <= 6 and 1 <= n <= 8.
CheckOutcome check_faa_vs_series_composition(unsigned cases, std::uint64_t seed);

/// verify_exp_deriv_identity(k, order) holds for all 0 <= k <= max_k.
CheckOutcome check_exp_deriv_identities(unsigned max_k, unsigned order);

/// sum_{k=1}^{K} (-1)^k (e^x-1)^k/(k+1) matches (ln(1+u) - u)/u composed
/// with u = e^x - 1 on the coefficients of x^1 .. x^K.
CheckOutcome check_ct_series_identity(unsigned max_order);

/// cross_check(n_max) verdict, with the first disagreement as counterexample.
CheckOutcome check_route_agreement(unsigned n_max);

/// One exponent rule tried by a sweep: the label is the rule as a function
/// of k, first_mismatch_k is empty when the rule matched the reference for
/// every swept k.
struct ExponentSweepVariant {
    std::string label;
    std::optional<unsigned> first_mismatch_k;
};

/// Sweep of the power-sum exponent feeding the recursion route, against the
/// gf reference, for k = 1 .. max_k. Tries 2k-2, 2k-1, 2k, 2k+1.
struct RecursionExponentSweep {
    unsigned max_k = 0;
    std::vector<ExponentSweepVariant> variants;
};

RecursionExponentSweep recursion_exponent_sweep(unsigned max_k);

struct TangentSweepCell {
    unsigned k = 0;
    Rational value;
    bool matches_oracle = false;
};

struct TangentSweepVariant {
    std::string label;          // exponent rule as a function of k
    unsigned exponent_at(unsigned k) const;
    int exponent_shift = 0;     // exponent used is 2k + exponent_shift
    std::vector<TangentSweepCell> cells;
    bool uniform_match = false; // true iff every swept k matched
};

/// Evaluates the literal tangent transcription and its exponent variants
/// for k = 1 .. max_k against the gf reference. Pure reporting: nothing in
/// here decides pass/fail, the caller reads the evidence.
struct TangentSweepReport {
    unsigned max_k = 0;
    std::vector<Rational> reference;  // B_{2k} for k = 1 .. max_k
    std::vector<TangentSweepVariant> variants;
};

TangentSweepReport tangent_sweep(unsigned max_k);

}  // namespace bernlab
