#include "bernlab/verification.hpp"

#include "bernlab/bernoulli.hpp"
#include "bernlab/combinatorics.hpp"
#include "bernlab/power_series.hpp"

#include <random>
#include <sstream>

namespace bernlab {

namespace {

Rational random_rational(std::mt19937_64& rng, long long lo, long long hi, bool nonzero) {
    std::uniform_int_distribution<long long> num_dist(lo, hi);
    std::uniform_int_distribution<long long> den_dist(1, 40);
    for (;;) {
        const long long num = num_dist(rng);
        if (nonzero && num == 0) continue;
        return Rational(Integer(num), Integer(den_dist(rng)));
    }
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace

CheckOutcome check_stirling_dual_algorithms(unsigned max_n) {
    const StirlingTable table(max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            const Integer direct = stirling_explicit(n, k);
            if (direct == table.at(n, k)) continue;
            std::ostringstream os;
            os << "S(" << n << "," << k << "): explicit sum " << direct
               << " != recurrence " << table.at(n, k);
            return {false, os.str()};
        }
    }
    return {};
}

CheckOutcome check_stirling_gf_coefficients(unsigned max_n) {
    const PowerSeries emo = PowerSeries::exp_minus_one(max_n);
    PowerSeries power = PowerSeries::constant(max_n, Rational(1));  // (e^x-1)^0
    for (unsigned k = 0; k <= max_n; ++k) {
        if (k > 0) power = power * emo;
        const Rational inv_kfact = Rational(1) / Rational(factorial(k));
        for (unsigned n = k; n <= max_n; ++n) {
            const Rational got = Rational(factorial(n)) * power.coeff(n) * inv_kfact;
            const Rational want(stirling_explicit(n, k));
            if (got == want) continue;
            std::ostringstream os;
            os << "n! [x^n] (e^x-1)^k/k! at n=" << n << " k=" << k << ": " << got
               << " != S(n,k) = " << want;
            return {false, os.str()};
        }
    }
    return {};
}

CheckOutcome check_bell_specialization(unsigned max_n) {
    for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            const std::vector<Rational> ones(n - k + 1, Rational(1));
            const Rational got = bell_partial(n, k, ones);
            const Rational want(stirling_explicit(n, k));
            if (got == want) continue;
            std::ostringstream os;
            os << "B_{" << n << "," << k << "}(1,..,1) = " << got << " != S(" << n << "," << k
               << ") = " << want;
            return {false, os.str()};
        }
    }
    return {};
}

CheckOutcome check_bell_homogeneity(unsigned cases, unsigned max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> n_dist(1, max_n);
    for (unsigned c = 0; c < cases; ++c) {
        const unsigned n = n_dist(rng);
        const unsigned k = std::uniform_int_distribution<unsigned>(1, n)(rng);
        const unsigned m = n - k + 1;
        const Rational a = random_rational(rng, -9, 9, true);
        const Rational b = random_rational(rng, -9, 9, true);
        std::vector<Rational> xs(m);
        std::vector<Rational> scaled(m);
        Rational b_power = b;
        for (unsigned i = 0; i < m; ++i) {
            xs[i] = random_rational(rng, -9, 9, false);
            scaled[i] = a * b_power * xs[i];  // a b^(i+1) x_(i+1)
            b_power *= b;
        }
        const Rational lhs = bell_partial(n, k, scaled);
        const Rational rhs = rational_pow(a, k) * rational_pow(b, n) * bell_partial(n, k, xs);
        if (lhs == rhs) continue;
        std::ostringstream os;
        os << "homogeneity case " << c << " (n=" << n << " k=" << k << " a=" << a << " b=" << b
           << "): " << lhs << " != " << rhs;
        return {false, os.str()};
    }
    return {};
}

CheckOutcome check_faa_vs_series_composition(unsigned cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr unsigned kMaxN = 8;
    constexpr unsigned kDegree = 6;
    for (unsigned c = 0; c < cases; ++c) {
        const unsigned n = std::uniform_int_distribution<unsigned>(1, kMaxN)(rng);
        PowerSeries f(kMaxN);
        PowerSeries g(kMaxN);
        std::vector<Rational> f_coeffs(kMaxN + 1);
        std::vector<Rational> g_coeffs(kMaxN + 1);
        for (unsigned j = 0; j <= kDegree; ++j) {
            f_coeffs[j] = random_rational(rng, -6, 6, false);
            g_coeffs[j] = j == 0 ? Rational() : random_rational(rng, -6, 6, false);
        }
        f = PowerSeries(kMaxN, f_coeffs);
        g = PowerSeries(kMaxN, g_coeffs);

        std::vector<Rational> f_derivs(n);
        std::vector<Rational> g_derivs(n);
        for (unsigned j = 1; j <= n; ++j) {
            f_derivs[j - 1] = Rational(factorial(j)) * f.coeff(j);
            g_derivs[j - 1] = Rational(factorial(j)) * g.coeff(j);
        }
        const Rational via_bell = faa_di_bruno(n, f_derivs, g_derivs);
        const Rational via_series =
            Rational(factorial(n)) * PowerSeries::compose(f, g).coeff(n);
        if (via_bell == via_series) continue;
        std::ostringstream os;
        os << "faa-di-bruno case " << c << " (n=" << n << "): bell sum " << via_bell
           << " != series composition " << via_series;
        return {false, os.str()};
    }
    return {};
}

CheckOutcome check_exp_deriv_identities(unsigned max_k, unsigned order) {
    for (unsigned k = 0; k <= max_k; ++k) {
        const IdentityVerdict v = verify_exp_deriv_identity(k, order);
        if (v.equal) continue;
        std::ostringstream os;
        os << "derivative identity fails at k=" << k << ", x^" << v.first_diff_exp << ": lhs "
           << v.lhs << " != rhs " << v.rhs;
        return {false, os.str()};
    }
    return {};
}

CheckOutcome check_ct_series_identity(unsigned max_order) {
    const unsigned k_cut = max_order;
    const PowerSeries emo = PowerSeries::exp_minus_one(max_order);
    PowerSeries direct(max_order);
    PowerSeries power = emo;
    for (unsigned k = 1; k <= k_cut; ++k) {
        if (k > 1) power = power * emo;
        direct = direct + power.scale(Rational(k % 2 == 1 ? -1 : 1, k + 1));
    }
    // (ln(1+u) - u)/u, then u = e^x - 1
    const PowerSeries log_part = PowerSeries::divide(
        PowerSeries::log1p(max_order + 1) - PowerSeries::identity(max_order + 1),
        PowerSeries::identity(max_order + 1));
    const PowerSeries composed =
        PowerSeries::compose(log_part, PowerSeries::exp_minus_one(max_order));
    for (unsigned j = 1; j <= max_order; ++j) {
        if (direct.coeff(j) == composed.coeff(j)) continue;
        std::ostringstream os;
        os << "constant-term series identity fails at x^" << j << ": " << direct.coeff(j)
           << " != " << composed.coeff(j);
        return {false, os.str()};
    }
    return {};
}

CheckOutcome check_route_agreement(unsigned n_max) {
    const CrossCheckReport report = cross_check(n_max);
    if (report.agree) return {};
    const CrossCheckDisagreement& d = report.disagreements.front();
    std::ostringstream os;
    os << "n=" << d.n << " method=" << to_string(d.method) << " value=" << d.value
       << " reference=" << d.reference;
    return {false, os.str()};
}

namespace {

struct ExponentRule {
    std::string label;
    int shift;  // exponent = 2k + shift
};

constexpr int kRuleCount = 4;
const ExponentRule kRules[kRuleCount] = {
    {"2k-2 (as printed)", -2},
    {"2k-1", -1},
    {"2k", 0},
    {"2k+1", +1},
};

unsigned rule_exponent(const ExponentRule& rule, unsigned k) {
    return static_cast<unsigned>(2 * static_cast<int>(k) + rule.shift);
}

}  // namespace

RecursionExponentSweep recursion_exponent_sweep(unsigned max_k) {
    RecursionExponentSweep sweep;
    sweep.max_k = max_k;
    for (const ExponentRule& rule : kRules) {
        ExponentSweepVariant variant{rule.label, std::nullopt};
        for (unsigned k = 1; k <= max_k; ++k) {
            const Rational got = bernoulli_recursion_with_exponent(k, rule_exponent(rule, k));
            if (got != bernoulli_gf(2 * k)) {
                variant.first_mismatch_k = k;
                break;
            }
        }
        sweep.variants.push_back(std::move(variant));
    }
    return sweep;
}

unsigned TangentSweepVariant::exponent_at(unsigned k) const {
    return static_cast<unsigned>(2 * static_cast<int>(k) + exponent_shift);
}

TangentSweepReport tangent_sweep(unsigned max_k) {
    TangentSweepReport report;
    report.max_k = max_k;
    for (unsigned k = 1; k <= max_k; ++k) report.reference.push_back(bernoulli_gf(2 * k));
    for (const ExponentRule& rule : kRules) {
        TangentSweepVariant variant;
        variant.label = rule.label;
        variant.exponent_shift = rule.shift;
        variant.uniform_match = true;
        for (unsigned k = 1; k <= max_k; ++k) {
            TangentSweepCell cell;
            cell.k = k;
            cell.value = bernoulli_tangent_variant(k, rule_exponent(rule, k));
            cell.matches_oracle = cell.value == report.reference[k - 1];
            variant.uniform_match = variant.uniform_match && cell.matches_oracle;
            variant.cells.push_back(std::move(cell));
        }
        report.variants.push_back(std::move(variant));
    }
    return report;
}

}  // namespace bernlab
