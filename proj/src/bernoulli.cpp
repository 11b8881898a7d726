#include "bernlab/bernoulli.hpp"

#include "bernlab/combinatorics.hpp"
#include "bernlab/power_series.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace bernlab {

std::string_view to_string(BernoulliMethod m) {
    switch (m) {
        case BernoulliMethod::stirling_sum: return "stirling_sum";
        case BernoulliMethod::gf_division: return "gf_division";
        case BernoulliMethod::constant_term: return "constant_term";
        case BernoulliMethod::recursion_faulhaber: return "recursion_faulhaber";
        case BernoulliMethod::double_stirling: return "double_stirling";
        case BernoulliMethod::tangent_formula: return "tangent_formula";
        case BernoulliMethod::new_stirling: return "new_stirling";
    }
    throw std::logic_error("unknown BernoulliMethod");
}

std::optional<BernoulliMethod> method_from_string(std::string_view name) {
    for (const BernoulliMethod m : kAllMethods)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

bool is_even_only(BernoulliMethod m) {
    switch (m) {
        case BernoulliMethod::recursion_faulhaber:
        case BernoulliMethod::double_stirling:
        case BernoulliMethod::tangent_formula:
            return true;
        default:
            return false;
    }
}

Rational bernoulli_stirling(unsigned n) {
    const StirlingTable st(n);
    const auto& row = st.row(n);
    Rational sum;
    for (unsigned k = 0; k <= n; ++k) {
        if (row[k].is_zero()) continue;
        Rational term(factorial(k) * row[k], k + 1);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational bernoulli_gf(unsigned n) {
    const PowerSeries q = PowerSeries::divide(PowerSeries::identity(n + 1),
                                              PowerSeries::exp_minus_one(n + 1));
    return Rational(factorial(n)) * q.coeff(n);
}

Rational bernoulli_ct(unsigned n) {
    if (n == 0) return Rational(1);
    const PowerSeries emo = PowerSeries::exp_minus_one(n);
    PowerSeries acc(n);
    PowerSeries power = emo;
    for (unsigned k = 1; k <= n; ++k) {
        if (k > 1) power = power * emo;
        acc = acc + power.scale(Rational(k % 2 == 1 ? -1 : 1, k + 1));
    }
    return Rational(factorial(n)) * acc.coeff(n);
}

Rational bernoulli_recursion_with_exponent(unsigned k, unsigned power_sum_exponent) {
    if (k < 1) throw std::invalid_argument("recursion route: requires k >= 1");
    const FaulhaberCoefficients a = faulhaber_coefficients(power_sum_exponent);
    Rational sum;
    for (unsigned i = 1; i < k; ++i) {
        const unsigned idx = 2 * (k - i);
        if (idx >= a.coeffs.size()) continue;
        sum += a.coeffs[idx] / Rational(2 * (k - i) + 1);
    }
    return Rational(1, 2) - Rational(1, 2 * k + 1) - Rational(2 * k) * sum;
}

Rational bernoulli_recursion_faulhaber(unsigned k) {
    return bernoulli_recursion_with_exponent(k, 2 * k - 1);
}

Rational bernoulli_double_stirling(unsigned k) {
    if (k < 1) throw std::invalid_argument("double-Stirling route: requires k >= 1");
    const unsigned n = 2 * k;
    const StirlingTable st(n + 1);
    Rational first;
    for (unsigned m = 1; m + 1 <= n; ++m)
        first += Rational(st.at(n + 1, m + 1) * st.at(n, n - m), binomial(n, m));
    Rational second;
    for (unsigned m = 1; m <= n; ++m)
        second += Rational(st.at(n, m) * st.at(n + 1, n - m + 1), binomial(n, m - 1));
    return Rational(1) + first - Rational(n, n + 1) * second;
}

Rational bernoulli_tangent_variant(unsigned k, unsigned two_exponent) {
    if (k < 1) throw std::invalid_argument("tangent route: requires k >= 1");
    Integer sum = 0;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned l = 0; i + l < k; ++l) {
            const Integer term = binomial(2 * k, l) * ipow(Integer(k - i - l), 2 * k - 1);
            if ((i + l) % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
    }
    const Integer denom = (Integer(1) << two_exponent) * (ipow(Integer(2), 2 * k) - 1);
    const Rational prefactor(k % 2 == 1 ? Integer(k) : Integer(-static_cast<long long>(k)), denom);
    return prefactor * Rational(sum);
}

Rational bernoulli_tangent_literal(unsigned k) {
    return bernoulli_tangent_variant(k, 2 * (k - 1));
}

Rational bernoulli_new_stirling(unsigned n) {
    const StirlingTable st(2 * n);
    Rational sum;
    for (unsigned i = 0; i <= n; ++i) {
        const Integer& s = st.at(n + i, i);
        if (s.is_zero()) continue;
        Rational term(binomial(n + 1, i + 1) * s, binomial(n + i, i));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational bernoulli_by_method(BernoulliMethod m, unsigned n) {
    if (is_even_only(m)) {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument(std::string(to_string(m)) +
                                        " is defined only for even n >= 2");
        const unsigned k = n / 2;
        switch (m) {
            case BernoulliMethod::recursion_faulhaber: return bernoulli_recursion_faulhaber(k);
            case BernoulliMethod::double_stirling: return bernoulli_double_stirling(k);
            case BernoulliMethod::tangent_formula: return bernoulli_tangent_literal(k);
            default: break;
        }
    }
    switch (m) {
        case BernoulliMethod::stirling_sum: return bernoulli_stirling(n);
        case BernoulliMethod::gf_division: return bernoulli_gf(n);
        case BernoulliMethod::constant_term: return bernoulli_ct(n);
        case BernoulliMethod::new_stirling: return bernoulli_new_stirling(n);
        default: break;
    }
    throw std::logic_error("unhandled BernoulliMethod");
}

namespace {

std::uint64_t elapsed_ns_since(std::chrono::steady_clock::time_point start) {
    const auto d = std::chrono::steady_clock::now() - start;
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
}

}  // namespace

CrossCheckReport cross_check(unsigned n_max) {
    // verified methods in name order, for deterministic report assembly
    static constexpr std::array verified = {
        BernoulliMethod::constant_term,       BernoulliMethod::double_stirling,
        BernoulliMethod::gf_division,         BernoulliMethod::new_stirling,
        BernoulliMethod::recursion_faulhaber, BernoulliMethod::stirling_sum,
    };

    CrossCheckReport report;
    report.n_max = n_max;
    for (unsigned n = 0; n <= n_max; ++n) {
        const bool even_defined = n >= 2 && n % 2 == 0;
        const std::size_t row_start = report.cells.size();
        for (const BernoulliMethod m : verified) {
            if (is_even_only(m) && !even_defined) continue;
            const auto start = std::chrono::steady_clock::now();
            Rational value = bernoulli_by_method(m, n);
            const std::uint64_t ns = elapsed_ns_since(start);
            report.cells.push_back({n, m, std::move(value), ns});
            report.method_total_ns[std::string(to_string(m))] += ns;
        }
        const auto gf_cell =
            std::find_if(report.cells.begin() + static_cast<std::ptrdiff_t>(row_start),
                         report.cells.end(), [](const CrossCheckCell& c) {
                             return c.method == BernoulliMethod::gf_division;
                         });
        for (std::size_t i = row_start; i < report.cells.size(); ++i) {
            const CrossCheckCell& cell = report.cells[i];
            if (cell.value == gf_cell->value) continue;
            report.agree = false;
            report.disagreements.push_back({n, cell.method, cell.value, gf_cell->value});
        }
        if (even_defined) {
            const auto start = std::chrono::steady_clock::now();
            Rational value = bernoulli_tangent_literal(n / 2);
            const std::uint64_t ns = elapsed_ns_since(start);
            report.literal_tangent.push_back(
                {n, BernoulliMethod::tangent_formula, std::move(value), ns});
            report.method_total_ns[std::string(to_string(BernoulliMethod::tangent_formula))] += ns;
        }
    }
    return report;
}

}  // namespace bernlab
