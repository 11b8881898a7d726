#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernlab/bernoulli.hpp"
#include "bernlab/combinatorics.hpp"
#include "bernlab/verification.hpp"

#include <vector>

using namespace bernlab;

namespace {

Rational rat(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

// classical values through B_12
const std::vector<Rational> kKnown = {
    Rational(1),  rat(-1, 2),     rat(1, 6),    Rational(0), rat(-1, 30),
    Rational(0),  rat(1, 42),     Rational(0),  rat(-1, 30), Rational(0),
    rat(5, 66),   Rational(0),    rat(-691, 2730),
};

}  // namespace

TEST_CASE("generating-function route reproduces the classical table") {
    for (unsigned n = 0; n < kKnown.size(); ++n) CHECK(bernoulli_gf(n) == kKnown[n]);
}

TEST_CASE("stirling-sum route") {
    CHECK(bernoulli_stirling(0) == Rational(1));
    CHECK(bernoulli_stirling(1) == rat(-1, 2));
    CHECK(bernoulli_stirling(2) == rat(1, 6));
    CHECK(bernoulli_stirling(12) == rat(-691, 2730));
}

TEST_CASE("stirling-sum route: dropping the k=0 term changes nothing for n >= 1") {
    for (unsigned n = 1; n <= 20; ++n) {
        const StirlingTable st(n);
        Rational from_zero;
        Rational from_one;
        for (unsigned k = 0; k <= n; ++k) {
            const Rational term = (k % 2 == 0 ? Rational(1) : Rational(-1)) *
                                  Rational(factorial(k) * st.at(n, k), k + 1);
            from_zero += term;
            if (k >= 1) from_one += term;
        }
        CHECK(from_zero == from_one);  // S(n,0) = 0 for n >= 1
        CHECK(from_zero == bernoulli_stirling(n));
    }
}

TEST_CASE("constant-term route") {
    CHECK(bernoulli_ct(0) == Rational(1));
    CHECK(bernoulli_ct(1) == rat(-1, 2));
    CHECK(bernoulli_ct(2) == rat(1, 6));
    CHECK(bernoulli_ct(7) == Rational(0));
}

TEST_CASE("faulhaber recursion route") {
    CHECK(bernoulli_recursion_faulhaber(1) == rat(1, 6));    // empty sum: 1/2 - 1/3
    CHECK(bernoulli_recursion_faulhaber(2) == rat(-1, 30));  // uses A_2 = 1/4 from exponent 3
    CHECK(bernoulli_recursion_faulhaber(3) == rat(1, 42));
    CHECK_THROWS_AS(bernoulli_recursion_faulhaber(0), std::invalid_argument);
}

TEST_CASE("double-stirling route") {
    // hand value at k=1: 1 + 3/2 - (2/3)(3 + 1/2)
    CHECK(bernoulli_double_stirling(1) == rat(1, 6));
    CHECK(bernoulli_double_stirling(2) == rat(-1, 30));
    CHECK(bernoulli_double_stirling(5) == rat(5, 66));
}

TEST_CASE("new-stirling route") {
    CHECK(bernoulli_new_stirling(0) == Rational(1));
    CHECK(bernoulli_new_stirling(1) == rat(-1, 2));
    CHECK(bernoulli_new_stirling(6) == rat(1, 42));
}

TEST_CASE("tangent transcription: literal value and exponent hook") {
    // literal evaluation at k=1: prefactor 1/3, inner sum 1
    CHECK(bernoulli_tangent_literal(1) == rat(1, 3));
    CHECK(bernoulli_tangent_literal(1) != bernoulli_gf(2));
    // exponent 2k-1 repairs k=1 only
    CHECK(bernoulli_tangent_variant(1, 1) == rat(1, 6));
}

TEST_CASE("tangent sweep is internally consistent") {
    const TangentSweepReport report = tangent_sweep(4);
    CHECK(report.variants.size() == 4);
    CHECK(report.reference[0] == rat(1, 6));
    for (const TangentSweepVariant& variant : report.variants) {
        bool all = true;
        for (const TangentSweepCell& cell : variant.cells) {
            CHECK(cell.matches_oracle == (cell.value == report.reference[cell.k - 1]));
            all = all && cell.matches_oracle;
        }
        CHECK(variant.uniform_match == all);
    }
}

TEST_CASE("recursion exponent sweep singles out 2k-1") {
    const RecursionExponentSweep sweep = recursion_exponent_sweep(6);
    for (const ExponentSweepVariant& variant : sweep.variants) {
        if (variant.label == "2k-1")
            CHECK(!variant.first_mismatch_k.has_value());
        else
            CHECK(variant.first_mismatch_k.has_value());
    }
}

TEST_CASE("all routes agree over a midsize range") {
    for (unsigned n = 0; n <= 24; ++n) {
        const Rational reference = bernoulli_gf(n);
        CHECK(bernoulli_stirling(n) == reference);
        CHECK(bernoulli_ct(n) == reference);
        CHECK(bernoulli_new_stirling(n) == reference);
        if (n >= 2 && n % 2 == 0) {
            CHECK(bernoulli_recursion_faulhaber(n / 2) == reference);
            CHECK(bernoulli_double_stirling(n / 2) == reference);
        }
    }
}

TEST_CASE("odd indices vanish and even signs alternate") {
    for (unsigned n = 3; n <= 21; n += 2) {
        CHECK(bernoulli_gf(n).is_zero());
        CHECK(bernoulli_stirling(n).is_zero());
        CHECK(bernoulli_ct(n).is_zero());
        CHECK(bernoulli_new_stirling(n).is_zero());
    }
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(bernoulli_gf(2 * k).sign() == (k % 2 == 1 ? 1 : -1));
}

TEST_CASE("method dispatch enforces parity at the boundary") {
    CHECK(bernoulli_by_method(BernoulliMethod::gf_division, 3) == Rational(0));
    CHECK(bernoulli_by_method(BernoulliMethod::double_stirling, 4) == rat(-1, 30));
    CHECK_THROWS_AS(bernoulli_by_method(BernoulliMethod::recursion_faulhaber, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(bernoulli_by_method(BernoulliMethod::tangent_formula, 0),
                    std::invalid_argument);
    CHECK(method_from_string("stirling_sum") == BernoulliMethod::stirling_sum);
    CHECK(!method_from_string("no_such_method").has_value());
    for (const BernoulliMethod m : kAllMethods)
        CHECK(method_from_string(to_string(m)) == m);
}

TEST_CASE("cross check: verdicts, quarantine, determinism") {
    const CrossCheckReport report = cross_check(12);
    CHECK(report.agree);
    CHECK(report.disagreements.empty());

    // n = 0 row holds the four all-n methods; even rows add the two even-only ones
    unsigned n0_cells = 0;
    for (const CrossCheckCell& cell : report.cells)
        if (cell.n == 0) ++n0_cells;
    CHECK(n0_cells == 4);
    for (const CrossCheckCell& cell : report.cells)
        if (cell.n == 0) CHECK(cell.value == Rational(1));

    // the literal tangent section is populated but never part of the verdict
    CHECK(report.literal_tangent.size() == 6);  // n = 2, 4, .., 12
    CHECK(report.literal_tangent.front().value == rat(1, 3));

    // assembly is sorted by n, then method name
    for (std::size_t i = 1; i < report.cells.size(); ++i) {
        const auto& a = report.cells[i - 1];
        const auto& b = report.cells[i];
        const bool sorted =
            a.n < b.n || (a.n == b.n && to_string(a.method) < to_string(b.method));
        CHECK(sorted);
    }

    CHECK(report.method_total_ns.contains("gf_division"));
    CHECK(report.method_total_ns.contains("tangent_formula"));

    // values are deterministic across runs
    const CrossCheckReport again = cross_check(12);
    REQUIRE(again.cells.size() == report.cells.size());
    for (std::size_t i = 0; i < report.cells.size(); ++i)
        CHECK(again.cells[i].value == report.cells[i].value);
}

TEST_CASE("cross check at n_max = 0") {
    const CrossCheckReport report = cross_check(0);
    CHECK(report.agree);
    CHECK(report.cells.size() == 4);
    for (const CrossCheckCell& cell : report.cells) CHECK(cell.value == Rational(1));
    CHECK(report.literal_tangent.empty());
}
