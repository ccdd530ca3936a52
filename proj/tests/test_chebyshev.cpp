#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fratio/chebyshev.hpp"
#include "fratio/classify.hpp"
#include "fratio/search.hpp"

using namespace fratio;

static const StepFunction kChebyshevStep{
    {{1, +1}, {2, -1}, {3, -1}, {5, -1}, {30, +1}}};

// long-double reimplementation of A, independent of the mpfr path
static long double a_oracle(const StepFunction& s) {
    long double a = 0;
    for (const auto& t : s.terms)
        a -= t.coeff * logl((long double)t.modulus) / t.modulus;
    return a;
}

TEST_CASE("Real wrapper basics") {
    Real two(2);
    Real x = Real::log_of(8);
    x /= 3;
    Real y = Real::log_of(2);
    CHECK(std::abs(x.to_double() - y.to_double()) < 1e-17);
    CHECK(y < two);
    CHECK(Real::log_of(2).to_string(5) == "0.69315");
    Real z(1);
    z *= Rat(3, 2);
    CHECK(z.to_double() == 1.5);
}

TEST_CASE("constant_A for the classical step function") {
    Real a = constant_A(kChebyshevStep);
    double expect = std::log(2.0) / 2 + std::log(3.0) / 3 + std::log(5.0) / 5 -
                    std::log(30.0) / 30;
    CHECK(std::abs(a.to_double() - expect) < 1e-14);
    CHECK(a.to_string(10) == "0.9212920229");
    CHECK(std::abs(a.to_double() - (double)a_oracle(kChebyshevStep)) < 1e-14);
}

TEST_CASE("constant_A rejects unbounded step functions") {
    CHECK_THROWS_AS(constant_A(StepFunction{{{1, +1}}}), std::invalid_argument);
}

TEST_CASE("lambda_threshold") {
    CHECK(lambda_threshold(kChebyshevStep) == 6);
    // g(x) = floor(x) - 2 floor(x/2): the parity function, first zero at 2
    CHECK(lambda_threshold(StepFunction{{{1, +1}, {2, -2}}}) == 2);
    // g(1) = 0: no initial plateau of height one
    CHECK_THROWS_AS(lambda_threshold(StepFunction{{{2, +2}, {3, -1}, {6, -1}}}),
                    std::invalid_argument);
}

TEST_CASE("bounds for the classical step function") {
    ChebyshevBounds b = bounds(kChebyshevStep);
    CHECK(b.lambda == 6);
    CHECK(b.c1.to_string(10) == "0.9212920229");
    CHECK(b.c2.to_string(11) == "1.1055504275");
    double a = b.A.to_double();
    CHECK(std::abs(b.c2.to_double() - a * 6.0 / 5.0) < 1e-15);
    CHECK(b.c1.to_double() < 1.0);
    CHECK(1.0 < b.c2.to_double());
}

TEST_CASE("bounds for the parity step function") {
    // floor(x) - 2 floor(x/2): A = log 2, lambda = 2, c2 = 2 log 2
    ChebyshevBounds b = bounds(StepFunction{{{1, +1}, {2, -2}}});
    CHECK(std::abs(b.A.to_double() - std::log(2.0)) < 1e-15);
    CHECK(b.lambda == 2);
    CHECK(std::abs(b.c2.to_double() - 2 * std::log(2.0)) < 1e-15);
}

TEST_CASE("bounds rejects step functions that are not two-valued") {
    // f for C(4n, 2n)(2n choose n)-style params takes value 2
    StepFunction s = phi_map(normalize({2, 2}, {1, 1, 1, 1}));
    CHECK_THROWS_AS(bounds(s), std::invalid_argument);
}

TEST_CASE("property: bounds across the sporadic catalog") {
    Catalog cat = run_search(SearchConfig{4, 30, 48, 1}).catalog;
    REQUIRE(cat.entries.size() == 52);
    long with_plateau = 0;
    for (const auto& e : cat.entries) {
        StepFunction s = phi_map(e.params);
        // oracle cross-check of A on every entry
        CHECK(std::abs(constant_A(s).to_double() - (double)a_oracle(s)) < 1e-13);
        // bounds need the plateau g(1) = 1, i.e. a modulus-1 term
        if (s.gcd_moduli() != 1 || eval_step(s, Rat(1)) != 1) continue;
        with_plateau++;
        ChebyshevBounds b = bounds(s);
        CHECK(b.lambda > 1);
        CHECK(Real(0) < b.c1);
        CHECK(b.c1 < b.c2);
        // c2 (lambda - 1) = c1 lambda, to printed precision
        Real lhs = b.c2, rhs = b.c1;
        lhs *= b.lambda - 1;
        rhs *= b.lambda;
        CHECK(lhs.to_string() == rhs.to_string());
    }
    CHECK(with_plateau > 0);  // the classical function is among them
}

TEST_CASE("property: A is invariant under phi round trip") {
    Catalog cat = run_search(SearchConfig{2, 12, 16, 1}).catalog;
    for (const auto& e : cat.entries) {
        StepFunction s = phi_map(e.params);
        StepFunction s2 = phi_map(phi_inverse(s));
        CHECK(constant_A(s).to_string() == constant_A(s2).to_string());
    }
}
