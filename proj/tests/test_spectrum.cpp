#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fratio/spectrum.hpp"
#include "test_util.hpp"

using namespace fratio;

static std::vector<Angle> angles(std::vector<std::pair<long, long>> fr) {
    std::vector<Angle> v;
    for (auto [n, d] : fr) v.push_back(Angle(n, d));
    return v;
}

TEST_CASE("cyclotomic_exponents by divisor counting") {
    std::map<long, long> e1{{3, 1}, {2, -1}, {1, -1}};
    CHECK(cyclotomic_exponents(normalize({3}, {2, 1})) == e1);

    std::map<long, long> e2{{30, 1}, {1, -1}, {2, -1}, {3, -1}, {5, -1}};
    CHECK(cyclotomic_exponents(normalize({30, 1}, {15, 10, 6})) == e2);
}

TEST_CASE("spectrum_of") {
    Spectrum s = spectrum_of(normalize({3}, {2, 1}));
    CHECK(s.alpha == angles({{1, 3}, {2, 3}}));
    CHECK(s.beta == angles({{1, 2}, {1, 1}}));

    Spectrum ch = spectrum_of(normalize({30, 1}, {15, 10, 6}));
    CHECK(ch.alpha == angles({{1, 30},
                              {7, 30},
                              {11, 30},
                              {13, 30},
                              {17, 30},
                              {19, 30},
                              {23, 30},
                              {29, 30}}));
    CHECK(ch.beta == angles({{1, 5},
                             {1, 3},
                             {2, 5},
                             {1, 2},
                             {3, 5},
                             {2, 3},
                             {4, 5},
                             {1, 1}}));

    Spectrum t = spectrum_of(normalize({2}, {1, 1}));
    CHECK(t.alpha == angles({{1, 2}}));
    CHECK(t.beta == angles({{1, 1}}));

    CHECK_THROWS_AS(spectrum_of(normalize({1}, {2})), std::invalid_argument);
}

TEST_CASE("interlaces") {
    CHECK(interlaces(Spectrum{angles({{1, 3}, {2, 3}}), angles({{1, 2}, {1, 1}})}));
    CHECK(interlaces(Spectrum{angles({{1, 2}}), angles({{1, 1}})}));
    CHECK_FALSE(interlaces(
        Spectrum{angles({{1, 4}, {1, 3}}), angles({{1, 2}, {1, 1}})}));
    // shared value: interlacing impossible
    CHECK_FALSE(interlaces(
        Spectrum{angles({{1, 2}, {2, 3}}), angles({{1, 2}, {1, 1}})}));
}

TEST_CASE("galois_twist") {
    Spectrum s = spectrum_of(normalize({3}, {2, 1}));
    CHECK(galois_twist(s, 1) == s);
    CHECK(galois_twist(s, 5).alpha == s.alpha);  // {2/3, 4/3->1/3} same multiset
    CHECK_THROWS_AS(galois_twist(s, 2), std::invalid_argument);  // gcd(2,6)=2

    Spectrum ch = spectrum_of(normalize({30, 1}, {15, 10, 6}));
    CHECK(galois_twist(ch, 7).beta == ch.beta);  // {7t} permutes the set
}

TEST_CASE("bh_algebraicity_test") {
    CHECK(bh_algebraicity_test(spectrum_of(normalize({3}, {2, 1}))));
    CHECK(bh_algebraicity_test(spectrum_of(normalize({30, 1}, {15, 10, 6}))));
    CHECK_FALSE(bh_algebraicity_test(
        Spectrum{angles({{1, 4}, {1, 3}}), angles({{1, 2}, {1, 1}})}));
}

TEST_CASE("counting_function") {
    Spectrum s = spectrum_of(normalize({3}, {2, 1}));
    CHECK(counting_function(s, Rat(1, 3)) == 1);
    CHECK(counting_function(s, Rat(1, 4)) == 0);  // below smallest angle
    Spectrum ch = spectrum_of(normalize({30, 1}, {15, 10, 6}));
    CHECK(counting_function(ch, Rat(1, 2)) == 0);
}

TEST_CASE("scalar_shift_half") {
    Spectrum s{angles({{1, 2}}), angles({{1, 1}})};
    Spectrum t = scalar_shift_half(s);
    CHECK(t.alpha == angles({{1, 1}}));
    CHECK(t.beta == angles({{1, 2}}));
    CHECK(scalar_shift_half(t) == s);  // involution
}

TEST_CASE("scalar shift of odd form-2 params gives binomial spectrum") {
    // (2x, y; x, 2y, x-y) with x=3, y=1 both odd -> C(3n, n)
    Spectrum s = spectrum_of(normalize({6, 1}, {3, 2, 2}));
    Spectrum bin = spectrum_of(normalize({3}, {2, 1}));
    CHECK(scalar_shift_half(s) == bin);
}

TEST_CASE("property: counting_function matches eval_f at breakpoints") {
    for (const auto& p : testutil::small_balanced_pairs(2, 3, 12, 16)) {
        Spectrum s = spectrum_of(p);
        for (const Rat& x : breakpoints(p))
            CHECK(counting_function(s, x) == eval_f(p, x));
    }
}

TEST_CASE("property: degree, disjointness, Galois closure") {
    auto phi = [](long m) {
        long r = 0;
        for (long j = 1; j <= m; j++)
            if (std::gcd(j, m) == 1) r++;
        return r;
    };
    for (const auto& p : testutil::small_balanced_pairs(2, 3, 12, 18)) {
        Spectrum s = spectrum_of(p);
        long d = 0;
        for (auto [m, e] : cyclotomic_exponents(p))
            if (e > 0) d += e * phi(m);
        CHECK((long)s.alpha.size() == d);
        CHECK(s.alpha.size() == s.beta.size());
        for (const Angle& x : s.alpha)
            CHECK(std::find(s.beta.begin(), s.beta.end(), x) == s.beta.end());
    }
}

TEST_CASE("property: twists compose multiplicatively") {
    Spectrum s = spectrum_of(normalize({30, 1}, {15, 10, 6}));
    long m = s.common_denominator();
    for (long k = 1; k <= m; k++) {
        if (std::gcd(k, m) != 1) continue;
        for (long k2 : {7L, 11L})
            CHECK(galois_twist(galois_twist(s, k), k2) ==
                  galois_twist(s, (k * k2) % m));
    }
}

TEST_CASE("property: interlacing is Galois-stable on params spectra") {
    for (const auto& p : testutil::small_balanced_pairs(2, 3, 10, 16)) {
        if (p.L() - p.K() != 1) continue;
        Spectrum s = spectrum_of(p);
        long m = s.common_denominator();
        bool base = interlaces(s);
        for (long k = 1; k <= m; k++) {
            if (std::gcd(k, m) != 1) continue;
            CHECK(interlaces(galois_twist(s, k)) == base);
        }
        CHECK(bh_algebraicity_test(s) == base);
    }
}
