#ifndef FRATIO_TEST_UTIL_HPP
#define FRATIO_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "fratio/core.hpp"

namespace fratio::testutil {

// All canonical balanced pairs with K <= kmax, L <= lmax, entries <= emax,
// sum(a) <= smax.  Brute-force double loop over sorted tuples; used as an
// independent cross-check for the production enumerator.
inline std::vector<FactorialParams> small_balanced_pairs(long kmax, long lmax,
                                                         long emax, long smax) {
    std::vector<FactorialParams> out;
    std::vector<std::vector<long>> tuples;  // nonempty descending tuples
    std::vector<long> cur;
    auto gen = [&](auto&& self, long maxv, long budget) -> void {
        for (long v = std::min(maxv, budget); v >= 1; v--) {
            cur.push_back(v);
            tuples.push_back(cur);
            if ((long)cur.size() < std::max(kmax, lmax))
                self(self, v, budget - v);
            cur.pop_back();
        }
    };
    gen(gen, emax, smax);
    auto sum = [](const std::vector<long>& t) {
        long s = 0;
        for (long v : t) s += v;
        return s;
    };
    for (const auto& a : tuples) {
        if ((long)a.size() > kmax || sum(a) > smax) continue;
        for (const auto& b : tuples) {
            if ((long)b.size() > lmax || sum(b) != sum(a)) continue;
            try {
                FactorialParams p = normalize(a, b);
                if (p.a == a && p.b == b) out.push_back(p);  // already canonical
            } catch (const std::invalid_argument&) {
            }
        }
    }
    return out;
}

// Random canonical balanced params, entries <= emax, or nullopt-like retry.
inline FactorialParams random_balanced(std::mt19937& rng, long emax) {
    std::uniform_int_distribution<long> size(1, 3), entry(1, emax);
    for (;;) {
        std::vector<long> a(size(rng)), b(size(rng) + 1);
        for (auto& v : a) v = entry(rng);
        for (auto& v : b) v = entry(rng);
        long sa = 0, sb = 0;
        for (long v : a) sa += v;
        for (long v : b) sb += v;
        if (sa != sb) continue;
        try {
            return normalize(a, b);
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace fratio::testutil

#endif
