#include "fratio/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace fratio {

Angle::Angle(long n, long d) {
    if (d < 1) throw std::invalid_argument("angle denominator must be positive");
    long r = ((n % d) + d) % d;
    if (r == 0) {
        num = 1;
        den = 1;  // the root 1 is the angle 1
    } else {
        long g = std::gcd(r, d);
        num = r / g;
        den = d / g;
    }
}

long Spectrum::common_denominator() const {
    long m = 1;
    for (const Angle& t : alpha) m = std::lcm(m, t.den);
    for (const Angle& t : beta) m = std::lcm(m, t.den);
    return m;
}

std::map<long, long> cyclotomic_exponents(const FactorialParams& p) {
    std::map<long, long> e;
    for (long m = 1; m <= p.max_entry(); m++) {
        long c = 0;
        for (long v : p.a)
            if (v % m == 0) c++;
        for (long v : p.b)
            if (v % m == 0) c--;
        if (c != 0) e[m] = c;
    }
    return e;
}

Spectrum spectrum_of(const FactorialParams& p) {
    Spectrum s;
    for (auto [m, e] : cyclotomic_exponents(p)) {
        auto& side = e > 0 ? s.alpha : s.beta;
        long mult = std::abs(e);
        for (long j = 1; j <= m; j++) {
            if (std::gcd(j, m) != 1) continue;
            for (long c = 0; c < mult; c++) side.push_back(Angle(j, m));
        }
    }
    if (s.alpha.size() != s.beta.size())
        throw std::invalid_argument("degree mismatch");
    std::sort(s.alpha.begin(), s.alpha.end());
    std::sort(s.beta.begin(), s.beta.end());
    return s;
}

bool interlaces(const Spectrum& s) {
    if (s.alpha.size() != s.beta.size()) return false;
    // require alpha_0 < beta_0 < alpha_1 < beta_1 < ... < beta_{d-1}
    for (size_t i = 0; i < s.alpha.size(); i++) {
        if (!(s.alpha[i] < s.beta[i])) return false;
        if (i + 1 < s.alpha.size() && !(s.beta[i] < s.alpha[i + 1])) return false;
    }
    return true;
}

Spectrum galois_twist(const Spectrum& s, long k) {
    long m = s.common_denominator();
    if (k < 1 || std::gcd(k, m) != 1)
        throw std::invalid_argument("not a Galois twist");
    Spectrum t;
    for (const Angle& x : s.alpha) t.alpha.push_back(Angle(k * x.num, x.den));
    for (const Angle& x : s.beta) t.beta.push_back(Angle(k * x.num, x.den));
    std::sort(t.alpha.begin(), t.alpha.end());
    std::sort(t.beta.begin(), t.beta.end());
    return t;
}

bool bh_algebraicity_test(const Spectrum& s) {
    long m = s.common_denominator();
    for (long k = 1; k <= m; k++) {
        if (std::gcd(k, m) != 1) continue;
        if (!interlaces(galois_twist(s, k))) return false;
    }
    return true;
}

long counting_function(const Spectrum& s, const Rat& x) {
    // fractional part of x, in [0, 1)
    Rat fx = x - floor_rat(x);
    long c = 0;
    for (const Angle& t : s.alpha)
        if (t.value() <= fx) c++;
    for (const Angle& t : s.beta)
        if (t.value() <= fx) c--;
    return c;
}

Spectrum scalar_shift_half(const Spectrum& s) {
    Spectrum t;
    for (const Angle& x : s.alpha)
        t.alpha.push_back(Angle(2 * x.num + x.den, 2 * x.den));
    for (const Angle& x : s.beta)
        t.beta.push_back(Angle(2 * x.num + x.den, 2 * x.den));
    std::sort(t.alpha.begin(), t.alpha.end());
    std::sort(t.beta.begin(), t.beta.end());
    return t;
}

}  // namespace fratio
