#include "fratio/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fratio {

long FactorialParams::sum_a() const {
    return std::accumulate(a.begin(), a.end(), 0L);
}

long FactorialParams::sum_b() const {
    return std::accumulate(b.begin(), b.end(), 0L);
}

long FactorialParams::max_entry() const {
    long m = 0;
    for (long v : a) m = std::max(m, v);
    for (long v : b) m = std::max(m, v);
    return m;
}

long FactorialParams::gcd_all() const {
    long g = 0;
    for (long v : a) g = std::gcd(g, v);
    for (long v : b) g = std::gcd(g, v);
    return g;
}

long FactorialParams::lcm_all() const {
    long m = 1;
    for (long v : a) m = std::lcm(m, v);
    for (long v : b) m = std::lcm(m, v);
    return m;
}

bool FactorialParams::operator<(const FactorialParams& o) const {
    if (K() != o.K()) return K() < o.K();
    if (a != o.a) return a < o.a;
    return b < o.b;
}

std::string FactorialParams::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); i++) os << (i ? "," : "") << a[i];
    os << ";";
    for (size_t i = 0; i < b.size(); i++) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

bool StepFunction::bounded() const {
    Rat s = 0;
    for (const Term& t : terms) s += Rat(t.coeff, t.modulus);
    return s == 0;
}

long StepFunction::lcm_moduli() const {
    long m = 1;
    for (const Term& t : terms) m = std::lcm(m, t.modulus);
    return m;
}

long StepFunction::gcd_moduli() const {
    long g = 0;
    for (const Term& t : terms) g = std::gcd(g, t.modulus);
    return g;
}

FactorialParams normalize(std::vector<long> a, std::vector<long> b) {
    for (long v : a)
        if (v < 1) throw std::invalid_argument("entries must be positive");
    for (long v : b)
        if (v < 1) throw std::invalid_argument("entries must be positive");
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    // pairwise cancellation of the multiset intersection
    std::vector<long> ra, rb;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            i++, j++;
        } else if (a[i] > b[j]) {
            ra.push_back(a[i++]);
        } else {
            rb.push_back(b[j++]);
        }
    }
    ra.insert(ra.end(), a.begin() + i, a.end());
    rb.insert(rb.end(), b.begin() + j, b.end());
    if (ra.empty() && rb.empty()) throw std::invalid_argument("trivial ratio");
    return FactorialParams{std::move(ra), std::move(rb)};
}

std::pair<long, FactorialParams> primitive_part(const FactorialParams& p) {
    long d = p.gcd_all();
    FactorialParams q = p;
    for (long& v : q.a) v /= d;
    for (long& v : q.b) v /= d;
    return {d, q};
}

Rat eval_u(const FactorialParams& p, unsigned long n) {
    Int num = 1, den = 1;
    mpz_class f;
    for (long v : p.a) {
        mpz_fac_ui(f.get_mpz_t(), v * n);
        num *= f;
    }
    for (long v : p.b) {
        mpz_fac_ui(f.get_mpz_t(), v * n);
        den *= f;
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

long floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

long eval_f(const FactorialParams& p, const Rat& x) {
    long s = 0;
    for (long v : p.a) s += floor_rat(v * x);
    for (long v : p.b) s -= floor_rat(v * x);
    return s;
}

long eval_step(const StepFunction& s, const Rat& x) {
    long r = 0;
    for (const auto& t : s.terms) r += t.coeff * floor_rat(x / t.modulus);
    return r;
}

std::vector<Rat> breakpoints(const FactorialParams& p) {
    std::set<Rat> pts;
    auto add = [&](long m) {
        for (long j = 1; j <= m; j++) {
            Rat x(j, m);
            x.canonicalize();
            pts.insert(x);
        }
    };
    for (long v : p.a) add(v);
    for (long v : p.b) add(v);
    return {pts.begin(), pts.end()};
}

std::pair<long, long> min_max_f(const FactorialParams& p) {
    if (!p.balanced()) throw std::invalid_argument("unbounded");
    long lo = 0, hi = 0;  // f(0) = 0
    for (const Rat& x : breakpoints(p)) {
        if (x >= 1) break;  // f(1) = f(0) by periodicity
        long v = eval_f(p, x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

long valuation(const FactorialParams& p, unsigned long prime, unsigned long n) {
    if (!is_prime(prime)) throw std::invalid_argument("modulus is not prime");
    long s = 0;
    unsigned long bound = n * static_cast<unsigned long>(p.max_entry());
    for (Int pe = prime; pe <= bound; pe *= prime) {
        Rat x(Int(n), pe);
        x.canonicalize();
        s += eval_f(p, x);
    }
    return s;
}

}  // namespace fratio
