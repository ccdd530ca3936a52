#ifndef FRATIO_CORE_HPP
#define FRATIO_CORE_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace fratio {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical parameters (a, b) of a factorial ratio sequence
///     u_n = prod (a_k n)! / prod (b_l n)!.
/// Both sides are stored sorted descending with common entries cancelled,
/// so multiset equality is plain vector equality.
struct FactorialParams {
    std::vector<long> a;
    std::vector<long> b;

    long K() const { return static_cast<long>(a.size()); }
    long L() const { return static_cast<long>(b.size()); }
    long sum_a() const;
    long sum_b() const;
    bool balanced() const { return sum_a() == sum_b(); }
    long max_entry() const;
    long gcd_all() const;
    long lcm_all() const;

    bool operator==(const FactorialParams&) const = default;
    bool operator<(const FactorialParams& o) const;

    std::string to_string() const;
};

/// Signed floor sum  g(x) = sum c_k floor(x / m_k),  c_k in {+1, -1}.
/// No modulus may appear with both signs.
struct StepFunction {
    struct Term {
        long modulus;
        int coeff;  // +1 or -1
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;

    // bounded <=> sum c_k / m_k == 0
    bool bounded() const;
    long lcm_moduli() const;
    long gcd_moduli() const;

    bool operator==(const StepFunction&) const = default;
};

/// Cancel common entries pairwise and sort both sides descending.
/// Throws std::invalid_argument("trivial ratio") if everything cancels,
/// and on nonpositive entries.
FactorialParams normalize(std::vector<long> a, std::vector<long> b);

/// Split off the gcd of all entries: returns (d, params / d).
std::pair<long, FactorialParams> primitive_part(const FactorialParams& p);

/// Exact value of u_n = prod (a_k n)! / prod (b_l n)!; u_0 = 1.
Rat eval_u(const FactorialParams& p, unsigned long n);

/// f(x) = sum floor(a_k x) - sum floor(b_l x), exactly.
long eval_f(const FactorialParams& p, const Rat& x);

/// g(x) = sum c_k floor(x / m_k), exactly.
long eval_step(const StepFunction& s, const Rat& x);

/// All distinct j/m in (0,1] with m an entry of a or b, ascending.
/// f is constant on [t_i, t_{i+1}), so these points carry its full range
/// over [0,1).
std::vector<Rat> breakpoints(const FactorialParams& p);

/// Exact min and max of f over [0,1) by scanning 0 and every breakpoint.
/// Throws std::invalid_argument("unbounded") for unbalanced params.
std::pair<long, long> min_max_f(const FactorialParams& p);

/// p-adic valuation of u_n via  v_p(u_n) = sum_{e >= 1} f(n / prime^e),
/// truncated once prime^e > n * max entry.  Throws if prime is not prime.
long valuation(const FactorialParams& p, unsigned long prime, unsigned long n);

/// floor of an exact rational, as long (caller guarantees range).
long floor_rat(const Rat& x);

bool is_prime(unsigned long n);

}  // namespace fratio

#endif
