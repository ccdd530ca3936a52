#ifndef FRATIO_SPECTRUM_HPP
#define FRATIO_SPECTRUM_HPP

#include <map>
#include <vector>

#include "fratio/core.hpp"

namespace fratio {

/// A root of unity e(num/den) recorded by its argument in (0,1].
/// The root 1 itself is the angle 1/1, never 0.
struct Angle {
    long num;
    long den;

    Angle(long n, long d);
    static Angle one() { return Angle(1, 1); }

    Rat value() const { return Rat(num, den); }
    auto operator<=>(const Angle& o) const {
        // num/den <=> o.num/o.den without overflow concern at our sizes
        return num * o.den <=> o.num * den;
    }
    bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
};

/// Root arguments of the reduced numerator / denominator of
///   prod (x^{a_k} - 1) / prod (x^{b_l} - 1),
/// each a multiset of angles in (0,1], stored sorted ascending.
struct Spectrum {
    std::vector<Angle> alpha;
    std::vector<Angle> beta;

    size_t degree() const { return alpha.size(); }
    // lcm of all denominators present
    long common_denominator() const;

    bool operator==(const Spectrum&) const = default;
};

/// Net cyclotomic exponents: e_m = #{k : m | a_k} - #{l : m | b_l},
/// zero entries omitted.
std::map<long, long> cyclotomic_exponents(const FactorialParams& p);

/// Expand the exponent map into angle multisets (primitive m-th root
/// arguments with multiplicity |e_m|).  Throws "degree mismatch" when the
/// two sides have unequal size (unbalanced params).
Spectrum spectrum_of(const FactorialParams& p);

/// True iff the sorted merge of alpha and beta strictly alternates
/// starting with an alpha.  Any value shared between the two sides makes
/// interlacing impossible and returns false.
bool interlaces(const Spectrum& s);

/// Map every angle t to the fractional part {k t}, with 0 sent to 1.
/// Requires gcd(k, M) = 1 for M the common denominator.
Spectrum galois_twist(const Spectrum& s, long k);

/// Beukers-Heckman criterion: interlacing holds for every Galois twist
/// k in 1..M with gcd(k, M) = 1.
bool bh_algebraicity_test(const Spectrum& s);

/// #(alpha in [0, {x}]) - #(beta in [0, {x}]).
long counting_function(const Spectrum& s, const Rat& x);

/// Shift every angle by 1/2 mod 1 (0 mapped to 1), both sides.
Spectrum scalar_shift_half(const Spectrum& s);

}  // namespace fratio

#endif
