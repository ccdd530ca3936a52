#ifndef FRATIO_CLASSIFY_HPP
#define FRATIO_CLASSIFY_HPP

#include <optional>
#include <string>

#include "fratio/core.hpp"
#include "fratio/spectrum.hpp"

namespace fratio {

class Catalog;

/// Hypergeometric series data for u(a,b;z) = dF(d-1)(upper; lower; Cz).
struct HypergeomParams {
    std::vector<Angle> upper;
    std::vector<Angle> lower;
    FactorialParams source;  // carries the factored form of C

    size_t degree() const { return upper.size(); }
    /// C = prod a_k^{a_k} / prod b_l^{b_l}, expanded.
    Rat argument_scale() const;
};

enum class Tag { Family1, Family2, Family3, Sporadic, NotIntegral };

std::string tag_name(Tag t);

struct Classification {
    Tag tag = Tag::NotIntegral;
    long x = 0, y = 0;       // family parameters
    long sporadic_id = 0;    // catalog id, Sporadic only
    long scale = 1;          // gcd factor divided out before matching
    std::optional<Rat> witness;  // breakpoint with f < 0, NotIntegral only
    bool unbalanced = false;
};

struct IntegralityResult {
    bool integral;
    std::optional<Rat> witness;
    bool unbalanced = false;
};

/// Sporadic candidate not covered by the loaded catalog bounds.
struct CatalogIncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Landau's criterion: u_n integral for all n iff balanced and
/// f >= 0 at every breakpoint.  On failure the witness is the first
/// breakpoint (ascending) where f goes negative.
IntegralityResult is_integral(const FactorialParams& p);

/// True iff the bounded step function takes only values 0 and 1 over one
/// period.  Throws "unbounded" when sum c_k/m_k != 0.
bool is_two_valued(const StepFunction& s);

/// Pattern-match the three infinite families, reconstructing (x, y)
/// through re-expansion so that partially cancelled instances still match.
/// Expects canonical params with gcd 1.
std::optional<Classification> match_family(const FactorialParams& p);

/// Convert to hypergeometric parameters: when L > K drop one angle 1 from
/// beta, otherwise append angle 1 to alpha.
HypergeomParams hypergeom_params(const FactorialParams& p);

/// a_k -> M/a_k with sign +1, b_l -> M/b_l with sign -1, M = lcm of all
/// entries.  The resulting moduli have gcd 1.
StepFunction phi_map(const FactorialParams& p);

/// Inverse of phi_map: m -> lcm(moduli)/m, signs split the sides.
FactorialParams phi_inverse(const StepFunction& s);

/// Reducibility of the reflection subgroup, at parameter level:
/// true iff the gcd of all entries exceeds 1.
bool reflection_reducible(const FactorialParams& p);

struct ImprimitivePattern {
    int form;  // 2 or 3
    long x, y;
};

/// Imprimitive monodromy patterns (2x,y; x,2y,x-y) and (2x,2y; x,y,x+y)
/// with gcd(x,y) = 1 and x, y not both odd.
std::optional<ImprimitivePattern> imprimitive_pattern(const FactorialParams& p);

/// Full decision: NotIntegral with witness, or the primitive part's family
/// tag / sporadic catalog id together with the scale factor divided out.
/// Throws CatalogIncompleteError for a sporadic hit missing from `catalog`
/// (or when catalog is null).
Classification classify(const FactorialParams& p, const Catalog* catalog);

}  // namespace fratio

#endif
