#include "fratio/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fratio/search.hpp"

namespace fratio {

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::Family1: return "family1";
        case Tag::Family2: return "family2";
        case Tag::Family3: return "family3";
        case Tag::Sporadic: return "sporadic";
        case Tag::NotIntegral: return "not-integral";
    }
    return "?";
}

Rat HypergeomParams::argument_scale() const {
    Rat c = 1;
    Int t;
    for (long v : source.a) {
        mpz_ui_pow_ui(t.get_mpz_t(), v, v);
        c *= t;
    }
    for (long v : source.b) {
        mpz_ui_pow_ui(t.get_mpz_t(), v, v);
        c /= Rat(t);
    }
    c.canonicalize();
    return c;
}

IntegralityResult is_integral(const FactorialParams& p) {
    if (!p.balanced()) return {false, std::nullopt, true};
    for (const Rat& x : breakpoints(p)) {
        if (x >= 1) break;
        if (eval_f(p, x) < 0) return {false, x, false};
    }
    return {true, std::nullopt, false};
}

bool is_two_valued(const StepFunction& s) {
    if (!s.bounded()) throw std::invalid_argument("unbounded");
    long period = s.lcm_moduli();
    // g changes value only at integer multiples of the moduli
    std::set<long> pts{0};
    for (const auto& t : s.terms)
        for (long x = t.modulus; x < period; x += t.modulus) pts.insert(x);
    for (long x : pts) {
        long v = eval_step(s, Rat(x));
        if (v < 0 || v > 1) return false;
    }
    return true;
}

namespace {

bool try_expand_match(const FactorialParams& p, std::vector<long> a,
                      std::vector<long> b) {
    try {
        return normalize(std::move(a), std::move(b)) == p;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Reconstruct (x, y) for forms 2 and 3.  In both expanded forms the
// largest entry is 2x and it survives cancellation, so x is pinned by the
// maximum entry; y is recovered by re-expansion.
std::optional<std::pair<long, long>> detect_form(const FactorialParams& p,
                                                 int form) {
    long mx = p.max_entry();
    if (mx % 2 != 0) return std::nullopt;
    long x = mx / 2;
    for (long y = 1; y <= x; y++) {
        if (std::gcd(x, y) != 1) continue;
        if (form == 2) {
            if (y == x) continue;  // needs x > y
            if (try_expand_match(p, {2 * x, y}, {x, 2 * y, x - y}))
                return std::make_pair(x, y);
        } else {
            if (try_expand_match(p, {2 * x, 2 * y}, {x, y, x + y}))
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Classification> match_family(const FactorialParams& p) {
    // Form (i): [(x+y)n]! / (xn)!(yn)!
    if (p.K() == 1 && p.L() == 2 && p.a[0] == p.b[0] + p.b[1] &&
        std::gcd(p.b[0], p.b[1]) == 1) {
        Classification c;
        c.tag = Tag::Family1;
        c.x = p.b[0];
        c.y = p.b[1];
        return c;
    }
    for (auto [form, tag] : {std::pair{2, Tag::Family2}, {3, Tag::Family3}}) {
        if (auto xy = detect_form(p, form)) {
            Classification c;
            c.tag = tag;
            c.x = xy->first;
            c.y = xy->second;
            return c;
        }
    }
    return std::nullopt;
}

HypergeomParams hypergeom_params(const FactorialParams& p) {
    Spectrum s = spectrum_of(p);
    HypergeomParams h{s.alpha, s.beta, p};
    if (p.L() > p.K()) {
        auto it = std::find(h.lower.begin(), h.lower.end(), Angle::one());
        if (it == h.lower.end())
            throw std::logic_error("beta lacks angle 1 with L > K");
        h.lower.erase(it);
    } else {
        h.upper.push_back(Angle::one());
        std::sort(h.upper.begin(), h.upper.end());
    }
    return h;
}

StepFunction phi_map(const FactorialParams& p) {
    long m = p.lcm_all();
    StepFunction s;
    for (long v : p.a) s.terms.push_back({m / v, +1});
    for (long v : p.b) s.terms.push_back({m / v, -1});
    std::sort(s.terms.begin(), s.terms.end(),
              [](const auto& u, const auto& v) { return u.modulus < v.modulus; });
    return s;
}

FactorialParams phi_inverse(const StepFunction& s) {
    long m = s.lcm_moduli();
    std::vector<long> a, b;
    for (const auto& t : s.terms)
        (t.coeff > 0 ? a : b).push_back(m / t.modulus);
    return normalize(std::move(a), std::move(b));
}

bool reflection_reducible(const FactorialParams& p) {
    return p.gcd_all() > 1;
}

std::optional<ImprimitivePattern> imprimitive_pattern(const FactorialParams& p) {
    for (int form : {2, 3}) {
        if (auto xy = detect_form(p, form)) {
            auto [x, y] = *xy;
            if (x % 2 == 1 && y % 2 == 1) continue;  // both odd: scalar shift case
            return ImprimitivePattern{form, x, y};
        }
    }
    return std::nullopt;
}

Classification classify(const FactorialParams& p, const Catalog* catalog) {
    IntegralityResult r = is_integral(p);
    if (!r.integral) {
        Classification c;
        c.witness = r.witness;
        c.unbalanced = r.unbalanced;
        return c;
    }
    auto [d, q] = primitive_part(p);
    if (auto fam = match_family(q)) {
        fam->scale = d;
        return *fam;
    }
    if (catalog) {
        if (auto id = catalog->find(q)) {
            Classification c;
            c.tag = Tag::Sporadic;
            c.sporadic_id = *id;
            c.scale = d;
            return c;
        }
    }
    throw CatalogIncompleteError(
        "catalog incomplete -- rerun search with larger bounds");
}

}  // namespace fratio
