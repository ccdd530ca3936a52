#include "fratio/chebyshev.hpp"

#include <set>

#include "fratio/classify.hpp"

namespace fratio {

Real Real::log_of(long x) {
    Real r;
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    mpfr_log(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real& Real::operator*=(const Rat& q) {
    mpfr_mul_z(v_, v_, q.get_num_mpz_t(), MPFR_RNDN);
    mpfr_div_z(v_, v_, q.get_den_mpz_t(), MPFR_RNDN);
    return *this;
}

std::string Real::to_string(int digits) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return buf;
}

Real constant_A(const StepFunction& s) {
    if (!s.bounded()) throw std::invalid_argument("unbounded");
    Real a;
    for (const auto& t : s.terms) {
        Real term = Real::log_of(t.modulus);
        term /= t.modulus;
        term *= Rat(-t.coeff);
        a += term;
    }
    return a;
}

Rat lambda_threshold(const StepFunction& s) {
    if (eval_step(s, Rat(1)) != 1)
        throw std::invalid_argument("no initial plateau");
    long period = s.lcm_moduli();
    std::set<long> pts;
    for (const auto& t : s.terms)
        for (long x = t.modulus; x <= period; x += t.modulus)
            if (x > 1) pts.insert(x);
    for (long x : pts)
        if (eval_step(s, Rat(x)) == 0) return Rat(x);
    throw std::invalid_argument("no return to zero within one period");
}

ChebyshevBounds bounds(const StepFunction& s) {
    if (!is_two_valued(s)) throw std::invalid_argument("not two-valued");
    ChebyshevBounds r;
    r.A = constant_A(s);
    r.lambda = lambda_threshold(s);
    r.c1 = r.A;
    r.c2 = r.A;
    Rat scale = r.lambda / (r.lambda - 1);
    scale.canonicalize();
    r.c2 *= scale;
    return r;
}

}  // namespace fratio
