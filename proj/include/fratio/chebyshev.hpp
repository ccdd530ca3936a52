#ifndef FRATIO_CHEBYSHEV_HPP
#define FRATIO_CHEBYSHEV_HPP

#include <mpfr.h>

#include <string>

#include "fratio/core.hpp"

namespace fratio {

/// Minimal RAII wrapper over an mpfr_t at 192-bit precision; enough
/// headroom that 12 significant digits are exact for our sums of logs.
class Real {
public:
    static constexpr mpfr_prec_t kPrec = 192;

    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    explicit Real(long x) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real log_of(long x);

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Rat& q);
    Real& operator/=(long x) {
        mpfr_div_si(v_, v_, x, MPFR_RNDN);
        return *this;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 12) const;
    int compare(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return compare(o) < 0; }

private:
    mpfr_t v_;
};

/// Leading constant of the Chebyshev-style estimate derived from a bounded
/// step function g(x) = sum c_k floor(x/m_k):
///
///   sum_n Lambda(n) g(x/n) = sum_k c_k log floor(x/m_k)!  ~  A x,
///
/// and Stirling on the right-hand side gives A = -sum_k c_k log(m_k)/m_k
/// (the x log x terms cancel exactly when sum c_k/m_k = 0).
Real constant_A(const StepFunction& s);

/// Smallest x > 1 with g(x) = 0, for a two-valued g with g(1) = 1.  The
/// jumps of g sit at integer multiples of the moduli, so the scan is over
/// those points within one period.
Rat lambda_threshold(const StepFunction& s);

struct ChebyshevBounds {
    Real A;
    Rat lambda;
    Real c1;  // = A
    Real c2;  // = A * lambda / (lambda - 1)
};

ChebyshevBounds bounds(const StepFunction& s);

}  // namespace fratio

#endif
