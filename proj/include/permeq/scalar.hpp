#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace permeq {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

struct ApproxSettings {
    static unsigned digits;       // decimal digits for the approximate mode
    static Real tolerance();      // comparison tolerance (default 1e-30)
    static void set_digits(unsigned d);
};

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

/// Coefficients of the N-th cyclotomic polynomial (monic, integer).
const std::vector<Rat>& cyclotomic_polynomial(unsigned n);

/// Element of a cyclotomic field Q(zeta_N) in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1}, with conductor N >= 1.  Conductor 0 is the
/// approximate mode: a complex number at ApproxSettings::digits precision.
class Scalar {
  public:
    Scalar();                                      // exact rational zero
    static Scalar rational(const Rat& q, unsigned conductor = 1);
    static Scalar root_of_unity(long k, unsigned conductor);
    static Scalar from_coeffs(unsigned conductor, std::vector<Rat> coeffs);
    static Scalar approx(const Real& re, const Real& im);

    unsigned conductor() const { return conductor_; }
    bool is_approx() const { return conductor_ == 0; }
    const std::vector<Rat>& coeffs() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;                      // exact and all higher coeffs 0
    Rat rational_part() const;                     // requires is_rational()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inverse() const;                        // throws on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar pow(long e) const;
    Scalar galois_conjugate() const;               // zeta -> zeta^{-1}
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Numeric value under the canonical embedding zeta_N -> exp(2 pi i / N).
    void to_complex(Real& re, Real& im) const;

    std::string str() const;                       // human-readable
    std::vector<std::string> coeff_strings() const;

  private:
    unsigned conductor_ = 1;
    std::vector<Rat> coeff_;     // exact mode
    Real re_, im_;               // approximate mode
    void reduce_tail(std::vector<Rat>& raw) const;
    static void align(const Scalar& a, const Scalar& b, Scalar& ax, Scalar& bx);
};

Scalar embed_rational(const Rat& q, unsigned conductor);
Scalar root_of_unity(long k, unsigned conductor);

/// Square root inside the field if one exists; deterministic sign choice
/// (first nonzero coefficient positive).  Absence is a value, not an error.
std::optional<Scalar> sqrt_in_field(const Scalar& x);

}  // namespace permeq
