#pragma once

#include "galdens/rational.hpp"

#include <compare>
#include <complex>
#include <string>
#include <vector>

namespace galdens {

/// An element of the e-th cyclotomic field Q(zeta_e), stored as rational
/// coefficients in the power basis 1, zeta, ..., zeta^(e-1).
///
/// Values are kept reduced modulo the e-th cyclotomic polynomial, so only the
/// first phi(e) coefficients can be nonzero and equality within one conductor
/// is coefficientwise. Values of different conductors are compared after
/// embedding both into Q(zeta_lcm).
class CycValue {
public:
    CycValue() : CycValue(1) {}
    explicit CycValue(unsigned conductor);
    CycValue(unsigned conductor, std::vector<Rational> coeffs);

    static CycValue rational(const Rational& r, unsigned conductor = 1);
    static CycValue integer(long n, unsigned conductor = 1) { return rational(Rational(n), conductor); }
    /// zeta_e^k
    static CycValue root_of_unity(unsigned conductor, long k);

    unsigned conductor() const noexcept { return conductor_; }
    /// Reduced power-basis coefficients, length == conductor().
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Only valid when is_rational().
    Rational to_rational() const;

    /// Re-expresses the value in Q(zeta_target); target must be a multiple of conductor().
    CycValue embed(unsigned target) const;
    /// Complex conjugate (zeta -> zeta^-1).
    CycValue conj() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    friend CycValue operator+(const CycValue& a, const CycValue& b);
    friend CycValue operator-(const CycValue& a, const CycValue& b);
    friend CycValue operator*(const CycValue& a, const CycValue& b);
    CycValue operator-() const;
    CycValue& operator+=(const CycValue& o) { return *this = *this + o; }
    CycValue& operator*=(const CycValue& o) { return *this = *this * o; }
    CycValue scaled(const Rational& r) const;

    friend bool operator==(const CycValue& a, const CycValue& b);

    /// Lexicographic order on coefficients within a common conductor.
    friend std::strong_ordering lex_compare(const CycValue& a, const CycValue& b);

private:
    void reduce();

    unsigned conductor_;
    std::vector<Rational> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

}  // namespace galdens
