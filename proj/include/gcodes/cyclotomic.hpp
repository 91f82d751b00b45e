#pragma once

#include "gcodes/qmodz.hpp"
#include "gcodes/rational.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace gcodes {

/// Shared, immutable data for Q(zeta_K): the K-th cyclotomic polynomial and
/// the reduction of every power zeta^e (0 <= e < K) into the power basis
/// {1, zeta, ..., zeta^(phi(K)-1)}. Instances are interned per conductor and
/// live for the lifetime of the process.
class CycField {
public:
    static const CycField& get(int conductor);

    int conductor() const { return conductor_; }
    int degree() const { return degree_; }

    /// Integer coefficients of Phi_K, lowest degree first (monic, length phi(K)+1).
    const std::vector<long>& polynomial() const { return poly_; }

    /// Power-basis coordinates of zeta^e, e taken mod K.
    const std::vector<long>& power(long long e) const;

    CycField(const CycField&) = delete;
    CycField& operator=(const CycField&) = delete;

private:
    explicit CycField(int conductor);

    int conductor_;
    int degree_;
    std::vector<long> poly_;
    std::vector<std::vector<long>> powers_;
};

/// Exact element of a cyclotomic field Q(zeta_K), stored in the power basis.
/// The zero element carries no coefficients so sparse matrices stay cheap.
class Cyclotomic {
public:
    explicit Cyclotomic(const CycField& field) : field_(&field) {}
    Cyclotomic(const CycField& field, const Rational& r);
    Cyclotomic(const CycField& field, std::vector<Rational> coeffs);

    static Cyclotomic zero(const CycField& f) { return Cyclotomic(f); }
    static Cyclotomic one(const CycField& f) { return Cyclotomic(f, Rational(1)); }
    /// zeta_K^e.
    static Cyclotomic zeta_power(const CycField& f, long long e);
    /// (1/scale) * sum_e counts[e] * zeta_K^e, with counts indexed by exponent mod K.
    static Cyclotomic from_exponent_counts(const CycField& f, std::span<const long long> counts,
                                           const Rational& scale = Rational(1));

    const CycField& field() const { return *field_; }
    int conductor() const { return field_->conductor(); }

    /// Coordinates in the power basis; length phi(K) (all zero for the zero element).
    std::vector<Rational> coefficients() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    bool is_one() const;
    /// Constant coefficient; meaningful as "the value" only when is_rational().
    Rational rational_part() const;

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Rational& rhs) const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    Cyclotomic inverse() const;
    /// Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conj() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Numerical value under zeta_K = exp(2 pi i / K). Diagnostics and tests only.
    std::complex<double> to_complex() const;

    /// Coefficient strings "p/q", one per power-basis slot.
    std::vector<std::string> to_strings() const;
    std::string to_string() const;

private:
    void check_same_field(const Cyclotomic& other) const;
    void normalize();

    const CycField* field_;
    std::vector<Rational> coeffs_;  // empty == 0, else length degree()
};

/// exp(2 pi i a) as an element of Q(zeta_K). Throws ConductorMismatch unless
/// the denominator of a divides K.
Cyclotomic root_of_unity(const QmodZ& a, int conductor);

/// The positive square root of s inside Q(zeta_K), built from Gauss sums.
/// Throws ConductorMismatch if Q(zeta_K) does not contain it by this construction.
Cyclotomic sqrt_of_nat(long long s, int conductor);

/// Smallest conductor divisible by 8 whose field contains sqrt(s) via sqrt_of_nat.
int sqrt_conductor(long long s);

int euler_phi(int n);

}  // namespace gcodes
