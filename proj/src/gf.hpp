#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "scalar.hpp"

namespace albert {

// Exact arithmetic in Z[zeta_p], reduced modulo the p-th cyclotomic
// polynomial; coordinates are taken in the basis 1, zeta, ..., zeta^{p-2}.
class CyclotomicInt {
public:
    explicit CyclotomicInt(long p);  // zero
    static CyclotomicInt zero(long p) { return CyclotomicInt(p); }
    static CyclotomicInt one(long p);
    static CyclotomicInt zeta_power(long p, long e);

    long prime() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

private:
    long p_;
    std::vector<mpz_class> c_;  // length p - 1
};

// GF(p^m) with discrete-log tables. Elements are integers in [0, q) whose
// base-p digits are the coordinates in the power basis of a fixed monic
// irreducible polynomial (found deterministically at construction).
class GaloisField {
public:
    GaloisField(long p, int m);

    long p() const { return p_; }
    int degree() const { return m_; }
    long q() const { return q_; }
    // coefficients of the modulus, constant term first, including the leading 1
    const std::vector<long>& modulus() const { return modulus_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inverse(long a) const;  // throws std::domain_error at 0
    long pow(long a, long e) const;
    long from_residue(long r) const { return ((r % p_) + p_) % p_; }
    // Tr_{F_q/F_p}, returned as a residue in [0, p)
    long trace(long a) const;
    long generator() const { return generator_; }

private:
    long p_;
    int m_;
    long q_;
    long generator_;
    std::vector<long> modulus_;
    std::vector<long> exp_;    // generator powers, length q - 1
    std::vector<long> log_;    // discrete logs, length q
    std::vector<long> trace_;  // length q
};

// The character x -> zeta_p^{Tr_{F_q/F_p}(x)} of the additive group of F_q.
class AdditiveCharacter {
public:
    explicit AdditiveCharacter(GaloisField f) : field_(std::move(f)) {}

    const GaloisField& field() const { return field_; }
    long prime() const { return field_.p(); }
    CyclotomicInt operator()(long x) const;
    // evaluation on prime-field scalars; requires degree 1 and matching p
    CyclotomicInt operator()(const Scalar& x) const;

private:
    GaloisField field_;
};

}  // namespace albert
