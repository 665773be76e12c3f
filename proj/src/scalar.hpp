#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace albert {

/// An exact coefficient field: the rationals, or a prime field F_p with p >= 5.
/// Characteristics 2 and 3 are rejected at construction time because the
/// Jordan product divides by 2 and the cubic-form polarizations divide by 3.
class Field {
public:
    enum class Kind { Q, Fp };

    static const Field& rationals();
    static const Field& prime(long p);
    /// Parse "Q" or "Fp:<p>"; throws std::invalid_argument on anything else.
    static const Field& parse(const std::string& s);

    Kind kind() const { return kind_; }
    long p() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::Q; }
    std::string describe() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;  // 0 for Q
};

/// Fields are canonical singletons, so identity comparison is enough.
inline bool same_field(const Field& a, const Field& b) { return &a == &b; }

/// One element of a Field. Immutable value semantics; all arithmetic is exact
/// and equality is decidable (rationals are kept in canonical form by GMP,
/// residues in [0, p)).
class Scalar {
public:
    Scalar() : fld_(&Field::rationals()), v_(mpq_class(0)) {}
    explicit Scalar(const Field& f) : fld_(&f) { init_zero(); }
    Scalar(const Field& f, long value);
    Scalar(const Field& f, const mpq_class& value);

    /// Parse an integer "n" or a fraction "n/d" in the given field.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return *fld_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    /// For F_p: the residue in [0, p). For Q: throws unless the value is an
    /// integer that fits in long.
    long to_long() const;
    /// Rational value; for F_p this is the residue as an integer.
    mpq_class to_mpq() const;

    std::string to_string() const;

private:
    void init_zero();
    const Field* fld_;
    std::variant<int64_t, mpq_class> v_;  // int64_t for Fp, mpq_class for Q

    int64_t r() const { return std::get<int64_t>(v_); }
    const mpq_class& q() const { return std::get<mpq_class>(v_); }
    friend struct ScalarOps;
};

/// Residue arithmetic helpers (shared with the fast finite-field kernels).
int64_t mod_pow(int64_t base, int64_t exp, int64_t p);
int64_t mod_inverse(int64_t a, int64_t p);
bool is_prime_long(long n);

}  // namespace albert
