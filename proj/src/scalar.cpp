#include "scalar.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace albert {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t p) {
    int64_t acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid; p is prime so gcd is 1.
    int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        int64_t qt = old_r / r;
        int64_t tmp = old_r - qt * r; old_r = r; r = tmp;
        tmp = old_s - qt * s; old_s = s; s = tmp;
    }
    int64_t inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

const Field& Field::rationals() {
    static Field q(Kind::Q, 0);
    return q;
}

const Field& Field::prime(long p) {
    if (p < 5) throw std::invalid_argument("field characteristic must be >= 5 (Jordan product needs 1/2, cubic polarization needs 1/3)");
    if (!is_prime_long(p)) throw std::invalid_argument("F_p requires prime p, got " + std::to_string(p));
    static std::mutex mu;
    static std::map<long, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, std::unique_ptr<Field>(new Field(Kind::Fp, p))).first;
    return *it->second;
}

const Field& Field::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0)
        return prime(std::stol(s.substr(3)));
    throw std::invalid_argument("unknown field descriptor: " + s + " (expected Q or Fp:<p>)");
}

std::string Field::describe() const {
    return kind_ == Kind::Q ? "Q" : "Fp:" + std::to_string(p_);
}

void Scalar::init_zero() {
    if (fld_->is_rationals())
        v_ = mpq_class(0);
    else
        v_ = int64_t{0};
}

Scalar::Scalar(const Field& f, long value) : fld_(&f) {
    if (f.is_rationals()) {
        v_ = mpq_class(value);
    } else {
        int64_t r = value % f.p();
        if (r < 0) r += f.p();
        v_ = r;
    }
}

Scalar::Scalar(const Field& f, const mpq_class& value) : fld_(&f) {
    if (f.is_rationals()) {
        v_ = value;
    } else {
        // Reduce num/den mod p; the denominator must be a unit.
        mpz_class p(f.p());
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        int64_t n = num.get_si(), d = den.get_si();
        if (n < 0) n += f.p();
        if (d < 0) d += f.p();
        if (d == 0) throw std::domain_error("rational with denominator divisible by " + std::to_string(f.p()));
        v_ = n * mod_inverse(d, f.p()) % f.p();
    }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Scalar(f, mpq_class(text));
    mpq_class q(text);
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const {
    return fld_->is_rationals() ? sgn(q()) == 0 : r() == 0;
}

bool Scalar::is_one() const {
    return fld_->is_rationals() ? q() == 1 : r() == 1;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!same_field(*fld_, *o.fld_)) return false;
    return fld_->is_rationals() ? q() == o.q() : r() == o.r();
}

namespace {
void check_fields(const Scalar& a, const Scalar& b) {
    if (!same_field(a.field(), b.field()))
        throw std::invalid_argument("scalar field mismatch: " + a.field().describe() + " vs " + b.field().describe());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    check_fields(*this, o);
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(q() + o.q());
    else out.v_ = (r() + o.r()) % fld_->p();
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_fields(*this, o);
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(q() - o.q());
    else out.v_ = (r() - o.r() % fld_->p() + fld_->p()) % fld_->p();
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_fields(*this, o);
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(q() * o.q());
    else out.v_ = r() * o.r() % fld_->p();
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_fields(*this, o);
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(q() / o.q());
    else out.v_ = r() * mod_inverse(o.r(), fld_->p()) % fld_->p();
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(-q());
    else out.v_ = r() == 0 ? 0 : fld_->p() - r();
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out(*fld_);
    if (fld_->is_rationals()) out.v_ = mpq_class(1 / q());
    else out.v_ = mod_inverse(r(), fld_->p());
    return out;
}

long Scalar::to_long() const {
    if (!fld_->is_rationals()) return static_cast<long>(r());
    if (q().get_den() != 1) throw std::domain_error("scalar is not an integer: " + to_string());
    if (!q().get_num().fits_slong_p()) throw std::domain_error("scalar exceeds long range");
    return q().get_num().get_si();
}

mpq_class Scalar::to_mpq() const {
    return fld_->is_rationals() ? q() : mpq_class(static_cast<long>(r()));
}

std::string Scalar::to_string() const {
    if (fld_->is_rationals()) return q().get_str();
    return std::to_string(r());
}

}  // namespace albert
