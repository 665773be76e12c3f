#include "gf.hpp"

#include <sstream>
#include <stdexcept>

namespace albert {

namespace {

void check_cyclotomic_prime(long p) {
    if (p < 2 || !is_prime_long(p))
        throw std::invalid_argument("cyclotomic order must be prime");
}

}  // namespace

CyclotomicInt::CyclotomicInt(long p) : p_(p) {
    check_cyclotomic_prime(p);
    c_.assign(static_cast<size_t>(p - 1), mpz_class(0));
}

CyclotomicInt CyclotomicInt::one(long p) {
    CyclotomicInt r(p);
    r.c_[0] = 1;
    return r;
}

CyclotomicInt CyclotomicInt::zeta_power(long p, long e) {
    CyclotomicInt r(p);
    e = ((e % p) + p) % p;
    if (e <= p - 2) {
        r.c_[static_cast<size_t>(e)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : r.c_) c = -1;
    }
    return r;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CyclotomicInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    CyclotomicInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    const size_t n = c_.size();  // p - 1
    std::vector<mpz_class> prod(2 * n - 1, mpz_class(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    // fold degrees >= p-1 using zeta^{p-1} = -(1 + ... + zeta^{p-2})
    for (size_t k = prod.size(); k-- > n;) {
        if (prod[k] == 0) continue;
        mpz_class coef = prod[k];
        prod[k] = 0;
        for (size_t t = 0; t < n; ++t) prod[k - n + t] -= coef;
    }
    CyclotomicInt r(p_);
    for (size_t i = 0; i < n; ++i) r.c_[i] = prod[i];
    return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return p_ == o.p_ && c_ == o.c_;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicInt::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// dense polynomials over F_p, coefficients in [0, p), constant term first
using Poly = std::vector<long>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
    a = poly_trim(std::move(a));
    const long lead_inv = mod_inverse(m.back(), p);
    while (a.size() >= m.size()) {
        long c = (a.back() * lead_inv) % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), m, p);
}

bool poly_divides(const Poly& d, const Poly& f, long p) {
    return poly_mod(f, d, p).empty();
}

// trial division by every monic polynomial of degree 1..deg(f)/2
bool poly_is_irreducible(const Poly& f, long p) {
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g(static_cast<size_t>(d + 1), 0);
            long rest = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<size_t>(i)] = rest % p;
                rest /= p;
            }
            g[static_cast<size_t>(d)] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

Poly find_irreducible(long p, int m) {
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        Poly f(static_cast<size_t>(m + 1), 0);
        long rest = code;
        for (int i = 0; i < m; ++i) {
            f[static_cast<size_t>(i)] = rest % p;
            rest /= p;
        }
        f[static_cast<size_t>(m)] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

long encode(const Poly& a, long p) {
    long v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(long v, long p, int m) {
    Poly a(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        a[static_cast<size_t>(i)] = v % p;
        v /= p;
    }
    return poly_trim(std::move(a));
}

}  // namespace

GaloisField::GaloisField(long p, int m) : p_(p), m_(m) {
    if (!is_prime_long(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > 4096) throw std::invalid_argument("field size limit is 4096");
    }
    modulus_ = (m == 1) ? Poly{0, 1} : find_irreducible(p, m);

    // find a multiplicative generator by direct order computation
    exp_.assign(static_cast<size_t>(q_ - 1), 0);
    log_.assign(static_cast<size_t>(q_), 0);
    generator_ = 0;
    for (long g = 1; g < q_; ++g) {
        Poly gp = decode(g, p_, m_);
        Poly acc{1};
        long order = 0;
        bool ok = true;
        std::vector<long> powers;
        do {
            powers.push_back(encode(acc, p_));
            acc = poly_mulmod(acc, gp, modulus_, p_);
            ++order;
            if (order > q_ - 1) {
                ok = false;
                break;
            }
        } while (!(acc.size() == 1 && acc[0] == 1));
        if (ok && order == q_ - 1) {
            generator_ = g;
            for (long e = 0; e < q_ - 1; ++e) {
                exp_[static_cast<size_t>(e)] = powers[static_cast<size_t>(e)];
                log_[static_cast<size_t>(powers[static_cast<size_t>(e)])] = e;
            }
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("no multiplicative generator found");

    trace_.assign(static_cast<size_t>(q_), 0);
    for (long a = 1; a < q_; ++a) {
        // sum of the Frobenius orbit a + a^p + ... + a^{p^{m-1}}
        Poly sum;
        long frob = a;
        for (int i = 0; i < m_; ++i) {
            Poly fp = decode(frob, p_, m_);
            if (fp.size() > sum.size()) sum.resize(fp.size(), 0);
            for (size_t j = 0; j < fp.size(); ++j) sum[j] = (sum[j] + fp[j]) % p_;
            frob = pow(frob, p_);
        }
        sum = poly_trim(std::move(sum));
        if (sum.size() > 1) throw std::logic_error("trace left the prime field");
        trace_[static_cast<size_t>(a)] = sum.empty() ? 0 : sum[0];
    }
}

long GaloisField::add(long a, long b) const {
    long r = 0;
    long mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

long GaloisField::neg(long a) const {
    long r = 0;
    long mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

long GaloisField::sub(long a, long b) const { return add(a, neg(b)); }

long GaloisField::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    long e = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
    return exp_[static_cast<size_t>(e % (q_ - 1))];
}

long GaloisField::inverse(long a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    long e = (q_ - 1 - log_[static_cast<size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<size_t>(e)];
}

long GaloisField::pow(long a, long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inverse of zero");
        return e == 0 ? 1 : 0;
    }
    long la = log_[static_cast<size_t>(a)];
    long n = q_ - 1;
    long le = ((la % n) * (e % n) % n + n) % n;
    return exp_[static_cast<size_t>(le)];
}

long GaloisField::trace(long a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element out of range");
    return trace_[static_cast<size_t>(a)];
}

CyclotomicInt AdditiveCharacter::operator()(long x) const {
    return CyclotomicInt::zeta_power(field_.p(), field_.trace(x));
}

CyclotomicInt AdditiveCharacter::operator()(const Scalar& x) const {
    if (field_.degree() != 1)
        throw std::invalid_argument("scalar evaluation needs a prime field character");
    if (x.field().kind() != Field::Kind::Fp || x.field().p() != field_.p())
        throw std::invalid_argument("scalar lives in the wrong field");
    return CyclotomicInt::zeta_power(field_.p(), x.to_long());
}

}  // namespace albert
