#include "composition.hpp"

#include <ostream>
#include <stdexcept>

namespace albert {

namespace {

int dim_of(CompKind k) {
    switch (k) {
        case CompKind::Base: return 1;
        case CompKind::Quadratic: return 2;
        case CompKind::Quaternion: return 4;
        case CompKind::SplitOctonion: return 8;
    }
    throw std::logic_error("unreachable");
}

void check_same_algebra(const CompositionElement& x, const CompositionElement& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("composition elements belong to different algebras");
}

}  // namespace

CompositionAlgebra::CompositionAlgebra(CompKind k, const Field& f, std::vector<Scalar> params)
    : kind_(k), dim_(dim_of(k)), fld_(&f), params_(std::move(params)) {
    for (const auto& p : params_)
        if (p.is_zero()) throw std::invalid_argument("composition algebra parameter must be nonzero");
}

CompositionAlgebra CompositionAlgebra::base(const Field& f) {
    return CompositionAlgebra(CompKind::Base, f, {});
}

CompositionAlgebra CompositionAlgebra::quadratic(const Field& f, const Scalar& d) {
    return CompositionAlgebra(CompKind::Quadratic, f, {d});
}

CompositionAlgebra CompositionAlgebra::quaternion(const Field& f, const Scalar& a, const Scalar& b) {
    return CompositionAlgebra(CompKind::Quaternion, f, {a, b});
}

CompositionAlgebra CompositionAlgebra::split_octonions(const Field& f) {
    return CompositionAlgebra(CompKind::SplitOctonion, f, {});
}

bool CompositionAlgebra::operator==(const CompositionAlgebra& o) const {
    if (kind_ != o.kind_ || !same_field(*fld_, *o.fld_)) return false;
    for (size_t i = 0; i < params_.size(); ++i)
        if (params_[i] != o.params_[i]) return false;
    return true;
}

CompositionElement CompositionAlgebra::zero() const {
    return CompositionElement(*this, vec_zero(*fld_, dim_));
}

CompositionElement CompositionAlgebra::one() const {
    Vec c = vec_zero(*fld_, dim_);
    c[0] = Scalar(*fld_, 1);
    if (kind_ == CompKind::SplitOctonion) c[7] = Scalar(*fld_, 1);
    return CompositionElement(*this, std::move(c));
}

CompositionElement CompositionAlgebra::element(Vec coords) const {
    if (static_cast<int>(coords.size()) != dim_)
        throw std::invalid_argument("coordinate vector has the wrong length");
    for (const auto& c : coords)
        if (!same_field(c.field(), *fld_))
            throw std::invalid_argument("coordinate lies in the wrong field");
    return CompositionElement(*this, std::move(coords));
}

CompositionElement CompositionAlgebra::basis_element(int i) const {
    Vec c = vec_zero(*fld_, dim_);
    c.at(i) = Scalar(*fld_, 1);
    return CompositionElement(*this, std::move(c));
}

CompositionElement CompositionAlgebra::scalar_multiple_of_one(const Scalar& c) const {
    Vec v = one().coords();
    for (auto& x : v) x *= c;
    return CompositionElement(*this, std::move(v));
}

CompositionElement CompositionElement::operator+(const CompositionElement& o) const {
    check_same_algebra(*this, o);
    return CompositionElement(alg_, vec_add(c_, o.c_));
}

CompositionElement CompositionElement::operator-(const CompositionElement& o) const {
    check_same_algebra(*this, o);
    return CompositionElement(alg_, vec_sub(c_, o.c_));
}

CompositionElement CompositionElement::operator-() const {
    return scaled(Scalar(alg_.field(), -1));
}

CompositionElement CompositionElement::scaled(const Scalar& c) const {
    return CompositionElement(alg_, vec_scaled(c_, c));
}

bool CompositionElement::operator==(const CompositionElement& o) const {
    return alg_ == o.alg_ && c_ == o.c_;
}

CompositionElement multiply(const CompositionElement& x, const CompositionElement& y) {
    check_same_algebra(x, y);
    const CompositionAlgebra& A = x.algebra();
    const Field& f = A.field();
    const Vec& p = x.coords();
    const Vec& q = y.coords();
    switch (A.kind()) {
        case CompKind::Base:
            return A.element({p[0] * q[0]});
        case CompKind::Quadratic: {
            const Scalar& d = A.param_a();
            return A.element({p[0] * q[0] + d * p[1] * q[1], p[0] * q[1] + p[1] * q[0]});
        }
        case CompKind::Quaternion: {
            // Basis 1, i, j, ij with i^2 = a, j^2 = b, ij = -ji.
            const Scalar& a = A.param_a();
            const Scalar& b = A.param_b();
            Scalar z0 = p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3];
            Scalar z1 = p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2];
            Scalar z2 = p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1];
            Scalar z3 = p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1];
            return A.element({std::move(z0), std::move(z1), std::move(z2), std::move(z3)});
        }
        case CompKind::SplitOctonion: {
            // Zorn product of [[a, v], [v', b]] and [[c, w], [w', d]]:
            //   [[ac + <w', v>,  aw + dv + v' ^ w'], [cv' + bw' + v ^ w,  bd + <v', w>]]
            // with v ^ w the cross product landing in V' and v' ^ w' minus the
            // cross product landing in V; both signs are forced by N(xy)=N(x)N(y).
            const Scalar &a = p[0], &b = p[7], &c = q[0], &d = q[7];
            auto dot3 = [&](int off1, const Vec& u, int off2, const Vec& w) {
                return u[off1] * w[off2] + u[off1 + 1] * w[off2 + 1] + u[off1 + 2] * w[off2 + 2];
            };
            Vec r = vec_zero(f, 8);
            r[0] = a * c + dot3(4, q, 1, p);  // ac + <w', v>
            r[7] = b * d + dot3(4, p, 1, q);  // bd + <v', w>
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                // V-part: a w + d v - (v' x w')
                r[1 + i] = a * q[1 + i] + d * p[1 + i] - (p[4 + j] * q[4 + k] - p[4 + k] * q[4 + j]);
                // V'-part: c v' + b w' + (v x w)
                r[4 + i] = c * p[4 + i] + b * q[4 + i] + (p[1 + j] * q[1 + k] - p[1 + k] * q[1 + j]);
            }
            return A.element(std::move(r));
        }
    }
    throw std::logic_error("unreachable");
}

CompositionElement conjugate(const CompositionElement& x) {
    const CompositionAlgebra& A = x.algebra();
    Vec c = x.coords();
    switch (A.kind()) {
        case CompKind::Base:
            break;
        case CompKind::Quadratic:
        case CompKind::Quaternion:
            for (size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
            break;
        case CompKind::SplitOctonion:
            std::swap(c[0], c[7]);
            for (int i = 1; i <= 6; ++i) c[i] = -c[i];
            break;
    }
    return A.element(std::move(c));
}

Scalar trace(const CompositionElement& x) {
    const Vec& c = x.coords();
    if (x.algebra().kind() == CompKind::SplitOctonion) return c[0] + c[7];
    return c[0] + c[0];
}

Scalar norm(const CompositionElement& x) {
    const CompositionAlgebra& A = x.algebra();
    const Vec& c = x.coords();
    switch (A.kind()) {
        case CompKind::Base:
            return c[0] * c[0];
        case CompKind::Quadratic:
            return c[0] * c[0] - A.param_a() * c[1] * c[1];
        case CompKind::Quaternion: {
            const Scalar& a = A.param_a();
            const Scalar& b = A.param_b();
            return c[0] * c[0] - a * c[1] * c[1] - b * c[2] * c[2] + a * b * c[3] * c[3];
        }
        case CompKind::SplitOctonion:
            return c[0] * c[7] - (c[4] * c[1] + c[5] * c[2] + c[6] * c[3]);
    }
    throw std::logic_error("unreachable");
}

InvolutionData involution_data(const CompositionElement& x) {
    return InvolutionData{conjugate(x), trace(x), norm(x)};
}

Scalar trace_pairing(const CompositionElement& u, const CompositionElement& v) {
    return trace(multiply(u, conjugate(v)));
}

CompositionElement invert(const CompositionElement& x) {
    Scalar n = norm(x);
    if (n.is_zero()) throw std::domain_error("element is not invertible: norm is zero");
    return conjugate(x).scaled(n.inverse());
}

namespace {

bool is_central(const CompositionElement& x) {
    const Vec& c = x.coords();
    switch (x.algebra().kind()) {
        case CompKind::Base:
            return true;
        case CompKind::Quadratic:
            return c[1].is_zero();
        case CompKind::Quaternion:
            return c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
        case CompKind::SplitOctonion:
            for (int i = 1; i <= 6; ++i)
                if (!c[i].is_zero()) return false;
            return c[0] == c[7];
    }
    throw std::logic_error("unreachable");
}

}  // namespace

int element_rank(const CompositionElement& x) {
    if (x.is_zero()) return 0;
    if (is_central(x)) return 1;
    Scalar t = trace(x);
    Scalar disc = t * t - Scalar(x.algebra().field(), 4) * norm(x);
    return disc.is_zero() ? 1 : 2;
}

bool in_rank1_trace0_cone(const CompositionElement& x) {
    return !x.is_zero() && trace(x).is_zero() && norm(x).is_zero();
}

CompositionElement embed_next(const CompositionElement& x, const CompositionAlgebra& target) {
    const CompositionAlgebra& src = x.algebra();
    if (!same_field(src.field(), target.field()))
        throw std::invalid_argument("embedding requires matching base fields");
    const Field& f = src.field();
    const Vec& c = x.coords();
    if (src.kind() == CompKind::Base && target.kind() == CompKind::Quadratic) {
        return target.element({c[0], Scalar(f)});
    }
    if (src.kind() == CompKind::Quadratic && target.kind() == CompKind::Quaternion) {
        // u maps to i; needs u^2 = d to match i^2 = a.
        if (src.param_a() != target.param_a())
            throw std::invalid_argument("quadratic parameter does not match quaternion symbol");
        return target.element({c[0], c[1], Scalar(f), Scalar(f)});
    }
    if (src.kind() == CompKind::Quaternion && target.kind() == CompKind::SplitOctonion) {
        // The split quaternions sit inside Zorn matrices along the e_1 slice:
        // [[a, beta], [gamma, b]] -> (a, beta e_1, gamma e_1', b), with
        // i = [[1,0],[0,-1]], j = [[0,1],[1,0]], ij = [[0,1],[-1,0]].
        if (!src.param_a().is_one() || !src.param_b().is_one())
            throw std::invalid_argument("only the symbol (1,1) embeds into the split octonions here");
        Vec r = vec_zero(f, 8);
        r[0] = c[0] + c[1];
        r[7] = c[0] - c[1];
        r[1] = c[2] + c[3];
        r[4] = c[2] - c[3];
        return target.element(std::move(r));
    }
    throw std::invalid_argument("not a designated chain step");
}

const std::vector<std::vector<std::vector<int>>>& octonion_structure_constants() {
    static const std::vector<std::vector<std::vector<int>>> table = [] {
        const Field& q = Field::rationals();
        CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
        std::vector<std::vector<std::vector<int>>> t(
            8, std::vector<std::vector<int>>(8, std::vector<int>(8, 0)));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                CompositionElement prod = multiply(oct.basis_element(i), oct.basis_element(j));
                for (int k = 0; k < 8; ++k)
                    if (!prod.coord(k).is_zero()) t[i][j][k] = static_cast<int>(prod.coord(k).to_long());
            }
        return t;
    }();
    return table;
}

std::ostream& operator<<(std::ostream& os, const CompositionElement& x) {
    os << "(";
    for (int i = 0; i < x.algebra().dim(); ++i) {
        if (i) os << ", ";
        os << x.coord(i).to_string();
    }
    return os << ")";
}

}  // namespace albert
