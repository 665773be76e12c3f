#include "jordan.hpp"

#include <array>
#include <stdexcept>

namespace albert {

namespace {

void check_compatible(const JordanElement& u, const JordanElement& v) {
    if (u.coeff() != v.coeff())
        throw std::invalid_argument("Jordan elements have mismatched coefficient algebras");
}

// Coefficient of 1 in a central element of the coefficient algebra; the
// Hermitian matrix product keeps diagonal entries central, so anything else
// signals an internal inconsistency.
Scalar central_coefficient(const CompositionElement& u) {
    const Vec& c = u.coords();
    switch (u.algebra().kind()) {
        case CompKind::Base:
            return c[0];
        case CompKind::Quadratic:
            if (!c[1].is_zero()) break;
            return c[0];
        case CompKind::Quaternion:
            if (!c[1].is_zero() || !c[2].is_zero() || !c[3].is_zero()) break;
            return c[0];
        case CompKind::SplitOctonion: {
            bool ok = c[0] == c[7];
            for (int i = 1; i <= 6 && ok; ++i) ok = c[i].is_zero();
            if (!ok) break;
            return c[0];
        }
    }
    throw std::logic_error("expected a central diagonal entry");
}

}  // namespace

bool JordanElement::is_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
    check_compatible(*this, o);
    return JordanElement{a + o.a, b + o.b, c + o.c, x + o.x, y + o.y, z + o.z};
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
    check_compatible(*this, o);
    return JordanElement{a - o.a, b - o.b, c - o.c, x - o.x, y - o.y, z - o.z};
}

JordanElement JordanElement::scaled(const Scalar& s) const {
    return JordanElement{a * s, b * s, c * s, x.scaled(s), y.scaled(s), z.scaled(s)};
}

bool JordanElement::operator==(const JordanElement& o) const {
    return a == o.a && b == o.b && c == o.c && x == o.x && y == o.y && z == o.z;
}

JordanAlgebra::JordanAlgebra(CompositionAlgebra coeff) : coeff_(std::move(coeff)) {}

JordanElement JordanAlgebra::zero() const {
    Scalar z(field());
    return JordanElement{z, z, z, coeff_.zero(), coeff_.zero(), coeff_.zero()};
}

JordanElement JordanAlgebra::identity() const {
    Scalar one(field(), 1);
    return diagonal(one, one, one);
}

JordanElement JordanAlgebra::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) const {
    return JordanElement{a, b, c, coeff_.zero(), coeff_.zero(), coeff_.zero()};
}

JordanElement JordanAlgebra::element(Scalar a, Scalar b, Scalar c, CompositionElement x,
                                     CompositionElement y, CompositionElement z) const {
    if (x.algebra() != coeff_ || y.algebra() != coeff_ || z.algebra() != coeff_)
        throw std::invalid_argument("off-diagonal entries must lie in the coefficient algebra");
    if (!same_field(a.field(), field()) || !same_field(b.field(), field()) ||
        !same_field(c.field(), field()))
        throw std::invalid_argument("diagonal entries must lie in the base field");
    return JordanElement{std::move(a), std::move(b), std::move(c),
                         std::move(x), std::move(y), std::move(z)};
}

JordanElement JordanAlgebra::from_vec(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("coordinate vector has the wrong length");
    int d = coeff_.dim();
    auto slice = [&](int off) { return Vec(v.begin() + off, v.begin() + off + d); };
    return element(v[0], v[1], v[2], coeff_.element(slice(3)), coeff_.element(slice(3 + d)),
                   coeff_.element(slice(3 + 2 * d)));
}

Vec JordanAlgebra::to_vec(const JordanElement& e) const {
    Vec v{e.a, e.b, e.c};
    v.reserve(dim());
    for (const auto* part : {&e.x, &e.y, &e.z})
        v.insert(v.end(), part->coords().begin(), part->coords().end());
    return v;
}

JordanElement JordanAlgebra::basis_element(int i) const {
    Vec v = vec_zero(field(), dim());
    v.at(i) = Scalar(field(), 1);
    return from_vec(v);
}

JordanElement jordan_multiply(const JordanElement& alpha, const JordanElement& beta) {
    check_compatible(alpha, beta);
    const CompositionAlgebra& B = alpha.coeff();
    auto mat = [&](const JordanElement& e) {
        return std::array<CompositionElement, 9>{
            B.scalar_multiple_of_one(e.a), e.z, conjugate(e.y),
            conjugate(e.z), B.scalar_multiple_of_one(e.b), e.x,
            e.y, conjugate(e.x), B.scalar_multiple_of_one(e.c)};
    };
    std::array<CompositionElement, 9> m = mat(alpha), n = mat(beta);
    Scalar half = Scalar(B.field(), 2).inverse();
    auto sym = [&](int i, int j) {
        CompositionElement acc = B.zero();
        for (int k = 0; k < 3; ++k)
            acc = acc + multiply(m[3 * i + k], n[3 * k + j]) + multiply(n[3 * i + k], m[3 * k + j]);
        return acc.scaled(half);
    };
    return JordanElement{central_coefficient(sym(0, 0)), central_coefficient(sym(1, 1)),
                         central_coefficient(sym(2, 2)), sym(1, 2), sym(2, 0), sym(0, 1)};
}

CubicData cubic_data(const JordanElement& e) {
    Scalar nx = norm(e.x), ny = norm(e.y), nz = norm(e.z);
    Scalar t = trace(multiply(multiply(e.x, e.y), e.z));
    Scalar det = e.a * e.b * e.c - e.a * nx - e.b * ny - e.c * nz + t;
    Scalar tr = e.a + e.b + e.c;
    JordanElement sharp{
        e.b * e.c - nx,
        e.c * e.a - ny,
        e.a * e.b - nz,
        multiply(conjugate(e.z), conjugate(e.y)) - e.x.scaled(e.a),
        multiply(conjugate(e.x), conjugate(e.z)) - e.y.scaled(e.b),
        multiply(conjugate(e.y), conjugate(e.x)) - e.z.scaled(e.c)};
    Scalar sigma = sharp.a + sharp.b + sharp.c;
    return CubicData{std::move(det), std::move(tr), std::move(sigma), std::move(sharp)};
}

int rank(const JordanElement& alpha) {
    if (alpha.is_zero()) return 0;
    CubicData d = cubic_data(alpha);
    if (d.sharp.is_zero()) return 1;
    return d.det.is_zero() ? 2 : 3;
}

bool rank1_paper_predicate(const JordanElement& e) {
    if (e.is_zero()) return false;
    if (norm(e.x) != e.b * e.c || norm(e.y) != e.c * e.a || norm(e.z) != e.a * e.b) return false;
    return multiply(e.x, e.y) == conjugate(e.z).scaled(e.c) &&
           multiply(e.y, e.z) == conjugate(e.x).scaled(e.a) &&
           multiply(e.z, e.x) == conjugate(e.y).scaled(e.b);
}

Scalar jordan_trace_form(const JordanElement& u, const JordanElement& v) {
    check_compatible(u, v);
    return u.a * v.a + u.b * v.b + u.c * v.c + trace_pairing(u.x, v.x) + trace_pairing(u.y, v.y) +
           trace_pairing(u.z, v.z);
}

JordanElement jordan_cross(const JordanElement& u, const JordanElement& v) {
    check_compatible(u, v);
    return cubic_data(u + v).sharp - cubic_data(u).sharp - cubic_data(v).sharp;
}

ExactMatrix multiplication_operator(const JordanAlgebra& J, const JordanElement& alpha) {
    int n = J.dim();
    ExactMatrix m(J.field(), n, n);
    for (int j = 0; j < n; ++j) {
        Vec col = J.to_vec(jordan_multiply(alpha, J.basis_element(j)));
        for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
}

JordanElement jordan_embed(const JordanElement& alpha, const JordanAlgebra& target) {
    return target.element(alpha.a, alpha.b, alpha.c, embed_next(alpha.x, target.coeff()),
                          embed_next(alpha.y, target.coeff()),
                          embed_next(alpha.z, target.coeff()));
}

Vec CubicNormStructure::cross(const Vec& u, const Vec& v) const {
    return vec_sub(vec_sub(sharp(vec_add(u, v)), sharp(u)), sharp(v));
}

namespace {

class BaseCubic : public CubicNormStructure {
public:
    explicit BaseCubic(const Field& f) : fld_(&f) {}
    CubicKind kind() const override { return CubicKind::Base; }
    const Field& field() const override { return *fld_; }
    int dim() const override { return 1; }
    std::string name() const override { return "k"; }
    Vec basepoint() const override { return {Scalar(*fld_, 1)}; }
    Scalar norm_form(const Vec& v) const override { return v.at(0) * v[0] * v[0]; }
    Scalar trace_form(const Vec& u, const Vec& v) const override {
        return Scalar(*fld_, 3) * u.at(0) * v.at(0);
    }
    Vec sharp(const Vec& v) const override { return {v.at(0) * v[0]}; }

private:
    const Field* fld_;
};

class DiagonalCubic : public CubicNormStructure {
public:
    explicit DiagonalCubic(const Field& f) : fld_(&f) {}
    CubicKind kind() const override { return CubicKind::Diagonal; }
    const Field& field() const override { return *fld_; }
    int dim() const override { return 3; }
    std::string name() const override { return "E"; }
    Vec basepoint() const override { return Vec(3, Scalar(*fld_, 1)); }
    Scalar norm_form(const Vec& v) const override { return v.at(0) * v.at(1) * v.at(2); }
    Scalar trace_form(const Vec& u, const Vec& v) const override {
        return u.at(0) * v.at(0) + u.at(1) * v.at(1) + u.at(2) * v.at(2);
    }
    Vec sharp(const Vec& v) const override {
        return {v.at(1) * v.at(2), v.at(2) * v.at(0), v.at(0) * v.at(1)};
    }

private:
    const Field* fld_;
};

class JordanCubic : public CubicNormStructure {
public:
    explicit JordanCubic(const CompositionAlgebra& B) : J_(B) {}
    CubicKind kind() const override { return CubicKind::Jordan; }
    const Field& field() const override { return J_.field(); }
    int dim() const override { return J_.dim(); }
    std::string name() const override {
        switch (J_.coeff().kind()) {
            case CompKind::Base: return "J(k)";
            case CompKind::Quadratic: return "J(K)";
            case CompKind::Quaternion: return "J(D)";
            case CompKind::SplitOctonion: return "J(O)";
        }
        return "J(?)";
    }
    Vec basepoint() const override { return J_.to_vec(J_.identity()); }
    Scalar norm_form(const Vec& v) const override { return cubic_data(J_.from_vec(v)).det; }
    Scalar trace_form(const Vec& u, const Vec& v) const override {
        return jordan_trace_form(J_.from_vec(u), J_.from_vec(v));
    }
    Vec sharp(const Vec& v) const override {
        return J_.to_vec(cubic_data(J_.from_vec(v)).sharp);
    }
    const JordanAlgebra* jordan() const override { return &J_; }

private:
    JordanAlgebra J_;
};

}  // namespace

std::unique_ptr<CubicNormStructure> cubic_structure_base(const Field& f) {
    return std::make_unique<BaseCubic>(f);
}

std::unique_ptr<CubicNormStructure> cubic_structure_diagonal(const Field& f) {
    return std::make_unique<DiagonalCubic>(f);
}

std::unique_ptr<CubicNormStructure> cubic_structure_jordan(const CompositionAlgebra& B) {
    return std::make_unique<JordanCubic>(B);
}

std::vector<std::unique_ptr<CubicNormStructure>> cubic_chain(const Field& f) {
    std::vector<std::unique_ptr<CubicNormStructure>> chain;
    chain.push_back(cubic_structure_base(f));
    chain.push_back(cubic_structure_diagonal(f));
    chain.push_back(cubic_structure_jordan(CompositionAlgebra::base(f)));
    chain.push_back(cubic_structure_jordan(CompositionAlgebra::quadratic(f, Scalar(f, 1))));
    chain.push_back(
        cubic_structure_jordan(CompositionAlgebra::quaternion(f, Scalar(f, 1), Scalar(f, 1))));
    chain.push_back(cubic_structure_jordan(CompositionAlgebra::split_octonions(f)));
    return chain;
}

Vec embed_chain(const CubicNormStructure& src, const CubicNormStructure& dst, const Vec& v) {
    if (!same_field(src.field(), dst.field()))
        throw std::invalid_argument("chain embedding requires matching fields");
    if (src.kind() == CubicKind::Base && dst.kind() == CubicKind::Diagonal)
        return Vec(3, v.at(0));
    if (src.kind() == CubicKind::Diagonal && dst.kind() == CubicKind::Jordan &&
        dst.jordan()->coeff().kind() == CompKind::Base) {
        Vec out = vec_zero(src.field(), dst.dim());
        out[0] = v.at(0);
        out[1] = v.at(1);
        out[2] = v.at(2);
        return out;
    }
    if (src.kind() == CubicKind::Jordan && dst.kind() == CubicKind::Jordan) {
        const JordanAlgebra& tgt = *dst.jordan();
        return tgt.to_vec(jordan_embed(src.jordan()->from_vec(v), tgt));
    }
    throw std::invalid_argument("not a designated chain step");
}

}  // namespace albert
