#include "opmodels.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "freudenthal.hpp"

namespace albert {

namespace {

long canon(long v, long p) { return ((v % p) + p) % p; }

const Field& require_prime_field(const Field& f, const char* what) {
    if (f.kind() != Field::Kind::Fp)
        throw std::invalid_argument(std::string(what) + " needs a prime field");
    return f;
}

void require_matching_character(const AdditiveCharacter& psi, const Field& f) {
    if (psi.field().degree() != 1 || psi.prime() != f.p())
        throw std::invalid_argument("the character does not match the coefficient field");
}

std::string key_string(const FiniteFunctionSpace& space, long idx) {
    std::ostringstream os;
    os << "(";
    const auto& key = space.key(idx);
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) os << ",";
        os << key[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

FiniteFunctionSpace::FiniteFunctionSpace(const Field& f, std::vector<std::vector<long>> keys)
    : fld_(&require_prime_field(f, "a function space")), keys_(std::move(keys)) {
    for (auto& key : keys_)
        for (auto& v : key) v = canon(v, fld_->p());
}

Vec FiniteFunctionSpace::point(long i) const {
    const auto& key = keys_[static_cast<size_t>(i)];
    Vec v;
    v.reserve(key.size());
    for (long r : key) v.emplace_back(*fld_, r);
    return v;
}

long FiniteFunctionSpace::index_of(const std::vector<long>& key) const {
    if (index_.empty()) {
        for (size_t i = 0; i < keys_.size(); ++i) index_[keys_[i]] = static_cast<long>(i);
    }
    std::vector<long> k = key;
    for (auto& v : k) v = canon(v, fld_->p());
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
}

ModelOperator::ModelOperator(const FiniteFunctionSpace& space, long p, std::string name)
    : space_(&space), p_(p), name_(std::move(name)) {
    size_t n = static_cast<size_t>(space.size());
    defined_.assign(n, 0);
    target_.assign(n, 0);
    exp_.assign(n, 0);
}

ModelOperator ModelOperator::identity(const FiniteFunctionSpace& space, long p,
                                      const std::string& name) {
    ModelOperator op(space, p, name);
    for (long i = 0; i < space.size(); ++i) {
        op.defined_[static_cast<size_t>(i)] = 1;
        op.target_[static_cast<size_t>(i)] = i;
    }
    return op;
}

ModelOperator ModelOperator::from_action(const FiniteFunctionSpace& space, long p,
                                         std::string name,
                                         const std::function<bool(const Vec&)>& locus,
                                         const std::function<Vec(const Vec&)>& point_map,
                                         const std::function<Scalar(const Vec&)>& phase) {
    ModelOperator op(space, p, std::move(name));
    for (long i = 0; i < space.size(); ++i) {
        Vec pt = space.point(i);
        if (!locus(pt)) continue;
        Vec image = point_map(pt);
        std::vector<long> key;
        key.reserve(image.size());
        for (const auto& c : image) key.push_back(c.to_long());
        long j = space.index_of(key);
        if (j < 0) throw std::logic_error("the point map leaves the domain");
        op.defined_[static_cast<size_t>(i)] = 1;
        op.target_[static_cast<size_t>(i)] = j;
        op.exp_[static_cast<size_t>(i)] = canon(phase(pt).to_long(), p);
    }
    return op;
}

ModelOperator ModelOperator::from_table(const FiniteFunctionSpace& space, long p,
                                        std::string name, std::vector<char> defined,
                                        std::vector<long> target, std::vector<long> exp) {
    const size_t n = static_cast<size_t>(space.size());
    if (defined.size() != n || target.size() != n || exp.size() != n)
        throw std::invalid_argument("table lengths do not match the space");
    ModelOperator op(space, p, std::move(name));
    for (size_t i = 0; i < n; ++i) {
        if (!defined[i]) continue;
        if (target[i] < 0 || target[i] >= space.size())
            throw std::invalid_argument("table target out of range");
        exp[i] = canon(exp[i], p);
    }
    op.defined_ = std::move(defined);
    op.target_ = std::move(target);
    op.exp_ = std::move(exp);
    return op;
}

CyclotomicInt ModelOperator::multiplier(long i) const {
    return CyclotomicInt::zeta_power(p_, exp_[static_cast<size_t>(i)]);
}

long ModelOperator::locus_size() const {
    long n = 0;
    for (char d : defined_) n += d;
    return n;
}

ModelOperator ModelOperator::operator*(const ModelOperator& o) const {
    if (space_ != o.space_ || p_ != o.p_)
        throw std::invalid_argument("operators live on different spaces");
    ModelOperator r(*space_, p_, name_ + "*" + o.name_);
    for (size_t i = 0; i < defined_.size(); ++i) {
        if (!defined_[i]) continue;
        size_t mid = static_cast<size_t>(target_[i]);
        if (!o.defined_[mid]) continue;
        r.defined_[i] = 1;
        r.target_[i] = o.target_[mid];
        r.exp_[i] = (exp_[i] + o.exp_[mid]) % p_;
    }
    return r;
}

std::optional<long> ModelOperator::first_difference(const ModelOperator& o) const {
    if (space_ != o.space_ || p_ != o.p_)
        throw std::invalid_argument("operators live on different spaces");
    for (size_t i = 0; i < defined_.size(); ++i) {
        if (!defined_[i] || !o.defined_[i]) continue;
        if (target_[i] != o.target_[i] || exp_[i] != o.exp_[i]) return static_cast<long>(i);
    }
    return std::nullopt;
}

bool ModelOperator::operator==(const ModelOperator& o) const {
    return space_ == o.space_ && p_ == o.p_ && defined_ == o.defined_ &&
           !first_difference(o).has_value();
}

std::vector<CyclotomicInt> ModelOperator::apply(const std::vector<CyclotomicInt>& values) const {
    if (values.size() != defined_.size())
        throw std::invalid_argument("value table has the wrong length");
    std::vector<CyclotomicInt> out(values.size(), CyclotomicInt::zero(p_));
    for (size_t i = 0; i < defined_.size(); ++i) {
        if (!defined_[i]) continue;
        out[i] = multiplier(static_cast<long>(i)) * values[static_cast<size_t>(target_[i])];
    }
    return out;
}

// ---------------------------------------------------------------------------
// classical Schrodinger model

namespace {

// row-major layout of Hom_D(E, V): scalar slot ((i * r) + j) * dk + s
std::vector<long> flatten_hom(const DMatrix& T) {
    std::vector<long> key;
    const int dk = T.coeff().dim();
    key.reserve(static_cast<size_t>(T.rows() * T.cols() * dk));
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < T.cols(); ++j)
            for (int s = 0; s < dk; ++s) key.push_back(T.at(i, j).coord(s).to_long());
    return key;
}

DMatrix unflatten_hom(const CompositionAlgebra& D, const Field& f, const std::vector<long>& key,
                      int rows, int cols) {
    DMatrix T(D, rows, cols);
    const int dk = D.dim();
    size_t pos = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Vec coords;
            coords.reserve(static_cast<size_t>(dk));
            for (int s = 0; s < dk; ++s) coords.emplace_back(f, key[pos++]);
            T.at(i, j) = D.element(coords);
        }
    return T;
}

}  // namespace

ClassicalSchrodingerModel::ClassicalSchrodingerModel(const HermitianSpace& V,
                                                     const HermitianSpace& W,
                                                     const Polarization& pol,
                                                     const AdditiveCharacter& psi,
                                                     long max_points)
    : V_(V), siegel_(W, pol), psi_(psi), p_(V.field().p()) {
    require_prime_field(V.field(), "the classical model");
    if (!same_field(V.field(), W.field()))
        throw std::invalid_argument("the two spaces live over different fields");
    require_matching_character(psi, V.field());
    if (V.eps() * W.eps() != -1)
        throw std::invalid_argument("the form signs must be opposite");

    const int scalars = V.dim() * siegel_.rank() * V.coeff().dim();
    long count = 1;
    for (int i = 0; i < scalars; ++i) {
        count *= p_;
        if (count > max_points)
            throw std::invalid_argument("the model domain exceeds the enumeration limit");
    }
    std::vector<std::vector<long>> keys;
    keys.reserve(static_cast<size_t>(count));
    std::vector<long> key(static_cast<size_t>(scalars), 0);
    for (long c = 0; c < count; ++c) {
        long rest = c;
        for (int i = 0; i < scalars; ++i) {
            key[static_cast<size_t>(i)] = rest % p_;
            rest /= p_;
        }
        keys.push_back(key);
    }
    space_ = std::make_unique<FiniteFunctionSpace>(V.field(), std::move(keys));
}

DMatrix ClassicalSchrodingerModel::point_map(long i) const {
    return unflatten_hom(V_.coeff(), V_.field(), space_->key(i), V_.dim(), siegel_.rank());
}

DMatrix ClassicalSchrodingerModel::moment_of(long i) const {
    return moment_map(V_, siegel_, point_map(i));
}

namespace {

Vec scalarize(const Field& f, const std::vector<long>& key) {
    Vec v;
    v.reserve(key.size());
    for (long r : key) v.emplace_back(f, r);
    return v;
}

std::vector<long> residues(const Vec& pt) {
    std::vector<long> key;
    key.reserve(pt.size());
    for (const auto& c : pt) key.push_back(c.to_long());
    return key;
}

}  // namespace

ModelOperator ClassicalSchrodingerModel::n_operator(const DMatrix& X) const {
    const Field& f = V_.field();
    if (siegel_.star_of_hom_fe(X) != X.scaled(Scalar(f, -siegel_.space().eps())))
        throw std::invalid_argument("the phase parameter is not in the unipotent radical");
    return ModelOperator::from_action(
        *space_, p_, "n",
        [](const Vec&) { return true; },
        [](const Vec& pt) { return pt; },
        [&](const Vec& pt) {
            DMatrix T = unflatten_hom(V_.coeff(), f, residues(pt), V_.dim(), siegel_.rank());
            return siegel_.character_exponent(moment_map(V_, siegel_, T), X);
        });
}

ModelOperator ClassicalSchrodingerModel::m_operator(const DMatrix& A) const {
    try {
        dmatrix_inverse(A);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("the Levi parameter must be invertible");
    }
    const Field& f = V_.field();
    return ModelOperator::from_action(
        *space_, p_, "m",
        [](const Vec&) { return true; },
        [&](const Vec& pt) {
            DMatrix T = unflatten_hom(V_.coeff(), f, residues(pt), V_.dim(), siegel_.rank());
            return scalarize(f, flatten_hom(T * A));
        },
        [&](const Vec&) { return Scalar(f, 0); });
}

ModelOperator ClassicalSchrodingerModel::g_operator(const DMatrix& g) const {
    if (!V_.is_isometry(g)) throw std::invalid_argument("the left factor must be an isometry");
    DMatrix ginv = dmatrix_inverse(g);
    const Field& f = V_.field();
    return ModelOperator::from_action(
        *space_, p_, "rho",
        [](const Vec&) { return true; },
        [&](const Vec& pt) {
            DMatrix T = unflatten_hom(V_.coeff(), f, residues(pt), V_.dim(), siegel_.rank());
            return scalarize(f, flatten_hom(ginv * T));
        },
        [&](const Vec&) { return Scalar(f, 0); });
}

// ---------------------------------------------------------------------------
// mixed model

MixedMinrepModel::MixedMinrepModel(const CubicNormStructure& R, const AdditiveCharacter& psi,
                                   long max_points)
    : p_(R.field().p()), r_dim_(R.dim()), psi_(psi) {
    const Field& f = require_prime_field(R.field(), "the mixed model");
    require_matching_character(psi, f);

    long x_count = 1;
    for (int i = 0; i < r_dim_; ++i) {
        x_count *= p_;
        if ((p_ - 1) * x_count * p_ > max_points)
            throw std::invalid_argument("the model domain exceeds the enumeration limit");
    }
    norms_.reserve(static_cast<size_t>(x_count));
    Vec x(static_cast<size_t>(r_dim_), Scalar(f, 0));
    for (long code = 0; code < x_count; ++code) {
        long rest = code;
        for (int i = 0; i < r_dim_; ++i) {
            x[static_cast<size_t>(i)] = Scalar(f, rest % p_);
            rest /= p_;
        }
        norms_.push_back(R.norm_form(x));
    }
    std::vector<std::vector<long>> keys;
    keys.reserve(static_cast<size_t>((p_ - 1) * x_count * p_));
    std::vector<long> key(static_cast<size_t>(r_dim_ + 2), 0);
    for (long t = 1; t < p_; ++t)
        for (long code = 0; code < x_count; ++code) {
            key[0] = t;
            long rest = code;
            for (int i = 0; i < r_dim_; ++i) {
                key[static_cast<size_t>(1 + i)] = rest % p_;
                rest /= p_;
            }
            for (long a = 0; a < p_; ++a) {
                key[static_cast<size_t>(r_dim_ + 1)] = a;
                keys.push_back(key);
            }
        }
    space_ = std::make_unique<FiniteFunctionSpace>(f, std::move(keys));
}

long MixedMinrepModel::index_of(long t_idx, long x_code, long a_idx) const {
    long x_count = static_cast<long>(norms_.size());
    return ((t_idx - 1) * x_count + x_code) * p_ + a_idx;
}

ModelOperator MixedMinrepModel::weyl_impl(bool corrupted, const std::string& name) const {
    const long n = space_->size();
    const long x_count = static_cast<long>(norms_.size());
    std::vector<char> defined(static_cast<size_t>(n), 0);
    std::vector<long> target(static_cast<size_t>(n), 0);
    std::vector<long> exp(static_cast<size_t>(n), 0);
    for (long t = 1; t < p_; ++t) {
        const long tinv = mod_inverse(t, p_);
        for (long code = 0; code < x_count; ++code) {
            const long nx = canon(norms_[static_cast<size_t>(code)].to_long(), p_);
            for (long a = 1; a < p_; ++a) {
                long i = index_of(t, code, a);
                long t2 = canon(-a * tinv, p_);           // -a/t, never 0
                long a2 = corrupted ? a : canon(-a, p_);  // the honest slot is -a
                defined[static_cast<size_t>(i)] = 1;
                target[static_cast<size_t>(i)] = index_of(t2, code, a2);
                exp[static_cast<size_t>(i)] = canon(nx * mod_inverse(a, p_), p_);
            }
        }
    }
    return ModelOperator::from_table(*space_, p_, name, std::move(defined), std::move(target),
                                     std::move(exp));
}

ModelOperator MixedMinrepModel::weyl_operator() const { return weyl_impl(false, "w"); }

ModelOperator MixedMinrepModel::weyl_operator_corrupted() const {
    return weyl_impl(true, "w-corrupted");
}

ModelOperator MixedMinrepModel::u_minus_beta(const Scalar& b) const {
    const long bv = canon(b.to_long(), p_);
    const long n = space_->size();
    const long x_count = static_cast<long>(norms_.size());
    std::vector<char> defined(static_cast<size_t>(n), 0);
    std::vector<long> target(static_cast<size_t>(n), 0);
    std::vector<long> exp(static_cast<size_t>(n), 0);
    for (long t = 1; t < p_; ++t) {
        const long tinv = mod_inverse(t, p_);
        for (long code = 0; code < x_count; ++code) {
            const long nx = canon(norms_[static_cast<size_t>(code)].to_long(), p_);
            for (long a = 0; a < p_; ++a) {
                long denom = canon(a * bv - t * t, p_);
                if (denom == 0) continue;
                long i = index_of(t, code, a);
                long t2 = canon(-denom * tinv, p_);            // (t^2 - ab)/t
                long a2 = canon(a * t2 % p_ * tinv, p_);       // a (t^2 - ab)/t^2
                defined[static_cast<size_t>(i)] = 1;
                target[static_cast<size_t>(i)] = index_of(t2, code, a2);
                exp[static_cast<size_t>(i)] = canon(bv * nx % p_ * mod_inverse(denom, p_), p_);
            }
        }
    }
    return ModelOperator::from_table(*space_, p_, "u", std::move(defined), std::move(target),
                                     std::move(exp));
}

ModelOperator MixedMinrepModel::center_character(const Scalar& z) const {
    const long zv = canon(z.to_long(), p_);
    const long n = space_->size();
    std::vector<char> defined(static_cast<size_t>(n), 1);
    std::vector<long> target(static_cast<size_t>(n), 0);
    std::vector<long> exp(static_cast<size_t>(n), 0);
    for (long i = 0; i < n; ++i) {
        target[static_cast<size_t>(i)] = i;
        exp[static_cast<size_t>(i)] = canon(space_->key(i)[0] * zv, p_);
    }
    return ModelOperator::from_table(*space_, p_, "u0", std::move(defined), std::move(target),
                                     std::move(exp));
}

ModelOperator MixedMinrepModel::corner_character(const Scalar& y) const {
    const long yv = canon(y.to_long(), p_);
    const long n = space_->size();
    std::vector<char> defined(static_cast<size_t>(n), 1);
    std::vector<long> target(static_cast<size_t>(n), 0);
    std::vector<long> exp(static_cast<size_t>(n), 0);
    for (long i = 0; i < n; ++i) {
        const auto& key = space_->key(i);
        long t = key[0];
        long a = key[static_cast<size_t>(r_dim_ + 1)];
        target[static_cast<size_t>(i)] = i;
        exp[static_cast<size_t>(i)] = canon(-a * yv % p_ * mod_inverse(t, p_), p_);
    }
    return ModelOperator::from_table(*space_, p_, "u0-b", std::move(defined), std::move(target),
                                     std::move(exp));
}

ModelOperator MixedMinrepModel::negate_t() const {
    const long n = space_->size();
    const long x_count = static_cast<long>(norms_.size());
    std::vector<char> defined(static_cast<size_t>(n), 1);
    std::vector<long> target(static_cast<size_t>(n), 0);
    std::vector<long> exp(static_cast<size_t>(n), 0);
    for (long t = 1; t < p_; ++t)
        for (long code = 0; code < x_count; ++code)
            for (long a = 0; a < p_; ++a)
                target[static_cast<size_t>(index_of(t, code, a))] =
                    index_of(canon(-t, p_), code, a);
    return ModelOperator::from_table(*space_, p_, "t->-t", std::move(defined), std::move(target),
                                     std::move(exp));
}

// ---------------------------------------------------------------------------
// Schrodinger model on the minimal cone

E6SchrodingerModel::E6SchrodingerModel(long p)
    : p_(p), psi_(AdditiveCharacter(GaloisField(p, 1))), spinor_span_(Field::prime(p), 78) {
    const Field& fq = Field::prime(p);
    const Field& Q = Field::rationals();
    auto chain = cubic_chain(Q);
    LieModel over_q = build_s(*chain[3]);  // the dim-9 member: a 78-dim algebra

    auto gradings = find_siegel_grading(over_q);
    if (gradings.empty()) throw std::logic_error("no abelian grading found");
    const SiegelGrading& g0 = gradings.front();

    model_ = std::make_unique<LieModel>(reduce_model(over_q, p));
    h_ = Vec(static_cast<size_t>(model_->dim()), Scalar(fq, 0));
    for (int i = 0; i < model_->dim(); ++i)
        h_[static_cast<size_t>(i)] = Scalar(fq, g0.h[static_cast<size_t>(i)].to_mpq());

    auto gd = grade_by_cocharacter(*model_, h_);
    for (size_t d = 0; d < gd.degrees.size(); ++d) {
        if (gd.degrees[d] == 1) radical_ = gd.pieces[d];
        if (gd.degrees[d] == -1) spinor_ = gd.pieces[d];
    }
    if (radical_.size() != 16 || spinor_.size() != 16)
        throw std::logic_error("unexpected graded piece dimensions");
    for (const auto& v : spinor_) spinor_span_.add(v);

    // root vectors over Q, classified by their degree under the grading
    auto wd = weight_decomposition(over_q, over_q.cartan());
    auto reduce_vec = [&](const Vec& v) {
        Vec w(v.size(), Scalar(fq, 0));
        for (size_t i = 0; i < v.size(); ++i) w[i] = Scalar(fq, v[i].to_mpq());
        return w;
    };
    for (size_t s = 0; s < wd.spaces.size(); ++s) {
        if (static_cast<int>(s) == wd.zero_index) continue;
        for (const auto& v : wd.spaces[s].vectors) {
            Vec hv = over_q.bracket(g0.h, v);
            Vec minus = hv;
            vec_add_scaled(minus, Scalar(Q, 1), v);  // hv + v = 0 iff degree -1
            if (vec_is_zero(hv))
                levi_nilp_.push_back(reduce_vec(v));
            else if (vec_is_zero(minus))
                base_candidates_.push_back(reduce_vec(v));
        }
    }
    if (levi_nilp_.size() != 40 || base_candidates_.empty())
        throw std::logic_error("unexpected root vector layout");
    killing_ = model_->killing_form();
    if (!in_domain(base_candidates_.front()))
        throw std::logic_error("the root vector fails the cone predicate");
}

bool E6SchrodingerModel::in_domain(const Vec& chi) const {
    if (static_cast<int>(chi.size()) != model_->dim()) return false;
    if (vec_is_zero(chi)) return false;
    if (!spinor_span_.contains(chi)) return false;
    ExactMatrix ad = model_->ad(chi);
    return matrix_rank(ad * ad) == 1;
}

Vec E6SchrodingerModel::base_point() const { return base_candidates_.front(); }

Scalar E6SchrodingerModel::pairing(const Vec& u, const Vec& chi) const {
    Vec kchi = killing_.apply(chi);
    return vec_dot(u, kchi);
}

CyclotomicInt E6SchrodingerModel::character_value(const Vec& u, const Vec& chi) const {
    return psi_(pairing(u, chi));
}

ExactMatrix E6SchrodingerModel::levi_exponential(const Vec& n, const Scalar& c) const {
    const Field& f = model_->field();
    ExactMatrix M = model_->ad(n).scaled(c);
    // collect the nonzero powers first so the degree bound is checked honestly
    std::vector<ExactMatrix> powers;
    ExactMatrix acc = M;
    while (!acc.is_zero()) {
        if (static_cast<int>(powers.size()) >= model_->dim())
            throw std::invalid_argument("the parameter is not ad-nilpotent");
        powers.push_back(acc);
        acc = acc * M;
    }
    if (static_cast<long>(powers.size()) + 1 >= p_)
        throw std::invalid_argument("the nilpotency degree must stay below the characteristic");
    ExactMatrix result = ExactMatrix::identity(f, model_->dim());
    Scalar factorial(f, 1);
    for (size_t k = 0; k < powers.size(); ++k) {
        factorial = factorial * Scalar(f, static_cast<long>(k + 1));
        result = result + powers[k].scaled(factorial.inverse());
    }
    return result;
}

ClassicalSchrodingerModel build_classical_schrodinger(const HermitianSpace& V,
                                                      const HermitianSpace& W,
                                                      const Polarization& pol,
                                                      const AdditiveCharacter& psi) {
    return ClassicalSchrodingerModel(V, W, pol, psi);
}

MixedMinrepModel build_minrep_mixed(const CubicNormStructure& R, const AdditiveCharacter& psi) {
    return MixedMinrepModel(R, psi);
}

E6SchrodingerModel build_minrep_schrodinger_e6(long q) { return E6SchrodingerModel(q); }

// ---------------------------------------------------------------------------
// relation suites

bool OperatorRelationReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

namespace {

void push_equal(OperatorRelationReport& report, const std::string& name, const ModelOperator& a,
                const ModelOperator& b) {
    OperatorCheck c;
    c.name = name;
    auto diff = a.first_difference(b);
    c.ok = !diff.has_value();
    if (diff) c.witness = "at the point " + key_string(a.space(), *diff);
    report.checks.push_back(std::move(c));
}

void push_fact(OperatorRelationReport& report, const std::string& name, bool ok,
               const std::string& witness) {
    OperatorCheck c;
    c.name = name;
    c.ok = ok;
    if (!ok) c.witness = witness;
    report.checks.push_back(std::move(c));
}

OperatorRelationReport run_classical(const OperatorSuiteDescriptor& d) {
    OperatorRelationReport report;
    report.suite = d.suite;
    report.q = d.q;
    const Field& f = Field::prime(d.q);
    std::vector<Scalar> unit_diag(3, Scalar(f, 1));
    HermitianSpace V = HermitianSpace::quadratic(f, unit_diag);
    HermitianSpace W = HermitianSpace::symplectic(f, 1);
    Polarization pol = standard_polarization(W);
    AdditiveCharacter psi(GaloisField(d.q, 1));
    ClassicalSchrodingerModel model(V, W, pol, psi, d.max_points);
    const SiegelData& S = model.siegel();
    const FiniteFunctionSpace& space = model.space();

    std::mt19937_64 rng(d.seed);
    auto random_scalar = [&]() { return Scalar(f, static_cast<long>(rng() % d.q)); };
    auto lie_basis = V.isometry_lie_algebra();
    auto random_isometry = [&]() {
        for (;;) {
            DMatrix s(V.coeff(), V.dim(), V.dim());
            for (const auto& b : lie_basis) s = s + b.scaled(random_scalar());
            try {
                return V.cayley_isometry(s);
            } catch (const std::domain_error&) {
            }
        }
    };
    if (S.n_basis().size() != 1) throw std::logic_error("unexpected radical dimension");
    auto n_param = [&](long c) { return S.n_basis()[0].scaled(Scalar(f, c)); };
    auto m_param = [&](long c) {
        return DMatrix::identity(V.coeff(), S.rank()).scaled(Scalar(f, c));
    };

    push_equal(report, "the phase at zero is the identity", model.n_operator(n_param(0)),
               ModelOperator::identity(space, d.q));
    {
        bool ok = true;
        std::string witness;
        for (long c1 = 0; c1 < d.q && ok; ++c1)
            for (long c2 = 0; c2 < d.q && ok; ++c2) {
                auto diff = (model.n_operator(n_param(c1)) * model.n_operator(n_param(c2)))
                                .first_difference(model.n_operator(n_param(c1 + c2)));
                if (diff) {
                    ok = false;
                    witness = "parameters " + std::to_string(c1) + "," + std::to_string(c2) +
                              " at the point " + key_string(space, *diff);
                }
            }
        push_fact(report, "the phases form a one-parameter group", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (long c1 = 1; c1 < d.q && ok; ++c1)
            for (long c2 = 1; c2 < d.q && ok; ++c2) {
                auto diff = (model.m_operator(m_param(c1)) * model.m_operator(m_param(c2)))
                                .first_difference(model.m_operator(m_param(c1 * c2)));
                if (diff) {
                    ok = false;
                    witness = "parameters " + std::to_string(c1) + "," + std::to_string(c2) +
                              " at the point " + key_string(space, *diff);
                }
            }
        push_fact(report, "the Levi translations compose multiplicatively", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            DMatrix g1 = random_isometry();
            DMatrix g2 = random_isometry();
            auto diff = (model.g_operator(g1) * model.g_operator(g2))
                            .first_difference(model.g_operator(g1 * g2));
            if (diff) {
                ok = false;
                witness = "trial " + std::to_string(trial) + " at the point " +
                          key_string(space, *diff);
            }
        }
        push_fact(report, "the isometry action is a homomorphism", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (long cA = 1; cA < d.q && ok; ++cA)
            for (long cX = 0; cX < d.q && ok; ++cX) {
                DMatrix A = m_param(cA);
                DMatrix X = n_param(cX);
                DMatrix Ainv = dmatrix_inverse(A);
                auto lhs = model.m_operator(A) * model.n_operator(X) * model.m_operator(Ainv);
                auto diff = lhs.first_difference(model.n_operator(S.transport(A, X)));
                if (diff) {
                    ok = false;
                    witness = "parameters " + std::to_string(cA) + "," + std::to_string(cX) +
                              " at the point " + key_string(space, *diff);
                }
            }
        push_fact(report, "conjugating a phase transports its moment", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            DMatrix g = random_isometry();
            long cX = static_cast<long>(rng() % d.q);
            auto ng = model.n_operator(n_param(cX)) * model.g_operator(g);
            auto gn = model.g_operator(g) * model.n_operator(n_param(cX));
            auto diff = ng.first_difference(gn);
            if (diff) {
                ok = false;
                witness = "trial " + std::to_string(trial) + " at the point " +
                          key_string(space, *diff);
            }
        }
        push_fact(report, "phases commute with the isometry action", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            DMatrix g = random_isometry();
            long cA = 1 + static_cast<long>(rng() % (d.q - 1));
            auto mg = model.m_operator(m_param(cA)) * model.g_operator(g);
            auto gm = model.g_operator(g) * model.m_operator(m_param(cA));
            auto diff = mg.first_difference(gm);
            if (diff) {
                ok = false;
                witness = "trial " + std::to_string(trial) + " at the point " +
                          key_string(space, *diff);
            }
        }
        push_fact(report, "Levi translations commute with the isometry action", ok, witness);
    }
    {
        // the phase of n(X) only sees the moment of the point, so it is
        // constant along isometry orbits
        bool ok = true;
        std::string witness;
        ModelOperator n1 = model.n_operator(n_param(1));
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            DMatrix g = random_isometry();
            for (long i = 0; i < space.size() && ok; ++i) {
                long j = space.index_of(flatten_hom(g * model.point_map(i)));
                if (j < 0 || n1.phase_exponent(i) != n1.phase_exponent(j)) {
                    ok = false;
                    witness = "trial " + std::to_string(trial) + " at the point " +
                              key_string(space, i);
                }
            }
        }
        push_fact(report, "phases are constant along isometry orbits", ok, witness);
    }
    return report;
}

OperatorRelationReport run_mixed(const OperatorSuiteDescriptor& d) {
    OperatorRelationReport report;
    report.suite = d.suite;
    report.q = d.q;
    const Field& f = Field::prime(d.q);
    auto chain = cubic_chain(f);
    const CubicNormStructure* R = nullptr;
    for (const auto& c : chain)
        if (c->name() == d.cubic) R = c.get();
    if (!R) throw std::invalid_argument("unknown coefficient structure: " + d.cubic);
    AdditiveCharacter psi(GaloisField(d.q, 1));
    MixedMinrepModel model(*R, psi, d.max_points);
    const FiniteFunctionSpace& space = model.space();
    auto sc = [&](long v) { return Scalar(f, v); };

    ModelOperator w = d.corrupt_weyl ? model.weyl_operator_corrupted() : model.weyl_operator();
    ModelOperator w2 = w * w;
    long x_count = 1;
    for (int i = 0; i < model.r_dim(); ++i) x_count *= d.q;
    push_fact(report, "the reflection is defined exactly off the hyperplane",
              w.locus_size() == (d.q - 1) * x_count * (d.q - 1) &&
                  w2.locus_size() == w.locus_size(),
              "locus sizes " + std::to_string(w.locus_size()) + " and " +
                  std::to_string(w2.locus_size()));
    push_equal(report, "the reflection squares to the flip of the first slot", w2,
               model.negate_t());
    push_equal(report, "the reflection has order four", w2 * w2,
               ModelOperator::identity(space, d.q));
    {
        bool ok = true;
        std::string witness;
        std::vector<ModelOperator> u;
        for (long b = 0; b < d.q; ++b) u.push_back(model.u_minus_beta(sc(b)));
        push_equal(report, "the lower unipotent at zero is the identity", u[0],
                   ModelOperator::identity(space, d.q));
        for (long b1 = 0; b1 < d.q && ok; ++b1)
            for (long b2 = 0; b2 < d.q && ok; ++b2) {
                auto diff = (u[static_cast<size_t>(b1)] * u[static_cast<size_t>(b2)])
                                .first_difference(u[static_cast<size_t>((b1 + b2) % d.q)]);
                if (diff) {
                    ok = false;
                    witness = "parameters " + std::to_string(b1) + "," + std::to_string(b2) +
                              " at the point " + key_string(space, *diff);
                }
            }
        push_fact(report, "the lower unipotents form a one-parameter group", ok, witness);

        // on the section (1, x, 0) the operator u_{-beta}(b) fixes the point
        // and multiplies by the character of -b N(x)
        bool sec_ok = true;
        std::string sec_witness;
        for (long b = 0; b < d.q && sec_ok; ++b)
            for (long code = 0; code < x_count && sec_ok; ++code) {
                long idx = code * d.q;  // t = 1, a = 0
                const auto& op = u[static_cast<size_t>(b)];
                long nx = model.norm_at(code).to_long();
                long want = canon(-b * nx, d.q);
                if (!op.defined_at(idx) || op.target(idx) != idx ||
                    op.phase_exponent(idx) != want) {
                    sec_ok = false;
                    sec_witness = "parameter " + std::to_string(b) + " at the point " +
                                  key_string(space, idx);
                }
            }
        push_fact(report, "the base section sees the cubic norm character", sec_ok, sec_witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (long z1 = 0; z1 < d.q && ok; ++z1)
            for (long z2 = 0; z2 < d.q && ok; ++z2) {
                auto diff =
                    (model.center_character(sc(z1)) * model.center_character(sc(z2)))
                        .first_difference(model.center_character(sc(z1 + z2)));
                auto diff2 =
                    (model.corner_character(sc(z1)) * model.corner_character(sc(z2)))
                        .first_difference(model.corner_character(sc(z1 + z2)));
                if (diff || diff2) {
                    ok = false;
                    witness = "parameters " + std::to_string(z1) + "," + std::to_string(z2);
                }
            }
        push_fact(report, "the radical characters are additive", ok, witness);
    }
    {
        ModelOperator winv = w * w2;  // order four on the common locus
        bool ok = true;
        std::string witness;
        for (long z = 0; z < d.q && ok; ++z) {
            auto diff = (w * model.center_character(sc(z)) * winv)
                            .first_difference(model.corner_character(sc(z)));
            auto diff2 = (w * model.corner_character(sc(z)) * winv)
                             .first_difference(model.center_character(sc(-z)));
            if (diff || diff2) {
                ok = false;
                long at = diff ? *diff : *diff2;
                witness = "parameter " + std::to_string(z) + " at the point " +
                          key_string(space, at);
            }
        }
        push_fact(report, "the reflection swaps the two radical characters", ok, witness);
    }
    return report;
}

OperatorRelationReport run_minimal_cone(const OperatorSuiteDescriptor& d) {
    OperatorRelationReport report;
    report.suite = d.suite;
    report.q = d.q;
    E6SchrodingerModel model(d.q);
    const Field& f = Field::prime(d.q);
    std::mt19937_64 rng(d.seed);
    auto random_combination = [&](const std::vector<Vec>& basis) {
        Vec v(static_cast<size_t>(model.model().dim()), Scalar(f, 0));
        for (const auto& b : basis)
            vec_add_scaled(v, Scalar(f, static_cast<long>(rng() % d.q)), b);
        return v;
    };

    push_fact(report, "the graded pieces have the expected dimensions",
              model.radical_basis().size() == 16 && model.spinor_basis().size() == 16 &&
                  model.levi_root_vectors().size() == 40,
              "");
    {
        Vec zero(static_cast<size_t>(model.model().dim()), Scalar(f, 0));
        push_fact(report, "the base point lies on the cone and zero does not",
                  model.in_domain(model.base_point()) && !model.in_domain(zero), "");
    }
    std::vector<Vec> pool{model.base_point()};
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            const auto& nilp = model.levi_root_vectors();
            const Vec& n = nilp[rng() % nilp.size()];
            Scalar c(f, 1 + static_cast<long>(rng() % (d.q - 1)));
            ExactMatrix e = model.levi_exponential(n, c);
            const Vec& chi = pool[rng() % pool.size()];
            Vec moved = e.apply(chi);
            if (!model.in_domain(moved)) {
                ok = false;
                witness = "trial " + std::to_string(trial);
            } else {
                pool.push_back(moved);
            }
        }
        push_fact(report, "Levi flows preserve the cone", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            Vec a1 = random_combination(model.radical_basis());
            Vec a2 = random_combination(model.radical_basis());
            const Vec& chi = pool[rng() % pool.size()];
            Vec sum = a1;
            vec_add_scaled(sum, Scalar(f, 1), a2);
            if (model.character_value(sum, chi) !=
                model.character_value(a1, chi) * model.character_value(a2, chi)) {
                ok = false;
                witness = "trial " + std::to_string(trial);
            }
        }
        push_fact(report, "the radical characters are additive", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        BasisSolver radical_span(f, model.model().dim());
        for (const auto& b : model.radical_basis()) radical_span.add(b);
        for (int trial = 0; trial < d.samples && ok; ++trial) {
            const auto& nilp = model.levi_root_vectors();
            const Vec& n = nilp[rng() % nilp.size()];
            Scalar c(f, 1 + static_cast<long>(rng() % (d.q - 1)));
            ExactMatrix e = model.levi_exponential(n, c);
            ExactMatrix einv = model.levi_exponential(n, -c);
            Vec a = random_combination(model.radical_basis());
            Vec moved_a = e.apply(a);
            if (!radical_span.contains(moved_a)) {
                ok = false;
                witness = "trial " + std::to_string(trial) + ": the flow left the radical";
                break;
            }
            const Vec& chi = pool[rng() % pool.size()];
            if (model.character_value(moved_a, chi) !=
                model.character_value(a, einv.apply(chi))) {
                ok = false;
                witness = "trial " + std::to_string(trial);
            }
        }
        push_fact(report, "conjugation matches the bracket transport", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            Vec chi = random_combination(model.spinor_basis());
            if (model.in_domain(chi)) {
                ok = false;
                witness = "trial " + std::to_string(trial) +
                          ": a random spinor landed on the cone";
            }
        }
        push_fact(report, "generic spinors stay off the cone", ok, witness);
    }
    return report;
}

}  // namespace

OperatorRelationReport verify_operator_relations(const OperatorSuiteDescriptor& d) {
    if (d.suite == "classical") return run_classical(d);
    if (d.suite == "mixed") return run_mixed(d);
    if (d.suite == "e6-schrodinger") return run_minimal_cone(d);
    throw std::invalid_argument("unknown operator suite: " + d.suite);
}

}  // namespace albert
