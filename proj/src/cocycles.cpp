#include "symplift/cocycles.hpp"

#include <cassert>
#include <sstream>

namespace symplift {

bool pair_f2(const StandardRep& rep, const F2Vec& u, const F2Vec& v) {
    int s = 0;
    for (int a = 0; a < rep.dim(); ++a) {
        if (!u.get(a)) continue;
        for (int b = 0; b < rep.dim(); ++b)
            if (v.get(b)) s ^= static_cast<int>(rep.gram().at(a, b) & 1);
    }
    return s;
}

namespace {

F2Vec star_sum_vec(const StandardRep& rep) {
    // v_{{2,...,2g+1}}
    std::vector<int> all;
    for (int i = 2; i <= 2 * rep.g() + 1; ++i) all.push_back(i);
    return rep.vec_of_subset(all);
}

F2Vec star_row_sum(const StandardRep& rep) {
    // sum over k of v_{{1,k}}, 2 <= k <= 2g+1
    F2Vec s(rep.dim());
    for (int k = 2; k <= 2 * rep.g() + 1; ++k) s += rep.vec_of_subset({1, k});
    return s;
}

} // namespace

CocycleL4::CocycleL4(const LayerSpace& layers, F2Vec c) : layers_(&layers), c_(c) {
    const StandardRep& rep = layers.rep();
    if (rep.d() % 2 == 0)
        throw DomainError("no quasi-cocycle exists in even degree (the star-value constraint "
                          "system is infeasible)");
    if (c.n != rep.dim()) throw DimensionError("type vector has wrong length");
    const F2Vec base = star_sum_vec(rep);
    for (int j = 2; j <= rep.d(); ++j) {
        F2Vec v = base;
        if (c.get(j - 2)) v += rep.vec_of_subset({1, j});
        star_.push_back(v);
    }
}

CocycleL4::CocycleL4(const LayerSpace& layers, std::vector<MCoords> star_values)
    : layers_(&layers), star_(std::move(star_values)) {
    if (static_cast<int>(star_.size()) != layers.rep().d() - 1)
        throw DimensionError("need one star value per transposition (1,j)");
}

const F2Vec& CocycleL4::c() const {
    if (!c_) throw DomainError("cocycle is not in classified form");
    return *c_;
}

MCoords CocycleL4::star_value(int j) const {
    if (j < 2 || j > layers_->rep().d()) throw DomainError("star index out of range");
    return star_[static_cast<size_t>(j - 2)];
}

RingMat CocycleL4::sigma_lift(const Permutation& sigma) const {
    auto it = lift_cache_.find(sigma.img);
    if (it != lift_cache_.end()) return it->second;
    RingMat m = eval_word_mod(sigma_lift_word(sigma), layers_->lifts(), 2);
    lift_cache_.emplace(sigma.img, m);
    return m;
}

MCoords CocycleL4::defect(const Permutation& s, const Permutation& t) const {
    const RingMat d = sigma_lift(s) * sigma_lift(t) * sigma_lift(s.compose(t)).inverse();
    return layers_->m_project(layers_->layer_coords(d, 1));
}

MCoords CocycleL4::value(const Permutation& sigma) const {
    const StandardRep& rep = layers_->rep();
    if (sigma.d != rep.d()) throw DimensionError("permutation degree mismatch");
    if (sigma.is_identity()) return F2Vec(rep.dim());
    auto it = value_cache_.find(sigma.img);
    if (it != value_cache_.end()) return it->second;
    const std::vector<int> stars = sigma.star_decomposition();
    Permutation part = Permutation::transposition(rep.d(), 1, stars[0]);
    MCoords acc = star_value(stars[0]);
    for (size_t t = 1; t < stars.size(); ++t) {
        const Permutation tau = Permutation::transposition(rep.d(), 1, stars[t]);
        // phi(part*tau) = phi(part) + part.phi(tau) + defect(part, tau)
        acc = acc + rep.mat_vec_f2(rep.rho(part), star_value(stars[t])) + defect(part, tau);
        part = part.compose(tau);
    }
    assert(part == sigma);
    value_cache_.emplace(sigma.img, acc);
    return acc;
}

bool CocycleL4::condition_holds(const Permutation& s, const Permutation& t) const {
    const MCoords lhs = value(s.compose(t));
    const MCoords rhs =
        value(s) + layers_->rep().mat_vec_f2(layers_->rep().rho(s), value(t)) + defect(s, t);
    return lhs == rhs;
}

std::string CocycleL4::serialize() const {
    return serialize_cocycle_label(4, layers_->g(), c(), nullptr);
}

CocycleL4 build_phi_c(const LayerSpace& layers, const F2Vec& c) { return CocycleL4(layers, c); }

ConditionReport check_conditions_l4(const CocycleL4& phi) {
    const StandardRep& rep = phi.layers().rep();
    ConditionReport r;
    const int d = rep.d();
    for (int i = 1; i <= d && r.ok; ++i)
        for (int j = i + 1; j <= d && r.ok; ++j) {
            const Permutation t = Permutation::transposition(d, i, j);
            const MCoords v = phi.value(t);
            if (!pair_f2(rep, v, rep.vec_of_subset({i, j}))) {
                r.ok = false;
                r.counterexample = "condition (i) fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")";
                break;
            }
            for (int k = 1; k <= d && r.ok; ++k)
                for (int l = k + 1; l <= d; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    if (pair_f2(rep, v, rep.vec_of_subset({k, l}))) {
                        r.ok = false;
                        r.counterexample = "condition (ii) fails at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") against {" + std::to_string(k) +
                                           "," + std::to_string(l) + "}";
                        break;
                    }
                }
        }
    return r;
}

FeasibilityReport cocycle_constraints_feasible(const StandardRep& rep, int i, int j) {
    // rows: functionals x -> <x, v> as (Jv)^T over F_2; rhs 1 for v_{i,j}, 0 else
    const int dim = rep.dim();
    std::vector<uint64_t> rows; // low dim bits: coefficients; bit dim: rhs
    auto functional = [&](const F2Vec& v, bool rhs) {
        uint64_t r = 0;
        for (int a = 0; a < dim; ++a) {
            int s = 0;
            for (int b = 0; b < dim; ++b)
                if (v.get(b)) s ^= static_cast<int>(rep.gram().at(a, b) & 1);
            if (s) r |= uint64_t{1} << a;
        }
        if (rhs) r |= uint64_t{1} << dim;
        return r;
    };
    rows.push_back(functional(rep.vec_of_subset({i, j}), true));
    for (int k = 1; k <= rep.d(); ++k)
        for (int l = k + 1; l <= rep.d(); ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            rows.push_back(functional(rep.vec_of_subset({k, l}), false));
        }
    // the system is consistent iff adjoining the rhs column keeps the rank
    FeasibilityReport rep_out;
    {
        SubspaceF2 s(dim);
        for (uint64_t r : rows) s.insert(F2Vec(dim, r & ((uint64_t{1} << dim) - 1)));
        rep_out.rank = s.dim();
    }
    {
        SubspaceF2 s(dim + 1);
        for (uint64_t r : rows) s.insert(F2Vec(dim + 1, r));
        rep_out.augmented_rank = s.dim();
    }
    rep_out.feasible = rep_out.rank == rep_out.augmented_rank;
    return rep_out;
}

std::vector<CocycleL4> enumerate_l4(const LayerSpace& layers) {
    const int dim = layers.rep().dim();
    std::vector<CocycleL4> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << dim); ++bits)
        out.emplace_back(layers, F2Vec(dim, bits));
    return out;
}

int m_index(const CocycleL4& phi, int i, int j) {
    const StandardRep& rep = phi.layers().rep();
    const MCoords v = phi.value(Permutation::transposition(rep.d(), i, j));
    int found = 0, m = 0;
    for (int cand : {i, j}) {
        std::vector<int> subset;
        for (int t = 1; t <= 2 * rep.g() + 1; ++t)
            if (t != cand) subset.push_back(t);
        if (rep.vec_of_subset(subset) == v) {
            ++found;
            m = cand;
        }
    }
    if (found != 1)
        throw DomainError("cocycle value at a transposition does not single out one of its "
                          "indices");
    return m;
}

Word y_lift(const CocycleL4& phi, int i, int j) {
    return y_lift_word(phi.layers().g(), m_index(phi, i, j), i, j);
}

CocycleL8::CocycleL8(const LayerSpace& layers, F2Vec c, F2Vec dvec)
    : layers_(&layers), c_(c), d_(dvec), base_(layers, c) {
    const StandardRep& rep = layers.rep();
    if (dvec.n != rep.dim()) throw DimensionError("dvec has wrong length");
    const bool g_odd = rep.g() & 1;
    const F2Vec constant = star_row_sum(rep);
    for (int j = 2; j <= rep.d(); ++j) {
        F2Vec v(rep.dim());
        if (g_odd) v += constant;
        if (dvec.get(j - 2)) v += rep.vec_of_subset({1, j});
        star_.push_back(v);
    }
}

MCoords CocycleL8::star_value(int j) const {
    if (j < 2 || j > layers_->rep().d()) throw DomainError("star index out of range");
    return star_[static_cast<size_t>(j - 2)];
}

RingMat CocycleL8::y_matrix(const Permutation& sigma) const {
    auto it = y_cache_.find(sigma.img);
    if (it != y_cache_.end()) return it->second;
    const StandardRep& rep = layers_->rep();
    RingMat m = RingMat::identity(3, rep.dim());
    int i, j;
    if (sigma.is_identity()) {
        // 1
    } else if (sigma.is_transposition(&i, &j)) {
        m = eval_word_mod(y_lift(base_, i, j), layers_->lifts(), 3);
    } else {
        for (int s : sigma.star_decomposition())
            m = m * y_matrix(Permutation::transposition(rep.d(), 1, s));
    }
    y_cache_.emplace(sigma.img, m);
    return m;
}

MCoords CocycleL8::defect(const Permutation& s, const Permutation& t) const {
    const RingMat d = y_matrix(s) * y_matrix(t) * y_matrix(s.compose(t)).inverse();
    const MTildeCoords nf = layers_->mtilde_project(d);
    if (!nf.m2.zero())
        throw DomainError("level-8 defect term escapes the level-4 part of the quotient");
    return nf.m4;
}

MCoords CocycleL8::value(const Permutation& sigma) const {
    const StandardRep& rep = layers_->rep();
    if (sigma.d != rep.d()) throw DimensionError("permutation degree mismatch");
    if (sigma.is_identity()) return F2Vec(rep.dim());
    auto it = value_cache_.find(sigma.img);
    if (it != value_cache_.end()) return it->second;
    const std::vector<int> stars = sigma.star_decomposition();
    Permutation part = Permutation::transposition(rep.d(), 1, stars[0]);
    MCoords acc = star_value(stars[0]);
    for (size_t t = 1; t < stars.size(); ++t) {
        const Permutation tau = Permutation::transposition(rep.d(), 1, stars[t]);
        acc = acc + rep.mat_vec_f2(rep.rho(part), star_value(stars[t])) + defect(part, tau);
        part = part.compose(tau);
    }
    value_cache_.emplace(sigma.img, acc);
    return acc;
}

bool CocycleL8::condition_holds(const Permutation& s, const Permutation& t) const {
    const MCoords lhs = value(s.compose(t));
    const MCoords rhs =
        value(s) + layers_->rep().mat_vec_f2(layers_->rep().rho(s), value(t)) + defect(s, t);
    return lhs == rhs;
}

std::string CocycleL8::serialize() const {
    return serialize_cocycle_label(8, layers_->g(), c_, &d_);
}

CocycleL8 build_phi_cd(const LayerSpace& layers, const F2Vec& c, const F2Vec& dvec) {
    return CocycleL8(layers, c, dvec);
}

ConditionReport check_conditions_l8(const CocycleL8& phi) {
    const StandardRep& rep = phi.layers().rep();
    ConditionReport r;
    const int d = rep.d();
    const bool g_parity = rep.g() & 1;
    for (int i = 1; i <= d && r.ok; ++i)
        for (int j = i + 1; j <= d && r.ok; ++j) {
            const Permutation t = Permutation::transposition(d, i, j);
            const MCoords v = phi.value(t);
            if (pair_f2(rep, v, rep.vec_of_subset({i, j})) != g_parity) {
                r.ok = false;
                r.counterexample = "level-8 condition (i) fails at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")";
                break;
            }
            for (int k = 1; k <= d && r.ok; ++k)
                for (int l = k + 1; l <= d; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    if (pair_f2(rep, v, rep.vec_of_subset({k, l}))) {
                        r.ok = false;
                        r.counterexample = "level-8 condition (ii) fails at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")";
                        break;
                    }
                }
        }
    return r;
}

std::vector<CocycleL8> enumerate_l8_type(const LayerSpace& layers, const F2Vec& c) {
    const int dim = layers.rep().dim();
    std::vector<CocycleL8> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << dim); ++bits)
        out.emplace_back(layers, c, F2Vec(dim, bits));
    return out;
}

std::vector<RingMat> subgroup_generators(const CocycleL4& phi) {
    const LayerSpace& ls = phi.layers();
    std::vector<RingMat> gens;
    for (int j = 2; j <= ls.rep().d(); ++j) {
        const RingMat rep_m = ls.layer_rep_of_m(phi.star_value(j), 1, 2);
        gens.push_back(rep_m * transvection_mod(ls.lifts().lift(1, j), ls.rep().gram(), 2));
    }
    return gens;
}

std::vector<RingMat> subgroup_generators(const CocycleL8& phi) {
    const LayerSpace& ls = phi.layers();
    std::vector<RingMat> gens;
    for (int j = 2; j <= ls.rep().d(); ++j) {
        const RingMat rep_m = ls.layer_rep_of_m(phi.star_value(j), 2, 3);
        gens.push_back(rep_m * phi.y_matrix(Permutation::transposition(ls.rep().d(), 1, j)));
    }
    return gens;
}

F2Vec recover_c(const LayerSpace& layers, const std::vector<RingMat>& gens) {
    const StandardRep& rep = layers.rep();
    const int d = rep.d();
    if (static_cast<int>(gens.size()) != d - 1)
        throw LabelRecoveryError("expected one generator per star transposition");
    F2Vec c(rep.dim());
    const F2Vec base = star_sum_vec(rep);
    for (int j = 2; j <= d; ++j) {
        RingMat u = gens[static_cast<size_t>(j - 2)];
        if (u.k() > 2) u = u.reduced(2);
        if (u.reduced(1) != rep.rho(Permutation::transposition(d, 1, j)))
            throw LabelRecoveryError("generator does not reduce to the expected transposition");
        const RingMat t = transvection_mod(layers.lifts().lift(1, j), rep.gram(), 2);
        const MCoords phi = layers.m_project(layers.layer_coords(u * t.inverse(), 1));
        const F2Vec diff = phi + base;
        if (diff.zero()) {
            // c_j = 0
        } else if (diff == rep.vec_of_subset({1, j})) {
            c.set(j - 2, true);
        } else {
            throw LabelRecoveryError("generator cocycle value is not of classified shape");
        }
    }
    return c;
}

F2Vec recover_d(const LayerSpace& layers, const F2Vec& c, const std::vector<RingMat>& gens) {
    const StandardRep& rep = layers.rep();
    const int d = rep.d();
    if (static_cast<int>(gens.size()) != d - 1)
        throw LabelRecoveryError("expected one generator per star transposition");
    CocycleL8 phi0(layers, c, F2Vec(rep.dim()));
    F2Vec dv(rep.dim());
    const bool g_odd = rep.g() & 1;
    F2Vec constant(rep.dim());
    if (g_odd) constant = star_row_sum(rep);
    for (int j = 2; j <= d; ++j) {
        const RingMat& u = gens[static_cast<size_t>(j - 2)];
        if (u.k() != 3) throw LabelRecoveryError("level-8 recovery needs mod-8 generators");
        const RingMat y = phi0.y_matrix(Permutation::transposition(d, 1, j));
        const MTildeCoords nf = layers.mtilde_project(u * y.inverse());
        if (!nf.m2.zero())
            throw LabelRecoveryError("generator is not aligned with the type-c lifts");
        const F2Vec diff = nf.m4 + constant;
        if (diff.zero()) {
            // d_j = 0
        } else if (diff == rep.vec_of_subset({1, j})) {
            dv.set(j - 2, true);
        } else {
            throw LabelRecoveryError("level-8 generator value is not of classified shape");
        }
    }
    return dv;
}

std::string serialize_cocycle_label(int level, int g, const F2Vec& c, const F2Vec* dvec) {
    std::ostringstream os;
    os << "level=" << level << " g=" << g << " c=" << c.str();
    if (dvec) os << " d=" << dvec->str();
    return os.str();
}

CocycleLabel parse_cocycle_label(const std::string& s) {
    CocycleLabel out;
    std::istringstream is(s);
    std::string tok;
    out.level = 0;
    out.g = 0;
    std::string cbits, dbits;
    while (is >> tok) {
        if (tok.rfind("level=", 0) == 0)
            out.level = std::stoi(tok.substr(6));
        else if (tok.rfind("g=", 0) == 0)
            out.g = std::stoi(tok.substr(2));
        else if (tok.rfind("c=", 0) == 0)
            cbits = tok.substr(2);
        else if (tok.rfind("d=", 0) == 0)
            dbits = tok.substr(2);
        else
            throw ParseError("bad cocycle label token: " + tok);
    }
    if ((out.level != 4 && out.level != 8) || out.g < 1) throw ParseError("bad cocycle label: " + s);
    auto bits_of = [](const std::string& b) {
        F2Vec v(static_cast<int>(b.size()));
        for (size_t t = 0; t < b.size(); ++t) {
            if (b[t] != '0' && b[t] != '1') throw ParseError("bad bit string");
            if (b[t] == '1') v.set(static_cast<int>(t), true);
        }
        return v;
    };
    out.c = bits_of(cbits);
    if (static_cast<int>(cbits.size()) != 2 * out.g) throw ParseError("c bit length mismatch");
    if (out.level == 8) {
        if (static_cast<int>(dbits.size()) != 2 * out.g) throw ParseError("d bit length mismatch");
        out.dvec = bits_of(dbits);
    }
    return out;
}

} // namespace symplift
