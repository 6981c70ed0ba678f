#include "symplift/layers.hpp"

#include <array>
#include <cassert>

namespace symplift {

int pair_index(int g, int i, int j) {
    const int n = 2 * g + 1;
    if (i > j) std::swap(i, j);
    assert(i >= 1 && j <= n && i != j);
    // lexicographic: (1,2),(1,3),...,(1,n),(2,3),...
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

std::pair<int, int> pair_of_index(int g, int idx) {
    const int n = 2 * g + 1;
    for (int i = 1; i < n; ++i) {
        const int row = n - i;
        if (idx < row) return {i, i + 1 + idx};
        idx -= row;
    }
    throw DomainError("pair index out of range");
}

LayerSpace::LayerSpace(const StandardRep& rep)
    : rep_(&rep), npairs_(2 * rep.g() * rep.g() + rep.g()), lifts_(rep),
      star1_inv_(1, 2 * rep.g()), basis21_inv_(1, 2 * rep.g()) {
    const int g = rep.g();
    const int dim = 2 * g;
    const int n = 2 * g + 1;
    if (npairs_ > 64) throw DomainError("layer coordinates exceed 64 bits (g too large)");

    tmats_.reserve(static_cast<size_t>(npairs_));
    pair_vec_.reserve(static_cast<size_t>(npairs_));
    for (int idx = 0; idx < npairs_; ++idx) {
        auto [i, j] = pair_of_index(g, idx);
        const F2Vec v = rep.vec_of_subset({i, j});
        pair_vec_.push_back(v);
        // T_{{i,j}} = v (Jv)^T mod 2
        RingMat t(1, dim);
        const GramForm& J = rep.gram();
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                int s = 0;
                for (int l = 0; l < dim; ++l)
                    if (v.get(l)) s ^= static_cast<int>(J.at(c, l) & 1);
                t.set(r, c, (v.get(r) && s) ? 1 : 0);
            }
        tmats_.push_back(std::move(t));
    }

    // Echelonize the flattened T-basis once; layer_coords solves against it.
    const int flat = dim * dim;
    assert(flat <= 128);
    for (int idx = 0; idx < npairs_; ++idx) {
        std::array<uint64_t, 2> row = {0, 0};
        for (int p = 0; p < flat; ++p)
            if (tmats_[static_cast<size_t>(idx)].entries()[static_cast<size_t>(p)] & 1)
                row[static_cast<size_t>(p / 64)] |= uint64_t{1} << (p % 64);
        uint64_t combo = uint64_t{1} << idx;
        for (size_t r = 0; r < solver_rows_.size(); ++r) {
            const int piv = solver_pivot_[r];
            if ((row[static_cast<size_t>(piv / 64)] >> (piv % 64)) & 1) {
                row[0] ^= solver_rows_[r][0];
                row[1] ^= solver_rows_[r][1];
                combo ^= solver_combo_[r];
            }
        }
        if (row[0] == 0 && row[1] == 0)
            throw DomainError("layer basis endomorphisms are dependent");
        int piv = -1;
        for (int p = flat - 1; p >= 0; --p)
            if ((row[static_cast<size_t>(p / 64)] >> (p % 64)) & 1) {
                piv = p;
                break;
            }
        solver_rows_.push_back(row);
        solver_combo_.push_back(combo);
        solver_pivot_.push_back(piv);
    }

    // change-of-basis inverses for the two distinguished M-bases
    auto inverse_of_columns = [&](auto col_vec) {
        RingMat m(1, dim);
        for (int c = 0; c < dim; ++c) {
            const F2Vec v = col_vec(c);
            for (int r = 0; r < dim; ++r) m.set(r, c, v.get(r) ? 1 : 0);
        }
        return m.inverse();
    };
    star1_inv_ = inverse_of_columns([&](int c) { return rep.vec_of_subset({1, c + 2}); });
    basis21_inv_ = inverse_of_columns([&](int c) { return rep.vec_of_subset({c + 1, n}); });
}

const RingMat& LayerSpace::t_matrix(int i, int j) const {
    return tmats_[static_cast<size_t>(pair_index(g(), i, j))];
}

RingMat LayerSpace::t_matrix(const SubsetClass& c) const {
    const F2Vec v = rep_->vec_of_subset(c);
    const int dim = 2 * g();
    const GramForm& J = rep_->gram();
    RingMat t(1, dim);
    for (int r = 0; r < dim; ++r)
        for (int col = 0; col < dim; ++col) {
            int s = 0;
            for (int l = 0; l < dim; ++l)
                if (v.get(l)) s ^= static_cast<int>(J.at(col, l) & 1);
            t.set(r, col, (v.get(r) && s) ? 1 : 0);
        }
    return t;
}

SpCoords LayerSpace::solve_coords(const RingMat& x_mod2) const {
    const int dim = 2 * g();
    const int flat = dim * dim;
    std::array<uint64_t, 2> row = {0, 0};
    for (int p = 0; p < flat; ++p)
        if (x_mod2.entries()[static_cast<size_t>(p)] & 1)
            row[static_cast<size_t>(p / 64)] |= uint64_t{1} << (p % 64);
    uint64_t combo = 0;
    for (size_t r = 0; r < solver_rows_.size(); ++r) {
        const int piv = solver_pivot_[r];
        if ((row[static_cast<size_t>(piv / 64)] >> (piv % 64)) & 1) {
            row[0] ^= solver_rows_[r][0];
            row[1] ^= solver_rows_[r][1];
            combo ^= solver_combo_[r];
        }
    }
    if (row[0] != 0 || row[1] != 0)
        throw LayerMembershipError("endomorphism is not in the span of the layer basis");
    return SpCoords{g(), combo};
}

SpCoords LayerSpace::layer_coords(const RingMat& a, int n) const {
    RingMat m = a;
    if (m.k() > n + 1) m = m.reduced(n + 1);
    if (m.k() != n + 1)
        throw LayerMembershipError("matrix modulus too small for requested layer");
    if (!m.congruent_identity(n))
        throw LayerMembershipError("matrix is not congruent to the identity mod 2^n");
    const int dim = m.dim();
    RingMat x(1, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const uint32_t delta = (m.at(i, j) - (i == j ? 1u : 0u)) & m.mask();
            x.set(i, j, (delta >> n) & 1);
        }
    return solve_coords(x);
}

RingMat LayerSpace::from_coords(const SpCoords& x, int n, int k) const {
    if (k <= n) throw DomainError("modulus exponent must exceed layer level");
    const int dim = 2 * g();
    RingMat m = RingMat::identity(k, dim);
    for (int idx = 0; idx < npairs_; ++idx) {
        if (!((x.bits >> idx) & 1)) continue;
        const RingMat& t = tmats_[static_cast<size_t>(idx)];
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (t.at(i, j)) m.set(i, j, m.at(i, j) + (uint32_t{1} << n));
    }
    return m;
}

SpCoords LayerSpace::sd_act(const Permutation& sigma, const SpCoords& x) const {
    const int n = 2 * g() + 1;
    if (sigma.d != rep_->d()) throw DimensionError("permutation degree mismatch");
    uint64_t out = 0;
    for (int idx = 0; idx < npairs_; ++idx) {
        if (!((x.bits >> idx) & 1)) continue;
        auto [i, j] = pair_of_index(g(), idx);
        int si = sigma.apply(i), sj = sigma.apply(j);
        if (si > sj) std::swap(si, sj);
        if (sj <= n) {
            out ^= uint64_t{1} << pair_index(g(), si, sj);
        } else {
            // [m, 2g+2] rewrites to the sum over pairs avoiding m
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (a != si && b != si) out ^= uint64_t{1} << pair_index(g(), a, b);
        }
    }
    return SpCoords{g(), out};
}

bool LayerSpace::n_membership(const SpCoords& x) const {
    const int n = 2 * g() + 1;
    for (int i = 1; i <= n; ++i) {
        int s = 0;
        for (int j = 1; j <= n; ++j)
            if (j != i && ((x.bits >> pair_index(g(), i, j)) & 1)) s ^= 1;
        if (s) return false;
    }
    return true;
}

bool LayerSpace::layer0_membership(const SpCoords& x) const {
    return (std::popcount(x.bits) & 1) == 0;
}

SpCoords LayerSpace::delta_coords(int i, int j, int k) const {
    if (i == j || j == k || i == k) throw DomainError("delta needs distinct indices");
    uint64_t b = 0;
    b ^= uint64_t{1} << pair_index(g(), i, j);
    b ^= uint64_t{1} << pair_index(g(), i, k);
    b ^= uint64_t{1} << pair_index(g(), j, k);
    return SpCoords{g(), b};
}

SubspaceF2 LayerSpace::n_subspace() const {
    SubspaceF2 s(npairs_);
    const int n = 2 * g() + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) s.insert(delta_coords(i, j, k).vec());
    return s;
}

SubspaceF2 LayerSpace::n0_subspace() const {
    SubspaceF2 n = n_subspace();
    SubspaceF2 s(npairs_);
    // N_0 = N intersect zero-parity; deltas have parity 1, so pairwise sums span
    const auto basis = n.basis();
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b) {
            F2Vec v = basis[a] + basis[b];
            if ((v.weight() & 1) == 0) s.insert(v);
        }
    // also any even-parity basis members
    for (const auto& v : basis)
        if ((v.weight() & 1) == 0) s.insert(v);
    return s;
}

SubspaceF2 LayerSpace::full_subspace() const {
    SubspaceF2 s(npairs_);
    for (int idx = 0; idx < npairs_; ++idx) s.insert(F2Vec(npairs_, uint64_t{1} << idx));
    return s;
}

SubspaceF2 LayerSpace::saturate_invariant(const std::vector<SpCoords>& seed, int d) const {
    SubspaceF2 s(npairs_);
    std::vector<F2Vec> frontier;
    for (const auto& x : seed)
        if (s.insert(x.vec())) frontier.push_back(x.vec());
    // star transpositions generate S_d
    std::vector<Permutation> gens;
    for (int m = 2; m <= d; ++m) gens.push_back(Permutation::transposition(d, 1, m));
    while (!frontier.empty()) {
        std::vector<F2Vec> next;
        for (const auto& v : frontier)
            for (const auto& sigma : gens) {
                const SpCoords img = sd_act(sigma, SpCoords{g(), v.bits});
                if (s.insert(img.vec())) next.push_back(img.vec());
            }
        frontier = std::move(next);
    }
    return s;
}

MCoords LayerSpace::m_project(const SpCoords& x) const {
    F2Vec m(2 * g());
    for (int idx = 0; idx < npairs_; ++idx)
        if ((x.bits >> idx) & 1) m += pair_vec_[static_cast<size_t>(idx)];
    return m;
}

MCoords LayerSpace::m_project_class(int i, int j) const {
    return pair_vec_[static_cast<size_t>(pair_index(g(), i, j))];
}

F2Vec LayerSpace::star1_coords(const MCoords& m) const {
    F2Vec v(2 * g());
    for (int r = 0; r < 2 * g(); ++r) {
        int s = 0;
        for (int c = 0; c < 2 * g(); ++c)
            if (m.get(c)) s ^= static_cast<int>(star1_inv_.at(r, c));
        if (s) v.set(r, true);
    }
    return v;
}

F2Vec LayerSpace::basis21_coords(const MCoords& m) const {
    F2Vec v(2 * g());
    for (int r = 0; r < 2 * g(); ++r) {
        int s = 0;
        for (int c = 0; c < 2 * g(); ++c)
            if (m.get(c)) s ^= static_cast<int>(basis21_inv_.at(r, c));
        if (s) v.set(r, true);
    }
    return v;
}

RingMat LayerSpace::layer_rep_of_m(const MCoords& m, int n, int k) const {
    const F2Vec b = basis21_coords(m);
    uint64_t bits = 0;
    for (int i = 1; i <= 2 * g(); ++i)
        if (b.get(i - 1)) bits ^= uint64_t{1} << pair_index(g(), i, 2 * g() + 1);
    return from_coords(SpCoords{g(), bits}, n, k);
}

Word LayerSpace::delta8_word(int i, int j, int k, DeltaReading reading) const {
    if (i == j || j == k || i == k) throw DomainError("delta needs distinct indices");
    const int n = 2 * g() + 1;
    Word w;
    w.append(i, j, 2).append(i, k, 2).append(j, k, 2);
    for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m <= n; ++m) {
            const bool meets = (l == i || l == j || l == k || m == i || m == j || m == k);
            const bool take = (reading == DeltaReading::DisjointPairs) ? !meets : meets;
            if (take) w.append(l, m, 4);
        }
    return w;
}

RingMat LayerSpace::delta8(int i, int j, int k, DeltaReading reading) const {
    return eval_word_mod(delta8_word(i, j, k, reading), lifts_, 3);
}

RingMat LayerSpace::ntilde_section(const SpCoords& x, DeltaReading reading) const {
    if (!n_membership(x)) throw DomainError("section input must lie in N");
    const int n = 2 * g() + 1;
    RingMat acc = RingMat::identity(3, 2 * g());
    uint64_t covered = 0;
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((x.bits >> pair_index(g(), i, j)) & 1) {
                acc = acc * delta8(1, i, j, reading);
                covered ^= delta_coords(1, i, j).bits;
            }
    assert(covered == x.bits);
    return acc;
}

bool LayerSpace::ntilde_membership(const RingMat& a, DeltaReading reading) const {
    RingMat m = a.k() > 3 ? a.reduced(3) : a;
    if (m.k() != 3) throw LayerMembershipError("level-8 membership needs a mod-8 matrix");
    if (!m.congruent_identity(1))
        throw LayerMembershipError("matrix is outside the mod-8 image of the level-2 kernel");
    const SpCoords x4 = layer_coords(m.reduced(2), 1);
    if (!n_membership(x4)) return false;
    const RingMat r = m * ntilde_section(x4, reading).inverse();
    if (!r.congruent_identity(2)) return false;
    return n_membership(layer_coords(r, 2));
}

MTildeCoords LayerSpace::mtilde_project(const RingMat& a, DeltaReading reading) const {
    RingMat m = a.k() > 3 ? a.reduced(3) : a;
    if (m.k() != 3) throw LayerMembershipError("level-8 projection needs a mod-8 matrix");
    if (!m.congruent_identity(1))
        throw LayerMembershipError("matrix is outside the mod-8 image of the level-2 kernel");
    MTildeCoords out;
    out.m2 = m_project(layer_coords(m.reduced(2), 1));
    const F2Vec e = star1_coords(out.m2);
    RingMat p = RingMat::identity(3, 2 * g());
    for (int i = 2; i <= 2 * g() + 1; ++i)
        if (e.get(i - 2))
            p = p * transvection_mod(lifts_.lift(1, i), rep_->gram(), 3, 2);
    const RingMat q = p.inverse() * m;
    const SpCoords xq = layer_coords(q.reduced(2), 1);
    assert(n_membership(xq));
    const RingMat r = q * ntilde_section(xq, reading).inverse();
    if (!r.congruent_identity(2))
        throw LayerMembershipError("normal form residue escapes the level-4 kernel");
    out.m4 = m_project(layer_coords(r, 2));
    return out;
}

} // namespace symplift
