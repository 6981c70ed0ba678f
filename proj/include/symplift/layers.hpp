#pragma once

#include <optional>
#include <vector>

#include "symplift/transvections.hpp"

namespace symplift {

/// Coordinates in F_2^(2g^2+g) over the basis {[i,j]}, 1 <= i < j <= 2g+1.
struct SpCoords {
    int g = 0;
    uint64_t bits = 0;

    int length() const { return 2 * g * g + g; }
    F2Vec vec() const { return F2Vec(length(), bits); }
    bool operator==(const SpCoords& o) const { return g == o.g && bits == o.bits; }
    bool operator!=(const SpCoords& o) const { return !(*this == o); }
};

/// Class in M = layer/N, carried as the chain coordinates of the
/// corresponding V/2V vector (the class of [i,j] maps to v_{{i,j}}).
using MCoords = F2Vec;

/// Normal form for a class of the level-8 quotient of the Gamma(2)-layer by
/// the delta-generated subgroup: star part at level 2, layer part at level 4.
struct MTildeCoords {
    MCoords m2;
    MCoords m4;
    bool operator==(const MTildeCoords& o) const { return m2 == o.m2 && m4 == o.m4; }
    bool operator!=(const MTildeCoords& o) const { return !(*this == o); }
    bool zero() const { return m2.zero() && m4.zero(); }
};

/// Ordering of pairs (i,j), 1 <= i < j <= 2g+1, lexicographic.
int pair_index(int g, int i, int j);
std::pair<int, int> pair_of_index(int g, int idx);

/// Which pairs-product the delta words carry: the pairs disjoint from
/// {i,j,k} (the reading every downstream computation relies on), or the
/// pairs meeting it (kept as a negative-control mutation).
enum class DeltaReading { DisjointPairs, MeetingPairs };

/// Layer-space machinery for a fixed standard representation.
class LayerSpace {
public:
    explicit LayerSpace(const StandardRep& rep);

    const StandardRep& rep() const { return *rep_; }
    int g() const { return rep_->g(); }
    int npairs() const { return npairs_; }

    /// Mod-2 endomorphism T_{{i,j}} = t_{v_{i,j}} - 1.
    const RingMat& t_matrix(int i, int j) const;
    /// T_I for an arbitrary even subset.
    RingMat t_matrix(const SubsetClass& c) const;

    /// Coordinates of A in the layer at level n: A must be I (mod 2^n),
    /// given mod 2^(n+1); returns the coordinates of (A - I)/2^n.
    SpCoords layer_coords(const RingMat& a, int n) const;
    /// Reconstruction: I + 2^n sum of basis endomorphisms, at modulus 2^k.
    RingMat from_coords(const SpCoords& x, int n, int k) const;

    SpCoords sd_act(const Permutation& sigma, const SpCoords& x) const;

    bool n_membership(const SpCoords& x) const;      // all row sums vanish
    bool layer0_membership(const SpCoords& x) const; // total parity vanishes

    SpCoords delta_coords(int i, int j, int k) const;
    SubspaceF2 n_subspace() const;      // span of the deltas
    SubspaceF2 n0_subspace() const;     // N intersected with the zero-parity hyperplane
    SubspaceF2 full_subspace() const;

    /// Smallest subspace containing the seed and stable under S_d.
    SubspaceF2 saturate_invariant(const std::vector<SpCoords>& seed, int d) const;

    MCoords m_project(const SpCoords& x) const;
    MCoords m_project_class(int i, int j) const; // class of [i,j]

    /// Coordinates of m over the star basis {v_{1,i}}_{2<=i<=2g+1}.
    F2Vec star1_coords(const MCoords& m) const;
    /// Coordinates of m over the basis {v_{i,2g+1}}_{1<=i<=2g}.
    F2Vec basis21_coords(const MCoords& m) const;

    /// Layer element over a given M-class: I + 2^n sum b_i T_{i,2g+1} (mod 2^k).
    RingMat layer_rep_of_m(const MCoords& m, int n, int k) const;

    // --- level-8 objects ---
    Word delta8_word(int i, int j, int k,
                     DeltaReading reading = DeltaReading::DisjointPairs) const;
    RingMat delta8(int i, int j, int k,
                   DeltaReading reading = DeltaReading::DisjointPairs) const; // mod 8

    /// Canonical product of delta_{1,i,j} words realizing coords x in N.
    RingMat ntilde_section(const SpCoords& x,
                           DeltaReading reading = DeltaReading::DisjointPairs) const;

    bool ntilde_membership(const RingMat& a,
                           DeltaReading reading = DeltaReading::DisjointPairs) const;
    MTildeCoords mtilde_project(const RingMat& a,
                                DeltaReading reading = DeltaReading::DisjointPairs) const;

    const LiftTable& lifts() const { return lifts_; }

private:
    SpCoords solve_coords(const RingMat& x_mod2) const; // throws LayerMembershipError

    const StandardRep* rep_;
    int npairs_;
    LiftTable lifts_;
    std::vector<RingMat> tmats_;            // per pair index
    std::vector<std::array<uint64_t, 2>> solver_rows_; // echelon of flattened T's
    std::vector<uint64_t> solver_combo_;    // matching coordinate combinations
    std::vector<int> solver_pivot_;
    std::vector<F2Vec> pair_vec_;           // chain coords of v_{{i,j}} per pair
    RingMat star1_inv_;                     // mod-2 inverse for star1_coords
    RingMat basis21_inv_;                   // mod-2 inverse for basis21_coords
};

} // namespace symplift
