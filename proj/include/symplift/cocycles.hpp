#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplift/layers.hpp"

namespace symplift {

/// Intersection-parity pairing of two V/2V vectors in chain coordinates.
bool pair_f2(const StandardRep& rep, const F2Vec& u, const F2Vec& v);

/// Level-4 quasi-cocycle S_d -> M, materialized lazily from its values on
/// the star transpositions.
class CocycleL4 {
public:
    /// Classified form phi_c : (1,j) -> c_j v_{1,j} + v_{{2..2g+1}}.  Only
    /// odd degree admits one; even degree raises DomainError.
    CocycleL4(const LayerSpace& layers, F2Vec c);
    /// Arbitrary star-value assignment (oracles and negative controls).
    CocycleL4(const LayerSpace& layers, std::vector<MCoords> star_values);

    const LayerSpace& layers() const { return *layers_; }
    bool classified() const { return c_.has_value(); }
    const F2Vec& c() const;

    MCoords star_value(int j) const; // value at (1,j), 2 <= j <= d
    MCoords value(const Permutation& sigma) const;

    /// Twisted coboundary condition on one pair.
    bool condition_holds(const Permutation& s, const Permutation& t) const;

    RingMat sigma_lift(const Permutation& sigma) const; // fixed lift, mod 4

    std::string serialize() const;

private:
    MCoords defect(const Permutation& s, const Permutation& t) const;

    const LayerSpace* layers_;
    std::optional<F2Vec> c_;
    std::vector<MCoords> star_; // index j-2
    mutable std::map<std::vector<int>, MCoords> value_cache_;
    mutable std::map<std::vector<int>, RingMat> lift_cache_;
};

CocycleL4 build_phi_c(const LayerSpace& layers, const F2Vec& c);

struct ConditionReport {
    bool ok = true;
    std::string counterexample;
};

/// Conditions (i) <phi((i,j)), v_{i,j}> = 1 and (ii) <phi((i,j)), v_{k,l}> = 0.
ConditionReport check_conditions_l4(const CocycleL4& phi);

/// Feasibility of the star-value constraint system at one transposition;
/// infeasible exactly in even degree.
struct FeasibilityReport {
    bool feasible = false;
    int rank = 0;
    int augmented_rank = 0;
};
FeasibilityReport cocycle_constraints_feasible(const StandardRep& rep, int i, int j);

std::vector<CocycleL4> enumerate_l4(const LayerSpace& layers);

/// Index m_{c,i,j} in {i,j}: the element left out of the subset carrying
/// phi_c((i,j)).
int m_index(const CocycleL4& phi, int i, int j);

/// y_{c,(i,j)}: squared lifts out of m_{c,i,j}, then the (i,j) lift.
Word y_lift(const CocycleL4& phi, int i, int j);

/// Level-8 quasi-cocycle of type c, values in M at level 4.
class CocycleL8 {
public:
    CocycleL8(const LayerSpace& layers, F2Vec c, F2Vec dvec);

    const LayerSpace& layers() const { return *layers_; }
    const F2Vec& c() const { return c_; }
    const F2Vec& dvec() const { return d_; }
    const CocycleL4& base() const { return base_; }

    MCoords star_value(int j) const;
    MCoords value(const Permutation& sigma) const;
    bool condition_holds(const Permutation& s, const Permutation& t) const;

    RingMat y_matrix(const Permutation& sigma) const; // fixed y-lift, mod 8

    std::string serialize() const;

private:
    MCoords defect(const Permutation& s, const Permutation& t) const;

    const LayerSpace* layers_;
    F2Vec c_;
    F2Vec d_;
    CocycleL4 base_;
    std::vector<MCoords> star_;
    mutable std::map<std::vector<int>, MCoords> value_cache_;
    mutable std::map<std::vector<int>, RingMat> y_cache_;
};

CocycleL8 build_phi_cd(const LayerSpace& layers, const F2Vec& c, const F2Vec& dvec);

/// Conditions (i) <phi((i,j)), v_{i,j}> = g and (ii) = 0 at level 8.
ConditionReport check_conditions_l8(const CocycleL8& phi);

std::vector<CocycleL8> enumerate_l8_type(const LayerSpace& layers, const F2Vec& c);

/// One generator per star transposition: a layer representative of the
/// cocycle value times the fixed lift.
std::vector<RingMat> subgroup_generators(const CocycleL4& phi);
std::vector<RingMat> subgroup_generators(const CocycleL8& phi);

/// Label recovery from a generator tuple indexed by the star transpositions.
F2Vec recover_c(const LayerSpace& layers, const std::vector<RingMat>& gens);
F2Vec recover_d(const LayerSpace& layers, const F2Vec& c, const std::vector<RingMat>& gens);

std::string serialize_cocycle_label(int level, int g, const F2Vec& c, const F2Vec* dvec);
struct CocycleLabel {
    int level;
    int g;
    F2Vec c;
    std::optional<F2Vec> dvec;
};
CocycleLabel parse_cocycle_label(const std::string& s);

} // namespace symplift
