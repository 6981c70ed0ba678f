#pragma once

#include <string>
#include <vector>

#include "symplift/f2.hpp"
#include "symplift/zmod.hpp"

namespace symplift {

/// Permutation of {1..d}, stored as the image table.
struct Permutation {
    int d = 0;
    std::vector<int> img; // img[i-1] = sigma(i), values in 1..d

    static Permutation identity(int d);
    static Permutation transposition(int d, int i, int j);
    static Permutation parse_cycles(const std::string& s, int d); // e.g. "(1 2)(3 4)"

    int apply(int i) const { return img[static_cast<size_t>(i - 1)]; }
    Permutation compose(const Permutation& rhs) const; // (this o rhs)(i) = this(rhs(i))
    Permutation inverse() const;
    bool is_identity() const;
    bool is_transposition(int* i = nullptr, int* j = nullptr) const;
    std::string cycle_string() const;
    /// Fixed decomposition into star transpositions (1,j), left-to-right product.
    std::vector<int> star_decomposition() const;

    bool operator==(const Permutation& o) const { return d == o.d && img == o.img; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

/// Even-cardinality subset of {1..d} up to complement when d is even,
/// stored as the canonical representative (the one not containing d).
struct SubsetClass {
    int d = 0;
    std::vector<int> members; // sorted, canonical

    bool operator==(const SubsetClass& o) const { return d == o.d && members == o.members; }
    bool operator!=(const SubsetClass& o) const { return !(*this == o); }
};

std::vector<int> parse_subset(const std::string& s); // comma list "1,2"

/// The degree-d standard representation of S_d over F_2 on a 2g-dimensional
/// space, coordinatized by the chain basis {v_{i,i+1}}, 1 <= i <= 2g.
class StandardRep {
public:
    StandardRep(int g, int d); // d must be 2g+1 or 2g+2

    int g() const { return g_; }
    int d() const { return d_; }
    int dim() const { return 2 * g_; }
    const GramForm& gram() const { return j_; }

    SubsetClass subset_class(std::vector<int> members) const;
    F2Vec vec_of_subset(const SubsetClass& c) const;
    F2Vec vec_of_subset(std::vector<int> members) const;
    SubsetClass subset_of_vec(const F2Vec& v) const;
    int subset_pairing(const SubsetClass& a, const SubsetClass& b) const;

    /// Matrix of sigma on V/2V in the chain basis (k = 1).
    RingMat rho(const Permutation& sigma) const;

    /// Canonical integer lift a_{i,j} of v_{{i,j}}; defined for all pairs
    /// 1 <= i != j <= d.  For i < j <= 2g+1 this is e_i + ... + e_{j-1}.
    IntVec lift_vec(int i, int j) const;
    /// Canonical integer lift of an arbitrary class.
    IntVec lift_vec(const SubsetClass& c) const;

    F2Vec mat_vec_f2(const RingMat& m, const F2Vec& v) const;

private:
    int g_;
    int d_;
    GramForm j_;
};

/// Integer chain Gram form for genus g (superdiagonal +1, subdiagonal -1).
GramForm chain_gram(int g);

/// Order of the image of S_d in Sp(V/2V), computed by closing {rho((1,j))}.
long image_order(int d, long cap = 2'000'000);

} // namespace symplift
