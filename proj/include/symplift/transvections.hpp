#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplift/standard_rep.hpp"
#include "symplift/zmod.hpp"

namespace symplift {

/// t_a : v -> v + <v,a>a.  Exact over the integers; t_a^m = I + m a(Ja)^T.
IntMat transvection_int(const IntVec& a, const GramForm& j, long exp = 1);
RingMat transvection_mod(const IntVec& a, const GramForm& j, int k, long exp = 1);
RingMat transvection_mod(const RingVec& a, const GramForm& j, long exp = 1);

/// Canonical transposition lifts a_{i,j}, with optional per-pair overrides
/// (used to exercise identities on perturbed lift choices).
class LiftTable {
public:
    explicit LiftTable(const StandardRep& rep) : rep_(&rep) {}

    const StandardRep& rep() const { return *rep_; }
    IntVec lift(int i, int j) const;
    void override_lift(int i, int j, IntVec a); // must reduce to v_{{i,j}} mod 2

private:
    const StandardRep* rep_;
    std::map<std::pair<int, int>, IntVec> overrides_;
};

/// Product of transvection-lift powers; factor (i, j, e) stands for t_{a_{i,j}}^e.
struct Word {
    struct Factor {
        int i;
        int j;
        long exp;
    };
    std::vector<Factor> factors;

    Word& append(int i, int j, long exp = 1);
    Word& append(const Word& w);
    Word inverse() const;
    std::string str() const; // CLI word syntax
};

/// Lift of a transposition per the fixed convention: the one-letter word.
Word lift_transposition(int i, int j);

/// Fixed lift of an arbitrary permutation: identity for (1), t_{a_{i,j}} for a
/// transposition, and otherwise the product of star-transposition lifts along
/// the fixed decomposition.
Word sigma_lift_word(const Permutation& sigma);

/// y-lift word with explicit index m: squared transvections out of m, then (i,j).
Word y_lift_word(int g, int m, int i, int j);

RingMat eval_word_mod(const Word& w, const LiftTable& lifts, int k);
IntMat eval_word_int(const Word& w, const LiftTable& lifts);

Word parse_word(const std::string& s, int d); // "t[1,2]^2 * t[1,3]^-2 * s[(1 2 3)]"

RingMat commutator(const RingMat& a, const RingMat& b);

bool verify_braid_identity_mod8(const LiftTable& lifts, int i, int j, int k);

struct TripleCheck {
    bool ok = false;
    std::string failed_precondition; // nonempty when the inputs are rejected
};

/// t_a^2 t_{a-b}^2 t_{a-b+c}^2 t_b^2 t_{b-c}^2 t_c^2 == t_{a+c}^2 over Z,
/// for <a,b> = <b,c> = -1, <a,c> = 0, images mod 2 independent.
TripleCheck verify_lemma_a_plus_c(const IntVec& a, const IntVec& b, const IntVec& c,
                                  const GramForm& j);

/// t_a^2 t_{t_b(a)}^2 t_b^2 is the order-2 map fixing span{a,b}^perp and
/// negating a and b, for <a,b> = +-1.
TripleCheck verify_lemma_minus1(const IntVec& a, const IntVec& b, const GramForm& j);

IntVec apply_transvection(const IntVec& a, const IntVec& v, const GramForm& j); // t_a(v)

} // namespace symplift
