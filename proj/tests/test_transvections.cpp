#include <random>

#include "doctest.h"
#include "symplift/transvections.hpp"

using namespace symplift;

namespace {

// Transport a tuple of vectors by a random integer symplectic map (a short
// product of transvections), preserving all pairings exactly.
std::vector<IntVec> transport(std::mt19937_64& rng, const StandardRep& rep,
                              std::vector<IntVec> vs, int factors) {
    const int n = 2 * rep.g() + 1;
    for (int t = 0; t < factors; ++t) {
        int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j) j = (j % n) + 1;
        const long e = (rng() & 1) ? 1 : -1;
        const IntMat f = transvection_int(rep.lift_vec(std::min(i, j), std::max(i, j)),
                                          rep.gram(), e);
        for (auto& v : vs) v = mat_vec(f, v);
    }
    return vs;
}

bool small_coords(const std::vector<IntVec>& vs, int64_t bound) {
    for (const auto& v : vs)
        for (int i = 0; i < v.dim(); ++i)
            if (v.at(i) > bound || v.at(i) < -bound) return false;
    return true;
}

IntVec unit(int dim, int i, int64_t s = 1) {
    IntVec v(dim);
    v.set(i, s);
    return v;
}

} // namespace

TEST_CASE("transvection basics: zero vector, mod-2 image, layer powers") {
    StandardRep rep(2, 5);
    CHECK(transvection_int(IntVec(4), rep.gram()).is_identity());
    CHECK(transvection_mod(rep.lift_vec(1, 2), rep.gram(), 1) ==
          rep.rho(Permutation::transposition(5, 1, 2)));
    for (int n = 1; n <= 3; ++n) {
        const RingMat t = transvection_mod(rep.lift_vec(2, 4), rep.gram(), n + 1);
        const RingMat p = t.pow(1l << n);
        // I + 2^n T with T the mod-2 endomorphism
        const RingMat tbar = transvection_mod(rep.lift_vec(2, 4), rep.gram(), 1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const uint32_t expect =
                    ((i == j ? 1u : 0u) + (uint32_t{1} << n) * (tbar.at(i, j) ^ (i == j ? 1u : 0u))) &
                    p.mask();
                REQUIRE(p.at(i, j) == expect);
            }
    }
}

TEST_CASE("transposition lifts: symmetry and mod-2 consistency") {
    StandardRep rep(2, 5);
    LiftTable lifts(rep);
    const Word w1 = lift_transposition(1, 2);
    const Word w2 = lift_transposition(2, 1);
    CHECK(eval_word_mod(w1, lifts, 3) == eval_word_mod(w2, lifts, 3));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 5; ++j)
            CHECK(eval_word_mod(lift_transposition(i, j), lifts, 1) ==
                  rep.rho(Permutation::transposition(5, i, j)));
}

TEST_CASE("braid identity mod 8 holds for all triples at g = 2 and 3") {
    for (int g : {2, 3}) {
        StandardRep rep(g, 2 * g + 1);
        LiftTable lifts(rep);
        const int n = 2 * g + 1;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    REQUIRE(verify_braid_identity_mod8(lifts, i, j, k));
                }
    }
}

TEST_CASE("braid identity mod 8 survives arbitrary lift perturbations") {
    std::mt19937_64 rng(55);
    for (int g : {2, 3}) {
        StandardRep rep(g, 2 * g + 1);
        const int n = 2 * g + 1;
        for (int trial = 0; trial < 50; ++trial) {
            LiftTable lifts(rep);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    IntVec a = rep.lift_vec(i, j);
                    for (int c = 0; c < a.dim(); ++c)
                        a.set(c, a.at(c) + 2 * (static_cast<int64_t>(rng() % 5) - 2));
                    lifts.override_lift(i, j, a);
                }
            int i = 1 + static_cast<int>(rng() % n);
            int j = 1 + static_cast<int>(rng() % n);
            int k = 1 + static_cast<int>(rng() % n);
            if (i == j || j == k || i == k) continue;
            REQUIRE(verify_braid_identity_mod8(lifts, i, j, k));
        }
    }
}

TEST_CASE("braid identity generally breaks when one lift moves off a transvection") {
    StandardRep rep(2, 5);
    const RingMat t12 = transvection_mod(rep.lift_vec(1, 2), rep.gram(), 3);
    const RingMat t13 = transvection_mod(rep.lift_vec(1, 3), rep.gram(), 3);
    bool found_break = false;
    for (int p = 0; p < 16 && !found_break; ++p) {
        RingMat x = RingMat::identity(3, 4);
        x.set(p / 4, p % 4, x.at(p / 4, p % 4) + 4); // an element of the level-4 kernel
        if (!is_symplectic(x, rep.gram())) continue;
        const RingMat a = t12 * x;
        if ((a * t13 * a) != (t13 * a * t13)) found_break = true;
    }
    CHECK(found_break);
}

TEST_CASE("six-transvection identity: base instance and transported samples") {
    std::mt19937_64 rng(61);
    for (int g : {2, 3}) {
        StandardRep rep(g, 2 * g + 1);
        const int dim = 2 * g;
        const IntVec a0 = unit(dim, 0);
        const IntVec b0 = unit(dim, 1, -1);
        const IntVec c0 = unit(dim, 2);
        {
            const TripleCheck r = verify_lemma_a_plus_c(a0, b0, c0, rep.gram());
            REQUIRE(r.failed_precondition.empty());
            REQUIRE(r.ok);
        }
        int done = 0;
        while (done < 100) {
            auto vs = transport(rng, rep, {a0, b0, c0}, 4);
            if (!small_coords(vs, 6)) continue;
            const TripleCheck r = verify_lemma_a_plus_c(vs[0], vs[1], vs[2], rep.gram());
            REQUIRE(r.failed_precondition.empty());
            REQUIRE(r.ok);
            ++done;
        }
    }
}

TEST_CASE("six-transvection identity needs <a,c> = 0") {
    StandardRep rep(2, 5);
    const int dim = 4;
    bool found_failure = false;
    for (int64_t lambda = 1; lambda <= 3 && !found_failure; ++lambda) {
        const IntVec a = unit(dim, 0);
        const IntVec b = unit(dim, 1, -1);
        IntVec c = unit(dim, 2);
        c.set(1, lambda); // now <a,c> = lambda != 0
        REQUIRE(pair_int(a, b, rep.gram()) == -1);
        REQUIRE(pair_int(b, c, rep.gram()) == -1);
        REQUIRE(pair_int(a, c, rep.gram()) == lambda);
        const GramForm& J = rep.gram();
        const IntMat lhs = transvection_int(a, J, 2) * transvection_int(a - b, J, 2) *
                           transvection_int(a - b + c, J, 2) * transvection_int(b, J, 2) *
                           transvection_int(b - c, J, 2) * transvection_int(c, J, 2);
        if (lhs != transvection_int(a + c, J, 2)) found_failure = true;
    }
    CHECK(found_failure);
    // and the checker reports the violated precondition
    IntVec c = unit(dim, 2);
    c.set(1, 1);
    const TripleCheck r = verify_lemma_a_plus_c(unit(dim, 0), unit(dim, 1, -1), c, rep.gram());
    CHECK(r.failed_precondition == "<a,c> != 0");
}

TEST_CASE("three-transvection involution: base instance, samples, order two") {
    std::mt19937_64 rng(71);
    for (int g : {2, 3}) {
        StandardRep rep(g, 2 * g + 1);
        {
            const TripleCheck r =
                verify_lemma_minus1(rep.lift_vec(1, 2), rep.lift_vec(2, 3), rep.gram());
            REQUIRE(r.failed_precondition.empty());
            REQUIRE(r.ok);
        }
        const IntVec a0 = rep.lift_vec(1, 2);
        const IntVec b0 = rep.lift_vec(2, 3);
        int done = 0;
        while (done < 100) {
            auto vs = transport(rng, rep, {a0, b0}, 4);
            if (!small_coords(vs, 6)) continue;
            const TripleCheck r = verify_lemma_minus1(vs[0], vs[1], rep.gram());
            REQUIRE(r.failed_precondition.empty());
            REQUIRE(r.ok);
            // order-2 claim, squared product is the identity
            const IntMat m = transvection_int(vs[0], rep.gram(), 2) *
                             transvection_int(apply_transvection(vs[1], vs[0], rep.gram()),
                                              rep.gram(), 2) *
                             transvection_int(vs[1], rep.gram(), 2);
            REQUIRE((m * m).is_identity());
            ++done;
        }
    }
}

TEST_CASE("mod-4 commutator of disjoint-pair transvections, both parities") {
    for (int g : {2, 3}) {
        StandardRep rep(g, 2 * g + 1);
        const int n = 2 * g + 1;
        const GramForm& J = rep.gram();
        int seen_two = 0, seen_zero = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        if (k == i || k == j || l == i || l == j) continue;
                        const IntVec a = rep.lift_vec(i, j), b = rep.lift_vec(k, l);
                        const int64_t p = pair_int(a, b, J);
                        REQUIRE(p % 2 == 0);
                        const RingMat ta = transvection_mod(a, J, 2);
                        const RingMat tb = transvection_mod(b, J, 2);
                        const RingMat comm = commutator(ta, tb);
                        if (((p % 4) + 4) % 4 == 2) {
                            ++seen_two;
                            const RingMat rhs = transvection_mod(a + b, J, 2, 2) *
                                                transvection_mod(a, J, 2, 2) *
                                                transvection_mod(b, J, 2, 2);
                            REQUIRE(comm == rhs);
                        } else {
                            ++seen_zero;
                            REQUIRE(comm.is_identity());
                        }
                    }
        CHECK(seen_two > 0);
        CHECK(seen_zero > 0);
    }
}

// For <a,b> even, t_b^-2 t_{t_a(b)}^2 lives in the level-4 kernel mod 8; it
// equals t_{a+b}^4 t_a^4 t_b^4 exactly when <a,b> = 2 (mod 4) and collapses
// to the identity when <a,b> = 0 (mod 4).
TEST_CASE("mod-8 square-commutator relation, split by pairing residue mod 4") {
    std::mt19937_64 rng(81);
    StandardRep rep(2, 5);
    const GramForm& J = rep.gram();
    int done_two = 0, done_zero = 0;
    while (done_two < 100 || done_zero < 100) {
        IntVec a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a.set(i, static_cast<int64_t>(rng() % 7) - 3);
            b.set(i, static_cast<int64_t>(rng() % 7) - 3);
        }
        const int64_t q = pair_int(a, b, J);
        if (q % 2 != 0) continue;
        const RingMat lhs = transvection_mod(b, J, 3, -2) *
                            transvection_mod(apply_transvection(a, b, J), J, 3, 2);
        if (((q % 4) + 4) % 4 == 2) {
            const RingMat rhs = transvection_mod(a + b, J, 3, 4) * transvection_mod(a, J, 3, 4) *
                                transvection_mod(b, J, 3, 4);
            REQUIRE(lhs == rhs);
            ++done_two;
        } else {
            REQUIRE(lhs.is_identity());
            ++done_zero;
        }
    }
}

TEST_CASE("word syntax parses and evaluates") {
    StandardRep rep(2, 5);
    LiftTable lifts(rep);
    const Word w = parse_word("t[1,2]^2 * t[1,3]^-2", 5);
    const RingMat expect = transvection_mod(rep.lift_vec(1, 2), rep.gram(), 3, 2) *
                           transvection_mod(rep.lift_vec(1, 3), rep.gram(), 3, -2);
    CHECK(eval_word_mod(w, lifts, 3) == expect);

    const Word ws = parse_word("s[(1 2 3)]", 5);
    const Permutation sigma = Permutation::parse_cycles("(1 2 3)", 5);
    CHECK(eval_word_mod(ws, lifts, 1) == rep.rho(sigma));
    CHECK_THROWS_AS(parse_word("t[1,9]", 5), ParseError);
    CHECK_THROWS_AS(parse_word("q[1,2]", 5), ParseError);

    const Word winv = w.inverse();
    CHECK((eval_word_mod(w, lifts, 3) * eval_word_mod(winv, lifts, 3)).is_identity());
}

TEST_CASE("a word commuted with itself is trivial") {
    StandardRep rep(2, 5);
    LiftTable lifts(rep);
    const RingMat m = eval_word_mod(parse_word("t[1,2]^2 * t[2,3]", 5), lifts, 3);
    CHECK(commutator(m, m).is_identity());
}
