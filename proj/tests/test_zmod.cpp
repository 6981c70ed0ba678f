#include <random>

#include "doctest.h"
#include "symplift/standard_rep.hpp"
#include "symplift/transvections.hpp"
#include "symplift/zmod.hpp"

using namespace symplift;

namespace {

RingMat random_mat(std::mt19937_64& rng, int k, int dim) {
    RingMat m(k, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.set(i, j, static_cast<uint32_t>(rng()));
    return m;
}

// Independent oracle: multiply as plain 64-bit integers, reduce at the end.
RingMat bigint_mul_oracle(const RingMat& a, const RingMat& b) {
    const int n = a.dim();
    RingMat c(a.k(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            uint64_t s = 0;
            for (int l = 0; l < n; ++l)
                s += static_cast<uint64_t>(a.at(i, l)) * static_cast<uint64_t>(b.at(l, j));
            c.set(i, j, static_cast<uint32_t>(s % (uint64_t{1} << a.k())));
        }
    return c;
}

RingMat random_symplectic(std::mt19937_64& rng, const StandardRep& rep, int k, int nfactors) {
    RingMat m = RingMat::identity(k, rep.dim());
    for (int t = 0; t < nfactors; ++t) {
        const int n = 2 * rep.g() + 1;
        int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j) j = (j % n) + 1;
        const long e = 1 + static_cast<long>(rng() % 3);
        m = m * transvection_mod(rep.lift_vec(std::min(i, j), std::max(i, j)), rep.gram(), k, e);
    }
    return m;
}

} // namespace

TEST_CASE("mat_mul: identity is neutral and inverse products give I") {
    std::mt19937_64 rng(12);
    const RingMat a = random_mat(rng, 3, 4);
    CHECK(RingMat::identity(3, 4) * a == a);
    CHECK(a * RingMat::identity(3, 4) == a);

    StandardRep rep(2, 5);
    for (int t = 0; t < 20; ++t) {
        const RingMat s = random_symplectic(rng, rep, 4, 6);
        CHECK((s * s.inverse()).is_identity());
        CHECK((s.inverse() * s).is_identity());
    }
}

TEST_CASE("mat_mul matches the integer multiply-then-reduce oracle") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 1000; ++t) {
        const int k = 1 + static_cast<int>(rng() % 16);
        const RingMat a = random_mat(rng, k, 4);
        const RingMat b = random_mat(rng, k, 4);
        REQUIRE(a * b == bigint_mul_oracle(a, b));
    }
    // the spec'd instance: two random 4x4 matrices mod 8
    const RingMat a = random_mat(rng, 3, 4);
    const RingMat b = random_mat(rng, 3, 4);
    CHECK(a * b == bigint_mul_oracle(a, b));
}

TEST_CASE("mat_mul rejects mismatched shapes") {
    const RingMat a(3, 4);
    CHECK_THROWS_AS(mat_mul(a, RingMat(2, 4)), DimensionError);
    CHECK_THROWS_AS(mat_mul(a, RingMat(3, 6)), DimensionError);
}

TEST_CASE("mat_inverse: identity, transvections, and the symplectic formula") {
    CHECK(RingMat::identity(4, 4).inverse().is_identity());

    StandardRep rep(2, 5);
    const RingMat t = transvection_mod(rep.lift_vec(1, 3), rep.gram(), 3);
    CHECK((t * t.inverse()).is_identity());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const RingMat a = random_symplectic(rng, rep, 4, 8);
        const RingMat jm = rep.gram().matrix().reduced(4);
        const RingMat via_form = jm.inverse() * a.transposed() * jm;
        CHECK(a.inverse() == via_form);
        CHECK((a * via_form).is_identity());
    }

    RingMat even(3, 2);
    even.set(0, 0, 2);
    even.set(1, 1, 1);
    CHECK_THROWS_AS(even.inverse(), NotInvertibleError);
}

TEST_CASE("reduce_mod is a ring homomorphism and respects k") {
    std::mt19937_64 rng(99);
    for (int k = 2; k <= 16; k += 3) {
        for (int t = 0; t < 1000; ++t) {
            const RingMat a = random_mat(rng, k, 4);
            const RingMat b = random_mat(rng, k, 4);
            const int n = 1 + static_cast<int>(rng() % k);
            CHECK((a * b).reduced(n) == a.reduced(n) * b.reduced(n));
        }
    }
    const RingMat a = random_mat(rng, 5, 4);
    CHECK(a.reduced(5) == a);
    CHECK_THROWS_AS(a.reduced(0), DomainError);
    CHECK_THROWS_AS(a.reduced(6), DomainError);
}

TEST_CASE("mod-16 transvection reduces to the transposition image mod 2") {
    StandardRep rep(2, 5);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            const RingMat t16 = transvection_mod(rep.lift_vec(i, j), rep.gram(), 4);
            CHECK(t16.reduced(1) == rep.rho(Permutation::transposition(5, i, j)));
        }
}

TEST_CASE("is_symplectic: identity, transvections, perturbed transvection") {
    StandardRep rep(2, 5);
    CHECK(is_symplectic(RingMat::identity(3, 4), rep.gram()));
    for (int k = 1; k <= 16; k += 5)
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 5; ++j)
                CHECK(is_symplectic(transvection_mod(rep.lift_vec(i, j), rep.gram(), k),
                                    rep.gram()));
    RingMat bad = transvection_mod(rep.lift_vec(1, 2), rep.gram(), 3);
    bad.set(0, 0, bad.at(0, 0) + 1);
    CHECK_FALSE(is_symplectic(bad, rep.gram()));
    RingMat bad2 = transvection_mod(rep.lift_vec(1, 3), rep.gram(), 3);
    bad2.set(0, 2, bad2.at(0, 2) + 1);
    CHECK_FALSE(is_symplectic(bad2, rep.gram()));
}

TEST_CASE("pair: alternating, bilinear, and the subset instances") {
    StandardRep rep(2, 5);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const int k = 1 + static_cast<int>(rng() % 16);
        RingVec u(k, 4), v(k, 4), w(k, 4);
        for (int i = 0; i < 4; ++i) {
            u.set(i, static_cast<uint32_t>(rng()));
            v.set(i, static_cast<uint32_t>(rng()));
            w.set(i, static_cast<uint32_t>(rng()));
        }
        CHECK(pair_mod(v, v, rep.gram()) == 0);
        RingVec uw(k, 4);
        for (int i = 0; i < 4; ++i) uw.set(i, u.at(i) + w.at(i));
        CHECK(pair_mod(uw, v, rep.gram()) ==
              ((pair_mod(u, v, rep.gram()) + pair_mod(w, v, rep.gram())) & u.mask()));
    }
    const RingVec a12 = rep.lift_vec(1, 2).reduced(1);
    const RingVec a23 = rep.lift_vec(2, 3).reduced(1);
    const RingVec a34 = rep.lift_vec(3, 4).reduced(1);
    CHECK(pair_mod(a12, a23, rep.gram()) == 1);
    CHECK(pair_mod(a12, a34, rep.gram()) == 0);
}

TEST_CASE("products and inverses of symplectic matrices stay symplectic") {
    StandardRep rep(2, 5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const RingMat a = random_symplectic(rng, rep, 3, 5);
        const RingMat b = random_symplectic(rng, rep, 3, 5);
        CHECK(is_symplectic(a * b, rep.gram()));
        CHECK(is_symplectic(a.inverse(), rep.gram()));
    }
}

TEST_CASE("GramForm validation") {
    IntMat bad_diag(2);
    bad_diag.set(0, 0, 1);
    bad_diag.set(0, 1, 1);
    bad_diag.set(1, 0, -1);
    CHECK_THROWS_AS(GramForm{bad_diag}, DomainError);

    IntMat not_alt(2);
    not_alt.set(0, 1, 1);
    not_alt.set(1, 0, 1);
    CHECK_THROWS_AS(GramForm{not_alt}, DomainError);

    IntMat degenerate(2);
    degenerate.set(0, 1, 2);
    degenerate.set(1, 0, -2);
    CHECK_THROWS_AS(GramForm{degenerate}, DomainError);
}

TEST_CASE("matrix dump round-trips bit-exactly") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        const int g = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 16);
        std::vector<RingMat> ms;
        const size_t count = 1 + rng() % 5;
        for (size_t c = 0; c < count; ++c) ms.push_back(random_mat(rng, k, 2 * g));
        int g2 = 0;
        const auto back = parse_matrix_dump(dump_matrices(g, ms), &g2);
        REQUIRE(g2 == g);
        REQUIRE(back.size() == ms.size());
        for (size_t c = 0; c < count; ++c) REQUIRE(back[c] == ms[c]);
    }
    CHECK_THROWS_AS(parse_matrix_dump("nonsense"), ParseError);
}

TEST_CASE("integer matrix arithmetic guards overflow") {
    IntMat big(2);
    big.set(0, 0, int64_t{1} << 62);
    big.set(0, 1, int64_t{1} << 62);
    big.set(1, 0, 2);
    big.set(1, 1, 2);
    CHECK_THROWS_AS(mat_mul(big, big), OverflowError);
}
