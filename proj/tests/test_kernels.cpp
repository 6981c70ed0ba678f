#include <random>
#include <vector>

#include "doctest.h"
#include "symplift/kernels.hpp"
#include "symplift/zmod.hpp"

using namespace symplift;

namespace {

std::vector<uint16_t> random_batch(std::mt19937_64& rng, size_t n, int dim, uint16_t mask) {
    std::vector<uint16_t> out(n * static_cast<size_t>(dim) * dim);
    for (auto& v : out) v = static_cast<uint16_t>(rng() & mask);
    return out;
}

} // namespace

TEST_CASE("scalar batch kernel matches the matrix type") {
    std::mt19937_64 rng(77);
    for (int k = 1; k <= 4; ++k) {
        const uint16_t mask = static_cast<uint16_t>((1u << k) - 1);
        for (int dim : {4, 6}) {
            const size_t n = 33;
            const size_t stride = static_cast<size_t>(dim) * dim;
            const auto a = random_batch(rng, n, dim, mask);
            const auto b = random_batch(rng, 1, dim, mask);
            std::vector<uint16_t> out(n * stride);
            kernels::batch_mul_right_scalar(a.data(), b.data(), out.data(), n, dim, mask);
            RingMat bm(k, dim);
            for (size_t p = 0; p < stride; ++p) bm.entries()[p] = b[p];
            for (size_t t = 0; t < n; ++t) {
                RingMat am(k, dim);
                for (size_t p = 0; p < stride; ++p) am.entries()[p] = a[t * stride + p];
                const RingMat expect = am * bm;
                for (size_t p = 0; p < stride; ++p) REQUIRE(out[t * stride + p] == expect.entries()[p]);
            }
        }
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel agrees with the scalar reference") {
    if (!kernels::avx2_available()) {
        MESSAGE("avx2 not available on this host; skipping equivalence");
        return;
    }
    std::mt19937_64 rng(42);
    for (int k : {1, 2, 3, 4, 8, 16}) {
        const uint16_t mask = static_cast<uint16_t>(k == 16 ? 0xFFFFu : ((1u << k) - 1));
        for (size_t n : {size_t{1}, size_t{5}, size_t{64}, size_t{1000}}) {
            const auto a = random_batch(rng, n, 4, mask);
            const auto b = random_batch(rng, 1, 4, mask);
            std::vector<uint16_t> s(n * 16), v(n * 16);
            kernels::batch_mul_right_scalar(a.data(), b.data(), s.data(), n, 4, mask);
            kernels::batch_mul_right_avx2(a.data(), b.data(), v.data(), n, 4, mask);
            REQUIRE(s == v);
        }
    }
}
#endif

TEST_CASE("dispatch selects a working kernel for every dimension") {
    std::mt19937_64 rng(9);
    for (int dim : {4, 6}) {
        const auto fn = kernels::select_batch_mul(dim);
        const uint16_t mask = 7;
        const size_t n = 17;
        const auto a = random_batch(rng, n, dim, mask);
        const auto b = random_batch(rng, 1, dim, mask);
        const size_t stride = static_cast<size_t>(dim) * dim;
        std::vector<uint16_t> got(n * stride), want(n * stride);
        fn(a.data(), b.data(), got.data(), n, dim, mask);
        kernels::batch_mul_right_scalar(a.data(), b.data(), want.data(), n, dim, mask);
        REQUIRE(got == want);
    }
}
