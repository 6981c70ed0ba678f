#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

#include "symplift/kernels.hpp"

namespace symplift::kernels {

// One 4x4 matrix of u16 entries occupies one __m256i: row i in 64-bit group i.
// Broadcasting column l of A within each row is a shufflelo+shufflehi pair,
// and row l of B broadcast to all row groups is a set1_epi64.
__attribute__((target("avx2"))) void batch_mul_right_avx2(const uint16_t* a, const uint16_t* b,
                                                          uint16_t* out, size_t n, int dim,
                                                          uint16_t mask) {
    // Scalar fallback guards misuse; dispatch only routes dim 4 here.
    if (dim != 4) {
        batch_mul_right_scalar(a, b, out, n, dim, mask);
        return;
    }
    uint64_t brow[4];
    std::memcpy(brow, b, sizeof(brow));
    const __m256i b0 = _mm256_set1_epi64x(static_cast<long long>(brow[0]));
    const __m256i b1 = _mm256_set1_epi64x(static_cast<long long>(brow[1]));
    const __m256i b2 = _mm256_set1_epi64x(static_cast<long long>(brow[2]));
    const __m256i b3 = _mm256_set1_epi64x(static_cast<long long>(brow[3]));
    const __m256i mv = _mm256_set1_epi16(static_cast<short>(mask));
    for (size_t t = 0; t < n; ++t) {
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + t * 16));
        const __m256i a0 = _mm256_shufflehi_epi16(_mm256_shufflelo_epi16(m, 0x00), 0x00);
        const __m256i a1 = _mm256_shufflehi_epi16(_mm256_shufflelo_epi16(m, 0x55), 0x55);
        const __m256i a2 = _mm256_shufflehi_epi16(_mm256_shufflelo_epi16(m, 0xAA), 0xAA);
        const __m256i a3 = _mm256_shufflehi_epi16(_mm256_shufflelo_epi16(m, 0xFF), 0xFF);
        __m256i acc = _mm256_mullo_epi16(a0, b0);
        acc = _mm256_add_epi16(acc, _mm256_mullo_epi16(a1, b1));
        acc = _mm256_add_epi16(acc, _mm256_mullo_epi16(a2, b2));
        acc = _mm256_add_epi16(acc, _mm256_mullo_epi16(a3, b3));
        acc = _mm256_and_si256(acc, mv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + t * 16), acc);
    }
}

} // namespace symplift::kernels

#endif
