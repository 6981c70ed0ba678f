#pragma once

#include <cstddef>
#include <cstdint>

namespace symplift::kernels {

// Batched product of packed small matrices over Z/2^k, the closure-engine
// inner loop.  A batch holds n matrices of shape dim x dim, entries as u16
// row-major (one 64-bit word per row at dim 4), stride dim*dim per matrix.
// out[t] = a[t] * b (mod 2^k), with mask = 2^k - 1.

using BatchMulFn = void (*)(const uint16_t* a, const uint16_t* b, uint16_t* out, size_t n,
                            int dim, uint16_t mask);

void batch_mul_right_scalar(const uint16_t* a, const uint16_t* b, uint16_t* out, size_t n,
                            int dim, uint16_t mask);

#if defined(__x86_64__) || defined(_M_X64)
void batch_mul_right_avx2(const uint16_t* a, const uint16_t* b, uint16_t* out, size_t n,
                          int dim, uint16_t mask); // dim == 4 only
#endif

bool avx2_available();

/// Best kernel for the given dimension on this machine.
BatchMulFn select_batch_mul(int dim);

const char* selected_kernel_name(int dim);

} // namespace symplift::kernels
