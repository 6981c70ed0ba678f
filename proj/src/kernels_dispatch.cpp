#include "symplift/kernels.hpp"

namespace symplift::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

BatchMulFn select_batch_mul(int dim) {
#if defined(__x86_64__) || defined(_M_X64)
    if (dim == 4 && avx2_available()) return &batch_mul_right_avx2;
#endif
    (void)dim;
    return &batch_mul_right_scalar;
}

const char* selected_kernel_name(int dim) {
#if defined(__x86_64__) || defined(_M_X64)
    if (dim == 4 && avx2_available()) return "avx2";
#endif
    (void)dim;
    return "scalar";
}

} // namespace symplift::kernels
