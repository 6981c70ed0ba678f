#include "symplift/kernels.hpp"

namespace symplift::kernels {

void batch_mul_right_scalar(const uint16_t* a, const uint16_t* b, uint16_t* out, size_t n,
                            int dim, uint16_t mask) {
    const size_t stride = static_cast<size_t>(dim) * dim;
    for (size_t t = 0; t < n; ++t) {
        const uint16_t* m = a + t * stride;
        uint16_t* o = out + t * stride;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                uint16_t s = 0;
                for (int l = 0; l < dim; ++l)
                    s = static_cast<uint16_t>(s + static_cast<uint16_t>(m[i * dim + l] * b[l * dim + j]));
                o[i * dim + j] = static_cast<uint16_t>(s & mask);
            }
    }
}

} // namespace symplift::kernels
