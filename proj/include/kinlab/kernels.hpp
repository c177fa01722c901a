#pragma once

#include <complex>
#include <cstddef>

// Hot inner loops, provided as scalar reference implementations plus an AVX2
// variant selected at runtime. Callers never branch on the ISA themselves.
//
// Contract: for a fixed variant, results are exactly reproducible run to run
// and independent of the caller's threading. Across variants results agree to
// rounding (FMA contraction differs), which the equivalence tests pin down.

namespace kinlab::kern {

using cplx = std::complex<double>;

struct Kernels {
    const char* name;

    // out[r] = sum_j in[r*n + j] * w[j]     (complex data, real weights)
    void (*contract_rows_c)(const cplx* in, const double* w, cplx* out,
                            std::size_t rows, std::size_t n);
    // out[r] = sum_j in[r*n + j] * w[j]     (real data, real weights)
    void (*contract_rows_d)(const double* in, const double* w, double* out,
                            std::size_t rows, std::size_t n);
    // y[i] *= w[i]                           (complex pointwise)
    void (*cmul_inplace)(cplx* y, const cplx* w, std::size_t n);
    // a[i] += c * b[i]
    void (*axpy_d)(double* a, double c, const double* b, std::size_t n);
    // sum_i w[i] * |z[i]|^2
    double (*wnorm2_c)(const cplx* z, const double* w, std::size_t n);
};

const Kernels& scalar();
const Kernels* avx2();  // nullptr when unsupported on this CPU

// Active variant: AVX2 when available unless overridden by KINLAB_SIMD
// (values: "scalar", "avx2", "auto").
const Kernels& active();

}  // namespace kinlab::kern
