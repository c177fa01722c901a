// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma;
// dispatch guarantees it only runs on CPUs that support both.

#include "kinlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace kinlab::kern {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Complex rows against real weights. Weights are expanded on the fly:
// lanes (re0, im0, re1, im1) need (w0, w0, w1, w1).
void contract_rows_c_avx2(const cplx* in, const double* w, cplx* out,
                          std::size_t rows, std::size_t n) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = reinterpret_cast<const double*>(in + r * n);
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d z = _mm256_loadu_pd(row + 2 * j);
            __m128d wp = _mm_loadu_pd(w + j);
            __m256d wd = _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
            acc = _mm256_fmadd_pd(z, wd, acc);
        }
        double re = acc[0] + acc[2];
        double im = acc[1] + acc[3];
        for (; j < n; ++j) {
            re += row[2 * j] * w[j];
            im += row[2 * j + 1] * w[j];
        }
        out[r] = cplx(re, im);
    }
}

void contract_rows_d_avx2(const double* in, const double* w, double* out,
                          std::size_t rows, std::size_t n) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = in + r * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4)
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(w + j), acc);
        double s = hsum(acc);
        for (; j < n; ++j) s += row[j] * w[j];
        out[r] = s;
    }
}

void cmul_inplace_avx2(cplx* y, const cplx* w, std::size_t n) {
    double* yd = reinterpret_cast<double*>(y);
    const double* wd = reinterpret_cast<const double*>(w);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d a = _mm256_loadu_pd(yd + 2 * i);   // (ar0, ai0, ar1, ai1)
        __m256d b = _mm256_loadu_pd(wd + 2 * i);   // (br0, bi0, br1, bi1)
        __m256d br = _mm256_movedup_pd(b);                         // (br, br, ...)
        __m256d bi = _mm256_permute_pd(b, 0xF);                    // (bi, bi, ...)
        __m256d aswap = _mm256_permute_pd(a, 0x5);                 // (ai, ar, ...)
        __m256d t = _mm256_mul_pd(aswap, bi);                      // (ai*bi, ar*bi)
        __m256d res = _mm256_fmaddsub_pd(a, br, t);                // (ar*br - ai*bi, ai*br + ar*bi)
        _mm256_storeu_pd(yd + 2 * i, res);
    }
    for (; i < n; ++i) {
        double a = y[i].real(), b = y[i].imag();
        double c = w[i].real(), d = w[i].imag();
        y[i] = cplx(a * c - b * d, a * d + b * c);
    }
}

void axpy_d_avx2(double* a, double c, const double* b, std::size_t n) {
    __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        va = _mm256_fmadd_pd(vc, _mm256_loadu_pd(b + i), va);
        _mm256_storeu_pd(a + i, va);
    }
    for (; i < n; ++i) a[i] += c * b[i];
}

double wnorm2_c_avx2(const cplx* z, const double* w, std::size_t n) {
    const double* zd = reinterpret_cast<const double*>(z);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(zd + 2 * i);
        __m128d wp = _mm_loadu_pd(w + i);
        __m256d wd = _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), wd, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        double re = z[i].real(), im = z[i].imag();
        s += w[i] * (re * re + im * im);
    }
    return s;
}

}  // namespace

const Kernels* avx2_impl() {
    static const Kernels k{"avx2",         contract_rows_c_avx2,
                           contract_rows_d_avx2, cmul_inplace_avx2,
                           axpy_d_avx2,    wnorm2_c_avx2};
    return &k;
}

}  // namespace kinlab::kern

#else

namespace kinlab::kern {
const Kernels* avx2_impl() { return nullptr; }
}  // namespace kinlab::kern

#endif
