#include "kinlab/kernels.hpp"

namespace kinlab::kern {
namespace {

void contract_rows_c_scalar(const cplx* in, const double* w, cplx* out,
                            std::size_t rows, std::size_t n) {
    for (std::size_t r = 0; r < rows; ++r) {
        const cplx* row = in + r * n;
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            re += row[j].real() * w[j];
            im += row[j].imag() * w[j];
        }
        out[r] = cplx(re, im);
    }
}

void contract_rows_d_scalar(const double* in, const double* w, double* out,
                            std::size_t rows, std::size_t n) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = in + r * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * w[j];
        out[r] = acc;
    }
}

void cmul_inplace_scalar(cplx* y, const cplx* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double a = y[i].real(), b = y[i].imag();
        double c = w[i].real(), d = w[i].imag();
        y[i] = cplx(a * c - b * d, a * d + b * c);
    }
}

void axpy_d_scalar(double* a, double c, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] += c * b[i];
}

double wnorm2_c_scalar(const cplx* z, const double* w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double re = z[i].real(), im = z[i].imag();
        acc += w[i] * (re * re + im * im);
    }
    return acc;
}

}  // namespace

const Kernels& scalar() {
    static const Kernels k{"scalar",          contract_rows_c_scalar,
                           contract_rows_d_scalar, cmul_inplace_scalar,
                           axpy_d_scalar,     wnorm2_c_scalar};
    return k;
}

}  // namespace kinlab::kern
