#include "kinlab/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "kinlab/kernels.hpp"
#include "kinlab/parallel.hpp"

namespace kinlab {

double vel_measure(const ModeGrid& g, Repr repr) {
    double w = 1.0;
    for (int a = 0; a < g.d_v; ++a)
        w *= (repr == Repr::VSpace) ? g.dv() : g.deta() / (2.0 * kPi);
    return w;
}

double PhaseField::l2_sq() const {
    double w = vel_measure(grid, repr);
    double acc = 0.0;
    for (const cplx& z : data) acc += std::norm(z);
    return w * acc;
}

double PhaseField::raw_sq() const {
    double acc = 0.0;
    for (const cplx& z : data) acc += std::norm(z);
    return acc;
}

namespace {

// Cached in-place c2c plans on an owned fftw buffer. FFTW_ESTIMATE keeps the
// algorithm choice deterministic; data moves through the scratch buffer so
// caller arrays need no special alignment.
class Dft {
  public:
    static Dft& get(int N, int d_v) {
        static std::map<std::pair<int, int>, Dft*> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_pair(N, d_v);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, new Dft(N, d_v)).first;
        return *it->second;
    }

    void forward(cplx* inout) { run(fwd_, inout); }
    void backward(cplx* inout) { run(bwd_, inout); }
    std::size_t size() const { return n_; }

  private:
    Dft(int N, int d_v) {
        n_ = 1;
        int dims[3] = {N, N, N};
        for (int a = 0; a < d_v; ++a) n_ *= static_cast<std::size_t>(N);
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_));
        fwd_ = fftw_plan_dft(d_v, dims, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft(d_v, dims, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    void run(fftw_plan p, cplx* inout) {
        std::lock_guard<std::mutex> lock(exec_mtx_);
        auto* raw = reinterpret_cast<cplx*>(buf_);
        for (std::size_t i = 0; i < n_; ++i) raw[i] = inout[i];
        fftw_execute(p);
        for (std::size_t i = 0; i < n_; ++i) inout[i] = raw[i];
    }

    std::size_t n_ = 0;
    fftw_complex* buf_ = nullptr;
    fftw_plan fwd_ = nullptr, bwd_ = nullptr;
    std::mutex exec_mtx_;
};

// Sign of (-1)^{k1+..+kd} for a flat velocity index.
inline double parity_sign(const ModeGrid& g, std::size_t flat) {
    int s = 0;
    for (int a = 0; a < g.d_v; ++a) {
        s += static_cast<int>(flat % g.N_v);
        flat /= static_cast<std::size_t>(g.N_v);
    }
    return (s & 1) ? -1.0 : 1.0;
}

// Sign of prod_axis (-1)^{j_a - N/2}.
inline double shift_sign(const ModeGrid& g, std::size_t flat) {
    int s = 0;
    for (int a = 0; a < g.d_v; ++a) {
        s += static_cast<int>(flat % g.N_v) - g.N_v / 2;
        flat /= static_cast<std::size_t>(g.N_v);
    }
    return (s & 1) ? -1.0 : 1.0;
}

}  // namespace

PhaseField to_eta(const PhaseField& field) {
    if (field.repr != Repr::VSpace)
        throw ContractError("to_eta: field is not in VSpace");
    const ModeGrid& g = field.grid;
    PhaseField out = field;
    out.repr = Repr::EtaSpace;
    Dft& dft = Dft::get(g.N_v, g.d_v);
    const std::size_t nv = g.n_vel();
    double scale = 1.0;
    for (int a = 0; a < g.d_v; ++a) scale *= g.dv();
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        cplx* blk = out.mode_block(m);
        for (std::size_t k = 0; k < nv; ++k) blk[k] *= parity_sign(g, k);
        dft.forward(blk);
        for (std::size_t j = 0; j < nv; ++j) blk[j] *= scale * shift_sign(g, j);
    }
    return out;
}

PhaseField to_v(const PhaseField& field) {
    if (field.repr != Repr::EtaSpace)
        throw ContractError("to_v: field is not in EtaSpace");
    const ModeGrid& g = field.grid;
    PhaseField out = field;
    out.repr = Repr::VSpace;
    Dft& dft = Dft::get(g.N_v, g.d_v);
    const std::size_t nv = g.n_vel();
    double scale = 1.0;
    for (int a = 0; a < g.d_v; ++a) scale *= g.deta() / (2.0 * kPi);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        cplx* blk = out.mode_block(m);
        for (std::size_t j = 0; j < nv; ++j) blk[j] *= shift_sign(g, j);
        dft.backward(blk);
        for (std::size_t k = 0; k < nv; ++k) blk[k] *= scale * parity_sign(g, k);
    }
    return out;
}

}  // namespace kinlab
