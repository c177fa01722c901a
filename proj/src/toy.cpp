#include "kinlab/toy.hpp"

#include <cmath>
#include <sstream>

#include "kinlab/fourier.hpp"
#include "kinlab/multiplier.hpp"
#include "kinlab/parallel.hpp"

namespace kinlab {

namespace {

// Kronrod-15 nodes/weights on [-1,1] with the embedded Gauss-7 rule.
constexpr double kKx[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kKw[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kGw[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <class F>
void gk15(const F& f, double a, double b, double& res_k, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double acc_k = 0.0, acc_g = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(c + h * kKx[i]);
        acc_k += kKw[i] * fx;
        if (i % 2 == 1) acc_g += kGw[i / 2] * fx;
    }
    res_k = h * acc_k;
    err = std::abs(h * (acc_k - acc_g));
}

template <class F>
double adaptive_gk(const F& f, double a, double b, double rel_tol, double abs_floor, int depth = 0) {
    double res, err;
    gk15(f, a, b, res, err);
    if (err <= rel_tol * std::abs(res) + abs_floor || depth >= 48) return res;
    double c = 0.5 * (a + b);
    return adaptive_gk(f, a, c, rel_tol, abs_floor * 0.5, depth + 1) +
           adaptive_gk(f, c, b, rel_tol, abs_floor * 0.5, depth + 1);
}

// Antiderivative of sqrt(C r^2 + 2 B r + A), C > 0, discriminant AC - B^2 >= 0.
double sqrt_quad_antideriv(double A, double B, double C, double r) {
    double q = C * r * r + 2.0 * B * r + A;
    q = std::max(q, 0.0);
    double sq = std::sqrt(q), sC = std::sqrt(C);
    double disc = A * C - B * B;
    double first = (C * r + B) * sq / (2.0 * C);
    if (disc <= 1e-14 * A * C) return first;  // eta parallel to m: |linear| case
    double arg = C * r + B + sC * sq;
    return first + disc / (2.0 * C * sC) * std::log(std::abs(arg));
}

}  // namespace

double psi_integral(double t, const std::array<double, 3>& m, const std::array<double, 3>& eta,
                    double s, double quad_tol) {
    if (t < 0.0) throw ContractError("psi_integral: need t >= 0");
    if (t == 0.0) return 0.0;
    double A = eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2];
    double B = eta[0] * m[0] + eta[1] * m[1] + eta[2] * m[2];
    double C = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
    if (C == 0.0) return t * std::pow(A, s);
    if (s == 1.0) return A * t + B * t * t + C * t * t * t / 3.0;
    if (s == 0.5) return sqrt_quad_antideriv(A, B, C, t) - sqrt_quad_antideriv(A, B, C, 0.0);
    auto f = [&](double rho) { return std::pow(std::max(A + 2.0 * B * rho + C * rho * rho, 0.0), s); };
    double scale = std::max(std::pow(std::max(A, 1e-300), s), std::pow(C * t * t, s));
    double abs_floor = 1e-3 * quad_tol * scale * t;
    double r0 = -B / C;
    if (r0 > 1e-14 && r0 < t * (1.0 - 1e-14)) {
        return adaptive_gk(f, 0.0, r0, quad_tol, abs_floor) + adaptive_gk(f, r0, t, quad_tol, abs_floor);
    }
    return adaptive_gk(f, 0.0, t, quad_tol, abs_floor);
}

PhaseField exact_evolve(const PhaseField& f0, double t, const ToySpec& spec) {
    if (spec.gamma != 0.0)
        throw ContractError("exact_evolve: only the gamma = 0 model has the exact solution");
    const ModeGrid& g = f0.grid;
    if (t == 0.0) {
        PhaseField out = (f0.repr == Repr::EtaSpace) ? f0 : to_eta(f0);
        return out;
    }
    PhaseField out = modulate_shift(f0, t);  // Fhat0(m, eta + t m), guard included
    const std::size_t nv = g.n_vel();
    parallel_for(g.n_modes(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m) {
            std::array<double, 3> mv{0.0, 0.0, 0.0};
            auto mi = g.mode_of(m);
            for (int a = 0; a < g.d_x; ++a) mv[a] = mi[a];
            cplx* blk = out.mode_block(m);
            for (std::size_t j = 0; j < nv; ++j)
                blk[j] *= std::exp(-psi_integral(t, mv, g.eta_point(j), spec.s, spec.quad_tol));
        }
    }, 1);
    out.time_tag = f0.time_tag + t;
    return out;
}

double step_stability_bound(const ModeGrid& g, const ToySpec& spec) {
    constexpr double c_stab = 2.5;  // explicit 4-stage stability interval, documented margin
    double vmax_sq = g.d_v * g.V * g.V;
    double wmax = std::pow(1.0 + vmax_sq, 0.5 * spec.gamma);
    double eta_sq = g.d_v * g.eta_max() * g.eta_max();
    return c_stab / (wmax * std::pow(eta_sq, spec.s));
}

PhaseField step_evolve(const PhaseField& f0, const ToySpec& spec, double dt, int n_steps) {
    const ModeGrid& g = f0.grid;
    if (n_steps < 0) throw ContractError("step_evolve: need n_steps >= 0");
    double bound = step_stability_bound(g, spec);
    if (dt > bound) {
        std::ostringstream msg;
        msg << "step_evolve: dt = " << dt << " exceeds the stability bound " << bound
            << "; use dt <= " << bound;
        throw ContractError(msg.str());
    }
    PhaseField f = (f0.repr == Repr::EtaSpace) ? f0 : to_eta(f0);
    if (n_steps == 0) return f;

    const std::size_t nv = g.n_vel();
    std::vector<double> eta2s(nv), vweight;
    for (std::size_t j = 0; j < nv; ++j) {
        auto e = g.eta_point(j);
        eta2s[j] = std::pow(e[0] * e[0] + e[1] * e[1] + e[2] * e[2], spec.s);
    }
    if (spec.gamma != 0.0) {
        vweight.resize(nv);
        for (std::size_t k = 0; k < nv; ++k) {
            auto v = g.v_point(k);
            vweight[k] = std::pow(1.0 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 0.5 * spec.gamma);
        }
    }

    // -<v>^gamma (-Lap)^s acting on an EtaSpace field.
    auto rhs = [&](const PhaseField& u) {
        PhaseField w = u;
        for (std::size_t m = 0; m < g.n_modes(); ++m) {
            cplx* blk = w.mode_block(m);
            for (std::size_t j = 0; j < nv; ++j) blk[j] *= eta2s[j];
        }
        if (spec.gamma == 0.0) {
            for (cplx& z : w.data) z = -z;
            return w;
        }
        w = to_v(w);
        for (std::size_t m = 0; m < g.n_modes(); ++m) {
            cplx* blk = w.mode_block(m);
            for (std::size_t k = 0; k < nv; ++k) blk[k] *= -vweight[k];
        }
        return to_eta(w);
    };

    auto axpy_field = [](PhaseField& y, double a, const PhaseField& x) {
        for (std::size_t i = 0; i < y.data.size(); ++i) y.data[i] += a * x.data[i];
    };

    for (int step = 0; step < n_steps; ++step) {
        f = modulate_shift(f, 0.5 * dt);
        PhaseField k1 = rhs(f);
        PhaseField u2 = f;
        axpy_field(u2, 0.5 * dt, k1);
        PhaseField k2 = rhs(u2);
        PhaseField u3 = f;
        axpy_field(u3, 0.5 * dt, k2);
        PhaseField k3 = rhs(u3);
        PhaseField u4 = f;
        axpy_field(u4, dt, k3);
        PhaseField k4 = rhs(u4);
        axpy_field(f, dt / 6.0, k1);
        axpy_field(f, dt / 3.0, k2);
        axpy_field(f, dt / 3.0, k3);
        axpy_field(f, dt / 6.0, k4);
        f = modulate_shift(f, 0.5 * dt);
        f.time_tag += dt;
    }
    return f;
}

}  // namespace kinlab
