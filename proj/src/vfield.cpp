#include "kinlab/vfield.hpp"

#include <cmath>

#include "kinlab/fourier.hpp"
#include "kinlab/maxwellian.hpp"
#include "kinlab/multiplier.hpp"

namespace kinlab {

cplx h_symbol(const VectorFieldSpec& spec, double t, const std::array<int, 3>& m,
              const std::array<double, 3>& eta) {
    if (t < 0.0) throw ContractError("h_symbol: need t >= 0");
    int a = spec.axis - 1;
    double val = std::pow(t, spec.delta + 1.0) * m[a] / (spec.delta + 1.0) +
                 std::pow(t, spec.delta) * eta[a];
    return cplx(0.0, val);
}

PhaseField apply_H_pow(const PhaseField& field, const VectorFieldSpec& spec, int k, double t) {
    if (field.repr != Repr::EtaSpace) throw ContractError("apply_H_pow: field must be in EtaSpace");
    if (k < 0) throw ContractError("apply_H_pow: need k >= 0");
    if (k == 0) return field;
    return apply_multiplier(field, [&](const std::array<int, 3>& m, const std::array<double, 3>& eta) {
        return std::pow(h_symbol(spec, t, m, eta), k);
    });
}

namespace {

// v.grad_x as the exact VSpace multiplier i (m.v).
PhaseField transport_term(const PhaseField& eta_field) {
    const ModeGrid& g = eta_field.grid;
    PhaseField vf = to_v(eta_field);
    for (std::size_t mi = 0; mi < g.n_modes(); ++mi) {
        auto m = g.mode_of(mi);
        cplx* blk = vf.mode_block(mi);
        for (std::size_t kk = 0; kk < g.n_vel(); ++kk) {
            auto v = g.v_point(kk);
            double mdotv = 0.0;
            for (int a = 0; a < std::min(g.d_x, g.d_v); ++a) mdotv += m[a] * v[a];
            blk[kk] *= cplx(0.0, mdotv);
        }
    }
    return to_eta(vf);
}

PhaseField scale_add(const PhaseField& x, double cx, const PhaseField& y, double cy) {
    PhaseField out = x;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = cx * x.data[i] + cy * y.data[i];
    return out;
}

}  // namespace

CommutatorResult commutator_residual(const VectorFieldSpec& spec, int k, double t, double h_t,
                                     const std::function<PhaseField(double)>& solution) {
    if (k < 1) throw ContractError("commutator_residual: need k >= 1");
    if (!(t - h_t > 0.0)) throw ContractError("commutator_residual: need t - h_t > 0");

    PhaseField fm = solution(t - h_t);
    PhaseField f0 = solution(t);
    PhaseField fp = solution(t + h_t);
    if (f0.repr != Repr::EtaSpace) throw ContractError("commutator_residual: solution must be EtaSpace");

    // P f = d_t f + v.d_x f with the central-difference time derivative.
    auto apply_P = [&](const PhaseField& lo, const PhaseField& mid, const PhaseField& hi) {
        PhaseField ddt = scale_add(hi, 1.0 / (2.0 * h_t), lo, -1.0 / (2.0 * h_t));
        PhaseField tr = transport_term(mid);
        return scale_add(ddt, 1.0, tr, 1.0);
    };

    // H^k P f at frozen t
    PhaseField Pf = apply_P(fm, f0, fp);
    PhaseField lhs1 = apply_H_pow(Pf, spec, k, t);

    // P (H^k f): the multiplier is evaluated at the matching times.
    PhaseField Hfm = apply_H_pow(fm, spec, k, t - h_t);
    PhaseField Hf0 = apply_H_pow(f0, spec, k, t);
    PhaseField Hfp = apply_H_pow(fp, spec, k, t + h_t);
    PhaseField lhs2 = apply_P(Hfm, Hf0, Hfp);

    PhaseField lhs = scale_add(lhs1, 1.0, lhs2, -1.0);

    // RHS = -delta k t^{delta-1} (i eta_axis) H^{k-1} f(t)
    PhaseField rhs = apply_H_pow(f0, spec, k - 1, t);
    const ModeGrid& g = f0.grid;
    int ax = spec.axis - 1;
    double coef = -spec.delta * k * std::pow(t, spec.delta - 1.0);
    for (std::size_t mi = 0; mi < g.n_modes(); ++mi) {
        cplx* blk = rhs.mode_block(mi);
        for (std::size_t j = 0; j < g.n_vel(); ++j)
            blk[j] *= coef * cplx(0.0, g.eta_point(j)[ax]);
    }

    double rhs_norm = std::sqrt(rhs.l2_sq());
    PhaseField diff = scale_add(lhs, 1.0, rhs, -1.0);
    double diff_norm = std::sqrt(diff.l2_sq());
    CommutatorResult res;
    if (rhs_norm < 1e-14) {
        res.absolute = true;
        res.residual = diff_norm;
    } else {
        res.residual = diff_norm / rhs_norm;
    }
    return res;
}

DeltaPair delta_pair(double lambda, double s) {
    double lower = 1.0 + 1.0 / (2.0 * s);
    if (!(lambda > lower))
        throw ContractError("delta_pair: lambda must exceed 1 + 1/(2s)");
    DeltaPair p;
    p.lambda = lambda;
    p.delta1 = lambda;
    p.delta2 = (s < 0.5) ? 1.0 + 2.0 * s + (1.0 - 2.0 * s) * lambda
                         : 0.5 * (lambda + 1.0 + 1.0 / (2.0 * s));
    if (!(p.delta1 > p.delta2 && p.delta2 > lower))
        throw ContractError("delta_pair: ordering delta1 > delta2 > 1 + 1/(2s) failed");
    return p;
}

GenerationResidual generation_check(const DeltaPair& pair, double t, const std::array<int, 3>& m,
                                    const std::array<double, 3>& eta) {
    if (!(t > 0.0)) throw ContractError("generation_check: need t > 0");
    VectorFieldSpec s1(pair.delta1, 1, 1.0), s2(pair.delta2, 1, 1.0);
    cplx h1 = h_symbol(s1, t, m, eta);
    cplx h2 = h_symbol(s2, t, m, eta);
    double d1 = pair.delta1, d2 = pair.delta2;
    double K = (d2 + 1.0) * (d1 + 1.0) / (d2 - d1);
    double tpow = std::pow(t, d1 - d2);

    cplx lhs_x = cplx(0.0, std::pow(t, pair.lambda + 1.0) * m[0]);
    cplx rhs_x = K * h1 - K * tpow * h2;
    cplx lhs_v = cplx(0.0, std::pow(t, pair.lambda) * eta[0]);
    cplx rhs_v = -(d1 + 1.0) / (d2 - d1) * h1 + (d2 + 1.0) / (d2 - d1) * tpow * h2;

    GenerationResidual r;
    r.res_x = std::abs(lhs_x - rhs_x);
    r.res_v = std::abs(lhs_v - rhs_v);
    r.mag_x = std::max(std::abs(lhs_x), std::abs(rhs_x));
    r.mag_v = std::max(std::abs(lhs_v), std::abs(rhs_v));
    return r;
}

double split_inequality_check(const ScalarSymbol& a1, const ScalarSymbol& a2, int k,
                              const PhaseField& field) {
    if (k < 0) throw ContractError("split_inequality_check: need k >= 0");
    if (field.repr != Repr::EtaSpace)
        throw ContractError("split_inequality_check: field must be in EtaSpace");
    auto powk = [k](cplx z) { return (k == 0) ? cplx(1.0, 0.0) : std::pow(z, k); };
    PhaseField sum = apply_multiplier(field, [&](const auto& m, const auto& e) {
        return powk(a1(m, e) + a2(m, e));
    });
    PhaseField p1 = apply_multiplier(field, [&](const auto& m, const auto& e) { return powk(a1(m, e)); });
    PhaseField p2 = apply_multiplier(field, [&](const auto& m, const auto& e) { return powk(a2(m, e)); });
    double lhs = std::sqrt(sum.l2_sq());
    double rhs = std::pow(2.0, k) * (std::sqrt(p1.l2_sq()) + std::sqrt(p2.l2_sq()));
    return lhs / rhs;
}

GaussianBoundReport gaussian_bound_check(double delta, double T, int p_max, double v_extent,
                                         int n_scan) {
    if (p_max > 12) throw ContractError("gaussian_bound_check: p_max above the stable range (12)");
    auto polys = gaussian_quarter_derivative_polys(p_max);
    GaussianBoundReport rep;
    double Td = std::pow(T, delta);
    // The ratio factorizes: the v2, v3 dependence e^{-(v2^2+v3^2)/8} peaks at
    // the origin, so a dense v1 scan at v2 = v3 = 0 covers the 3d maximum;
    // a coarse 3d scan cross-checks that reduction in the tests.
    double logfact = 0.0;
    for (int p = 0; p <= p_max; ++p) {
        if (p > 0) logfact += std::log(static_cast<double>(p));
        double denom_scale = std::exp(static_cast<double>(p) * std::log(2.0 * Td) + logfact);
        if (!std::isfinite(denom_scale))
            throw ContractError("gaussian_bound_check: recurrence scale overflow at p = " +
                                std::to_string(p));
        for (int i = 0; i <= n_scan; ++i) {
            double v1 = -v_extent + 2.0 * v_extent * i / n_scan;
            std::array<double, 3> v{v1, 0.0, 0.0};
            double lhs = std::pow(T, delta * p) * std::abs(dp_sqrt_mu3(polys, p, v));
            double rhs = denom_scale * mu3_pow(v, 0.25);
            double ratio = lhs / rhs;
            if (ratio > rep.worst_ratio) {
                rep.worst_ratio = ratio;
                rep.worst_p = p;
                rep.worst_v1 = v1;
            }
        }
    }
    return rep;
}

}  // namespace kinlab
