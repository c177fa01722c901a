#include "kinlab/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kinlab/fourier.hpp"

namespace kinlab {

namespace {

constexpr double kAmpFloor = 1e-300;  // guards against subnormal transform noise

double xi_norm_sq(const ModeGrid& g, const std::array<int, 3>& m, std::size_t j) {
    double r2 = 0.0;
    for (int a = 0; a < g.d_x; ++a) r2 += static_cast<double>(m[a]) * m[a];
    auto e = g.eta_point(j);
    for (int a = 0; a < g.d_v; ++a) r2 += e[a] * e[a];
    return r2;
}

}  // namespace

double gevrey_norm(const PhaseField& field, double r, double c, int* overflow_shell) {
    if (field.repr != Repr::EtaSpace) throw ContractError("gevrey_norm: field must be in EtaSpace");
    if (!(r > 0.0)) throw ContractError("gevrey_norm: need r > 0");
    if (c < 0.0) throw ContractError("gevrey_norm: need c >= 0");
    const ModeGrid& g = field.grid;
    const std::size_t nv = g.n_vel();
    double expo = 1.0 / (2.0 * r);
    double acc = 0.0;
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        auto mv = g.mode_of(m);
        const cplx* blk = field.mode_block(m);
        for (std::size_t j = 0; j < nv; ++j) {
            double a2 = std::norm(blk[j]);
            if (a2 <= kAmpFloor) continue;
            double xi2 = xi_norm_sq(g, mv, j);
            double term = a2 * std::exp(2.0 * c * std::pow(xi2, expo));
            acc += term;
            if (!std::isfinite(acc)) {
                if (overflow_shell) *overflow_shell = static_cast<int>(std::sqrt(xi2));
                return std::numeric_limits<double>::infinity();
            }
        }
    }
    if (overflow_shell) *overflow_shell = -1;
    return std::sqrt(acc);
}

namespace {

struct ShellData {
    std::vector<double> rho;     // radius at the shell maximum
    std::vector<double> logamp;  // log of the shell maximum
};

ShellData collect_shells(const PhaseField& field, double shell_min, double shell_max) {
    const ModeGrid& g = field.grid;
    const std::size_t nv = g.n_vel();
    int nbins = static_cast<int>(std::ceil(shell_max)) + 1;
    std::vector<double> best(nbins, 0.0), best_rho(nbins, 0.0);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        auto mv = g.mode_of(m);
        const cplx* blk = field.mode_block(m);
        for (std::size_t j = 0; j < nv; ++j) {
            double rho = std::sqrt(xi_norm_sq(g, mv, j));
            if (rho < shell_min || rho > shell_max) continue;
            int bin = static_cast<int>(rho);
            double a = std::abs(blk[j]);
            if (a > best[bin]) {
                best[bin] = a;
                best_rho[bin] = rho;
            }
        }
    }
    ShellData out;
    for (int b = 0; b < nbins; ++b) {
        if (best[b] > kAmpFloor) {
            out.rho.push_back(best_rho[b]);
            out.logamp.push_back(std::log(best[b]));
        }
    }
    return out;
}

// Linear LS of y ~ logA - c * rho^{2 sigma} for fixed sigma; returns SSR.
double fit_for_sigma(const ShellData& sh, double sigma, double& c, double& logA) {
    std::size_t n = sh.rho.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::pow(sh.rho[i] * sh.rho[i], sigma);
        sx += x;
        sy += sh.logamp[i];
        sxx += x * x;
        sxy += x * sh.logamp[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30) {
        c = 0.0;
        logA = sy / n;
    } else {
        double slope = (n * sxy - sx * sy) / denom;
        c = -slope;
        logA = (sy - slope * sx) / n;
    }
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::pow(sh.rho[i] * sh.rho[i], sigma);
        double resid = sh.logamp[i] - (logA - c * x);
        ssr += resid * resid;
    }
    return ssr;
}

}  // namespace

GevreyFit fit_decay(const PhaseField& field, double shell_min, double shell_max) {
    if (field.repr != Repr::EtaSpace) throw ContractError("fit_decay: field must be in EtaSpace");
    ShellData sh = collect_shells(field, shell_min, shell_max);
    if (sh.rho.size() < 8) {
        std::ostringstream msg;
        msg << "fit_decay: only " << sh.rho.size() << " usable shells in [" << shell_min << ", "
            << shell_max << "]; need at least 8";
        throw ContractError(msg.str());
    }

    // Coarse scan then golden refinement of the stretch exponent.
    double best_sigma = 0.05, best_ssr = std::numeric_limits<double>::infinity();
    double c = 0, logA = 0;
    for (double sigma = 0.05; sigma <= 1.6; sigma += 0.005) {
        double ssr = fit_for_sigma(sh, sigma, c, logA);
        if (ssr < best_ssr) {
            best_ssr = ssr;
            best_sigma = sigma;
        }
    }
    double lo = std::max(0.01, best_sigma - 0.01), hi = best_sigma + 0.01;
    constexpr double kGolden = 0.6180339887498949;
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double f1 = fit_for_sigma(sh, x1, c, logA), f2 = fit_for_sigma(sh, x2, c, logA);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = fit_for_sigma(sh, x1, c, logA);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = fit_for_sigma(sh, x2, c, logA);
        }
    }
    GevreyFit fit;
    fit.sigma = 0.5 * (lo + hi);
    fit.shells_used = static_cast<int>(sh.rho.size());
    double ssr = fit_for_sigma(sh, fit.sigma, fit.c, fit.logA);
    double mean = 0.0;
    for (double y : sh.logamp) mean += y;
    mean /= sh.logamp.size();
    double sstot = 0.0;
    for (double y : sh.logamp) sstot += (y - mean) * (y - mean);
    fit.r2 = (sstot > 0.0) ? std::max(0.0, 1.0 - ssr / sstot) : 0.0;
    fit.non_decaying = (fit.c <= 0.0 || fit.r2 < 0.2);
    return fit;
}

SharpnessReport sharpness_witness(double s, double r, double t, double c, const SharpnessConfig& cfg) {
    if (!(s > 0.0 && s < 1.0)) throw ContractError("sharpness_witness: need 0 < s < 1");
    ModeGrid g(1, cfg.M, 1, cfg.N_v, cfg.V);
    PhaseField f0(g, Repr::EtaSpace);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        double am = std::abs(static_cast<double>(g.mode_of(m)[0]));
        cplx* blk = f0.mode_block(m);
        for (std::size_t j = 0; j < g.n_vel(); ++j) {
            double ae = std::abs(g.eta_point(j)[0]);
            blk[j] = std::pow(1.0 + am + ae, -static_cast<double>(cfg.poly_order));
        }
    }
    PhaseField ft = (t > 0.0) ? exact_evolve(f0, t, ToySpec(s, 0.0, std::max(t, 1.0))) : f0;

    double R0 = cfg.base_radius > 0.0 ? cfg.base_radius : 0.25 * g.eta_max();
    SharpnessReport rep;
    rep.radii = {0.5 * R0, R0, 2.0 * R0, 4.0 * R0};

    double expo = 1.0 / (2.0 * r);
    std::vector<double> sums(rep.radii.size(), 0.0);
    for (std::size_t m = 0; m < g.n_modes(); ++m) {
        auto mv = g.mode_of(m);
        const cplx* blk = ft.mode_block(m);
        for (std::size_t j = 0; j < g.n_vel(); ++j) {
            double a2 = std::norm(blk[j]);
            if (a2 <= kAmpFloor) continue;
            double xi2 = xi_norm_sq(g, mv, j);
            double rho = std::sqrt(xi2);
            double term = a2 * std::exp(2.0 * c * std::pow(xi2, expo));
            for (std::size_t q = 0; q < rep.radii.size(); ++q)
                if (rho <= rep.radii[q]) sums[q] += term;
        }
    }
    rep.partial_sums = sums;
    for (std::size_t q = 1; q < sums.size(); ++q) rep.growth.push_back(sums[q] / sums[q - 1]);
    // increments S(R)-S(R/2), S(2R)-S(R), S(4R)-S(2R)
    for (std::size_t q = 2; q < sums.size(); ++q) {
        double prev = sums[q - 1] - sums[q - 2];
        double cur = sums[q] - sums[q - 1];
        rep.increment_ratio.push_back(prev > 0.0 ? cur / prev : 0.0);
    }
    rep.divergent = true;
    for (std::size_t q = 1; q < rep.growth.size(); ++q)  // skip the R/2 -> R warmup
        rep.divergent = rep.divergent && rep.growth[q] >= 10.0;
    rep.convergent = true;
    for (double rr : rep.increment_ratio) rep.convergent = rep.convergent && rr <= 0.5;
    if (!std::isfinite(sums.back())) {
        rep.divergent = true;
        rep.convergent = false;
    }
    return rep;
}

WeightedNormTable weighted_norms(const std::vector<PhaseField>& family, double lambda, int max_order,
                                 double s) {
    if (family.empty()) throw ContractError("weighted_norms: empty family");
    if (!(lambda > 1.0 + 1.0 / (2.0 * s))) {
        std::ostringstream msg;
        msg << "weighted_norms: lambda = " << lambda << " violates lambda > 1 + 1/(2s) = "
            << 1.0 + 1.0 / (2.0 * s);
        throw ContractError(msg.str());
    }
    const ModeGrid& g = family.front().grid;
    if (g.d_x != 1 || g.d_v != 1)
        throw ContractError("weighted_norms: implemented for d_x = d_v = 1 tables");
    WeightedNormTable tab;
    tab.lambda = lambda;
    tab.tau = std::max(1.0 / (2.0 * s), 1.0);

    double meas = vel_measure(g, Repr::EtaSpace);
    for (int a = 0; a <= max_order; ++a) {
        for (int b = 0; a + b <= max_order; ++b) {
            WeightedNormEntry ent;
            ent.a = a;
            ent.b = b;
            for (const PhaseField& f : family) {
                if (f.repr != Repr::EtaSpace)
                    throw ContractError("weighted_norms: family fields must be in EtaSpace");
                double t = f.time_tag;
                double acc = 0.0;
                for (std::size_t m = 0; m < g.n_modes(); ++m) {
                    double mm = std::abs(static_cast<double>(g.mode_of(m)[0]));
                    const cplx* blk = f.mode_block(m);
                    for (std::size_t j = 0; j < g.n_vel(); ++j) {
                        double ee = std::abs(g.eta_point(j)[0]);
                        double w = std::pow(mm, a) * std::pow(ee, b);
                        acc += w * w * std::norm(blk[j]);
                    }
                }
                double val = std::pow(t, (lambda + 1.0) * a + lambda * b) * std::sqrt(meas * acc);
                if (val > ent.value) {
                    ent.value = val;
                    ent.t_at_max = t;
                }
            }
            tab.entries.push_back(ent);
        }
    }

    tab.value_by_order.assign(max_order + 1, 0.0);
    for (const auto& e : tab.entries) {
        int k = e.a + e.b;
        tab.value_by_order[k] = std::max(tab.value_by_order[k], e.value);
    }
    // log(value_k / k!^tau) ~ intercept + k logC
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    double lgamma_acc = 0.0;
    for (int k = 0; k <= max_order; ++k) {
        if (k > 0) lgamma_acc += std::log(static_cast<double>(k));
        double vk = tab.value_by_order[k];
        if (vk <= 0.0) continue;
        double y = std::log(vk) - tab.tau * lgamma_acc;
        sx += k;
        sy += y;
        sxx += static_cast<double>(k) * k;
        sxy += k * y;
        ++n;
    }
    if (n >= 2) {
        double denom = n * sxx - sx * sx;
        tab.fit_logC = (n * sxy - sx * sy) / denom;
        tab.fit_intercept = (sy - tab.fit_logC * sx) / n;
        double ssr = 0.0;
        lgamma_acc = 0.0;
        for (int k = 0; k <= max_order; ++k) {
            if (k > 0) lgamma_acc += std::log(static_cast<double>(k));
            double vk = tab.value_by_order[k];
            if (vk <= 0.0) continue;
            double y = std::log(vk) - tab.tau * lgamma_acc;
            double resid = y - (tab.fit_intercept + tab.fit_logC * k);
            ssr += resid * resid;
        }
        tab.fit_residual = std::sqrt(ssr / n);
    }
    return tab;
}

MinkowskiReport minkowski_check(int j0, int n_modes, int n_times, int trials, std::uint64_t seed) {
    if (j0 < 1 || n_modes < 1 || n_times < 1 || trials < 1)
        throw ContractError("minkowski_check: all counts must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    MinkowskiReport rep;
    rep.trials = trials;
    double dt = 1.0 / n_times;
    int K = n_modes;  // modes -K..K
    int nm = 2 * K + 1;
    auto idx = [&](int m) { return m + K; };

    for (int trial = 0; trial < trials; ++trial) {
        // f[j][t][m], g[j][t][m], nonnegative with scattered support
        std::vector<std::vector<std::vector<double>>> f(j0), gg(j0);
        for (int j = 0; j < j0; ++j) {
            f[j].assign(n_times, std::vector<double>(nm, 0.0));
            gg[j].assign(n_times, std::vector<double>(nm, 0.0));
            for (int t = 0; t < n_times; ++t)
                for (int m = 0; m < nm; ++m) {
                    f[j][t][m] = unif(rng) < 0.7 ? unif(rng) : 0.0;
                    gg[j][t][m] = unif(rng) < 0.7 ? unif(rng) : 0.0;
                }
        }
        double lhs = 0.0;
        for (int m = -2 * K; m <= 2 * K; ++m) {
            double tsum = 0.0;
            for (int t = 0; t < n_times; ++t) {
                double conv = 0.0;
                for (int l = -K; l <= K; ++l) {
                    int md = m - l;
                    if (md < -K || md > K) continue;
                    for (int j = 0; j < j0; ++j) conv += f[j][t][idx(md)] * gg[j][t][idx(l)];
                }
                tsum += conv * conv * dt;
            }
            lhs += std::sqrt(tsum);
        }
        double rhs = 0.0;
        for (int j = 0; j < j0; ++j) {
            double supsum = 0.0;
            for (int m = 0; m < nm; ++m) {
                double mx = 0.0;
                for (int t = 0; t < n_times; ++t) mx = std::max(mx, f[j][t][m]);
                supsum += mx;
            }
            double l2sum = 0.0;
            for (int m = 0; m < nm; ++m) {
                double acc = 0.0;
                for (int t = 0; t < n_times; ++t) acc += gg[j][t][m] * gg[j][t][m] * dt;
                l2sum += std::sqrt(acc);
            }
            rhs += supsum * l2sum;
        }
        if (rhs > 0.0) rep.worst_ratio = std::max(rep.worst_ratio, lhs / rhs);
    }
    return rep;
}

}  // namespace kinlab
