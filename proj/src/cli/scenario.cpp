#include "tprop/cli/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>

#include "tprop/cli/csv.hpp"
#include "tprop/cli/presets.hpp"
#include "tprop/disentangle.hpp"
#include "tprop/dynamics.hpp"
#include "tprop/oracle.hpp"
#include "tprop/radiation.hpp"
#include "tprop/secondorder.hpp"
#include "tprop/stepping.hpp"
#include "tprop/timedep.hpp"
#include "tprop/vop.hpp"

namespace tprop::cli {

namespace {

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty() || dir == ".") return file;
    return dir.back() == '/' ? dir + file : dir + "/" + file;
}

double slope_fit(const std::vector<double>& x, const std::vector<double>& y) {
    // least-squares slope of log(y) vs log(x), ignoring zero errors
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (y[i] <= 0.0) continue;
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

using dynamics::Particle;
using dynamics::ParticleState;
using dynamics::UniformFields;

void run_lorentz_static(const ScenarioConfig& cfg, const std::string& out_dir,
                        RunReport& rep) {
    Particle p{cfg.num("particle.mass"), cfg.num("particle.charge")};
    UniformFields f{cfg.vec3("fields.E"), cfg.vec3("fields.B")};
    ParticleState s0;
    s0.r = cfg.vec3("initial.r0");
    s0.v = cfg.vec3("initial.v0");

    double omega_c = std::fabs(p.qm()) * norm(f.B);
    double period = 2.0 * M_PI / omega_c;
    int per_period = static_cast<int>(cfg.num("numerics.samples_per_period"));
    int n = static_cast<int>(cfg.num("numerics.periods") * per_period);
    double dt = period / per_period;

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "x", "y", "z", "vx", "vy", "vz"});
    double v0n = norm(s0.v);
    Vec3 pi0 = dynamics::pseudo_momentum(p, f, s0);
    double pi_scale = std::max(norm(pi0), p.mass * v0n);
    double speed_drift = 0.0, pi_drift = 0.0;
    for (int j = 0; j <= n; ++j) {
        double t = j * dt;
        Vec3 v = dynamics::lorentz_velocity(p, f, s0.v, t);
        Vec3 r = dynamics::lorentz_position(p, f, s0, t);
        csv.row({t, r.x, r.y, r.z, v.x, v.y, v.z});
        if (norm(f.E) == 0.0 && v0n > 0.0)
            speed_drift = std::max(speed_drift, std::fabs(norm(v) - v0n) / v0n);
        ParticleState st{t, r, v};
        pi_drift = std::max(pi_drift,
                            norm(dynamics::pseudo_momentum(p, f, st) - pi0) / pi_scale);
    }
    rep.outputs.push_back(path);
    if (norm(f.E) == 0.0) {
        double bound = cfg.num("numerics.speed_drift_bound");
        rep.diagnostics.push_back({"speed_drift", speed_drift, bound, speed_drift <= bound});
    }
    double pb = cfg.num("numerics.pseudo_momentum_bound");
    rep.diagnostics.push_back({"pseudo_momentum_drift", pi_drift, pb, pi_drift <= pb});
}

void run_coriolis_fall(const ScenarioConfig& cfg, const std::string& out_dir,
                       RunReport& rep) {
    double lat = cfg.num("coriolis.latitude_deg") * M_PI / 180.0;
    double w = cfg.num("coriolis.omega_mag");
    dynamics::CoriolisEnv env;
    env.omega = {0.0, w * std::cos(lat), w * std::sin(lat)};  // x east, y north, z up
    env.g = {0.0, 0.0, -cfg.num("coriolis.g")};
    env.eta = cfg.num("coriolis.eta");
    ParticleState s0;
    s0.r = cfg.vec3("initial.r0");
    s0.v = cfg.vec3("initial.v0");

    double t_end = cfg.num("numerics.t_end");
    int n = static_cast<int>(cfg.num("numerics.n_samples"));
    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "x", "y", "z", "vx", "vy", "vz"});
    for (int j = 0; j <= n; ++j) {
        double t = t_end * j / n;
        Vec3 v = dynamics::coriolis_velocity(env, s0.v, t);
        Vec3 r = dynamics::coriolis_position(env, s0, t);
        csv.row({t, r.x, r.y, r.z, v.x, v.y, v.z});
    }
    rep.outputs.push_back(path);

    // position/velocity consistency by central differences
    double h = 1e-6 * t_end;
    double dev = 0.0;
    for (int j = 1; j < 8; ++j) {
        double t = t_end * j / 8.0;
        Vec3 num = (dynamics::coriolis_position(env, s0, t + h) -
                    dynamics::coriolis_position(env, s0, t - h)) / (2.0 * h);
        Vec3 v = dynamics::coriolis_velocity(env, s0.v, t);
        dev = std::max(dev, norm(num - v) / std::max(1.0, norm(v)));
    }
    double db = cfg.num("numerics.derivative_check_bound");
    rep.diagnostics.push_back({"velocity_derivative_check", dev, db, dev <= db});

    if (env.eta > 0.0) {
        Vec3 vstar = dynamics::limit_velocity(env);
        double res = norm(2.0 * cross(env.omega, vstar) + env.eta * vstar - env.g) /
                     norm(env.g);
        rep.diagnostics.push_back({"limit_velocity_residual", res, 1e-12, res <= 1e-12});
        // tail bound of the transient: |v(t) - v*| <= e^{-eta t}(|v0| + |g|/eta)
        Vec3 vend = dynamics::coriolis_velocity(env, s0.v, t_end);
        double conv = norm(vend - vstar) / norm(vstar);
        double cb = 2.0 * std::exp(-env.eta * t_end) *
                        (norm(s0.v) + norm(env.g) / env.eta) / norm(vstar) +
                    1e-12;
        rep.diagnostics.push_back({"limit_velocity_convergence", conv, cb, conv <= cb});
    }
}

void run_field_map(const ScenarioConfig& cfg, const std::string& out_dir, RunReport& rep) {
    Particle p{cfg.num("particle.mass"), cfg.num("particle.charge")};
    double B0 = cfg.num("fieldmap.B0");
    double L = cfg.num("fieldmap.L");
    const std::string& kind = cfg.str("fieldmap.kind");
    stepping::FieldMap map;
    if (kind == "linear-x") {
        map.B_of_r = [B0, L](const Vec3& r) { return Vec3{0.0, 0.0, B0 * (1.0 + r.x / L)}; };
    } else if (kind == "plane-hyperbolic") {
        map.B_of_r = [B0](const Vec3& r) { return Vec3{B0 * r.x, -B0 * r.y, 0.0}; };
    } else {
        throw ValidationError("fieldmap.kind", "expected linear-x or plane-hyperbolic");
    }
    ParticleState s0;
    s0.r = cfg.vec3("initial.r0");
    s0.v = cfg.vec3("initial.v0");

    auto traj = stepping::propagate_field_map(p, map, s0,
                                              cfg.num("numerics.delta"),
                                              static_cast<int>(cfg.num("numerics.n_steps")),
                                              cfg.boolean("numerics.midpoint"));

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "x", "y", "z", "vx", "vy", "vz"});
    double drift = 0.0;
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& s = traj.samples[i];
        csv.row({s.t, s.r.x, s.r.y, s.r.z, s.v.x, s.v.y, s.v.z});
        if (i > 0) {
            double prev = norm(traj.samples[i - 1].v);
            drift = std::max(drift, std::fabs(norm(s.v) - prev) / prev);
        }
    }
    rep.outputs.push_back(path);
    double b = cfg.num("numerics.speed_step_bound");
    rep.diagnostics.push_back({"speed_step_drift", drift, b, drift <= b});
}

void run_relativistic(const ScenarioConfig& cfg, const std::string& out_dir,
                      RunReport& rep) {
    Particle p{cfg.num("particle.mass"), cfg.num("particle.charge")};
    UniformFields f{cfg.vec3("fields.E"), cfg.vec3("fields.B")};
    double c = cfg.num("numerics.c");
    Vec3 v0 = cfg.vec3("initial.v0");
    double gamma0 = 1.0 / std::sqrt(1.0 - norm2(v0) / (c * c));
    stepping::RelState s0;
    s0.r = cfg.vec3("initial.r0");
    s0.Lambda = gamma0 * v0;

    double omega_c = std::fabs(p.qm()) * norm(f.B);
    double period = 2.0 * M_PI / omega_c;
    int spp = static_cast<int>(cfg.num("numerics.steps_per_period"));
    int n = static_cast<int>(cfg.num("numerics.periods") * spp);
    auto traj = stepping::propagate_relativistic(p, f, s0, period / spp, n, c);

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "x", "y", "z", "vx", "vy", "vz", "gamma"});
    for (const auto& s : traj.samples) {
        Vec3 v = s.velocity(c);
        csv.row({s.t, s.r.x, s.r.y, s.r.z, v.x, v.y, v.z, s.gamma(c)});
    }
    rep.outputs.push_back(path);

    double residual = stepping::kinetic_energy_check(traj, p.qm() * f.E);
    double rel = residual / norm2(s0.Lambda);
    double b = cfg.num("numerics.energy_residual_bound");
    rep.diagnostics.push_back({"energy_residual", rel, b, rel <= b});
}

radiation::RadiationGeometry geometry_from(const ScenarioConfig& cfg) {
    radiation::RadiationGeometry g;
    g.q = normalized(cfg.vec3("radiation.q"));
    g.n = normalized(cfg.vec3("radiation.n"));
    g.beta0 = cfg.vec3("radiation.beta0");
    g.Omega = cfg.num("radiation.Omega");
    g.T_obs = cfg.num("radiation.T_periods") * 2.0 * M_PI / g.Omega;
    return g;
}

void run_spectrum(const ScenarioConfig& cfg, const std::string& out_dir, RunReport& rep) {
    radiation::RadiationGeometry g = geometry_from(cfg);
    double omega1 = radiation::harmonic_frequencies(g, 1)[0];
    double lo = cfg.num("grid.omega_min_harmonics") * omega1;
    double hi = cfg.num("grid.omega_max_harmonics") * omega1;
    int npts = static_cast<int>(cfg.num("grid.n_points"));
    if (npts < 2) throw ValidationError("grid.n_points", "need at least 2 points");
    std::vector<double> grid(npts);
    for (int i = 0; i < npts; ++i) grid[i] = lo + (hi - lo) * i / (npts - 1);

    int r_max = static_cast<int>(cfg.num("numerics.r_max"));
    if (r_max <= 0) r_max = radiation::default_r_max(g, hi);
    auto samples = radiation::spectrum(g, grid, r_max);

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"omega", "intensity", "re_sx", "im_sx", "re_sy", "im_sy",
                         "re_sz", "im_sz"});
    double min_intensity = 0.0;
    for (const auto& s : samples) {
        csv.row({s.omega, s.intensity, s.S.x.real(), s.S.x.imag(), s.S.y.real(),
                 s.S.y.imag(), s.S.z.real(), s.S.z.imag()});
        min_intensity = std::min(min_intensity, s.intensity);
    }
    rep.outputs.push_back(path);
    rep.diagnostics.push_back(
        {"min_intensity", min_intensity, 0.0, min_intensity >= 0.0});

    // conjugate symmetry: |S(-omega)| must equal |S(omega)|
    double worst = 0.0;
    for (int i = 0; i < npts; i += npts / 7 + 1) {
        double m1 = radiation::norm(radiation::s_vector(g, grid[i], r_max));
        double m2 = radiation::norm(radiation::s_vector(g, -grid[i], r_max));
        if (m1 > 0.0) worst = std::max(worst, std::fabs(m1 - m2) / m1);
    }
    double rb = cfg.num("numerics.reality_bound");
    rep.diagnostics.push_back({"conjugate_symmetry", worst, rb, worst <= rb});
}

void run_lineshape(const ScenarioConfig& cfg, const std::string& out_dir, RunReport& rep) {
    Particle p{cfg.num("particle.mass"), cfg.num("particle.charge")};
    radiation::RadiationGeometry g = geometry_from(cfg);
    Vec3 Q = p.qm() * cfg.vec3("fields.E");
    int harmonic = static_cast<int>(cfg.num("grid.harmonic"));
    double omega_h = radiation::harmonic_frequencies(g, harmonic).back();
    double width = cfg.num("grid.rel_width");
    int npts = static_cast<int>(cfg.num("grid.n_points"));
    // quad_tol is relative to the natural line scale T_obs
    double tol = cfg.num("numerics.quad_tol") * g.T_obs;
    double c2 = radiation::harmonic_coefficients(g).c2;

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"omega", "f2_no_field", "f2_with_field"});
    double sinc_dev = 0.0;
    for (int i = 0; i < npts; ++i) {
        double omega = omega_h * (1.0 - width + 2.0 * width * i / (npts - 1));
        double phi_r = -harmonic * g.Omega + omega * c2;
        auto Fa = radiation::lineshape_with_field(phi_r, omega, Vec3{}, g.q, g.T_obs,
                                                  g.c, tol);
        auto Fb = radiation::lineshape_with_field(phi_r, omega, Q, g.q, g.T_obs, g.c, tol);
        csv.row({omega, std::norm(Fa), std::norm(Fb)});
        // chirp-free limit must reproduce the sinc lineshape
        double half = 0.5 * phi_r * g.T_obs;
        std::complex<double> sinc_form =
            g.T_obs * std::exp(std::complex<double>(0.0, half)) *
            (half == 0.0 ? 1.0 : std::sin(half) / half);
        sinc_dev = std::max(sinc_dev, std::abs(Fa - sinc_form) / g.T_obs);
    }
    rep.outputs.push_back(path);
    double sb = cfg.num("numerics.sinc_check_bound");
    rep.diagnostics.push_back({"sinc_limit_check", sinc_dev, sb, sinc_dev <= sb});
}

void run_zassenhaus(const ScenarioConfig& cfg, const std::string& out_dir, RunReport& rep) {
    disentangle::TorquePair pair{cfg.vec3("pair.omega1"), cfg.vec3("pair.omega2")};
    Vec3 s0 = normalized(cfg.vec3("initial.s0"));
    double t0 = cfg.num("study.t0");
    int levels = static_cast<int>(cfg.num("study.n_levels"));
    Vop exact_op(pair.omega1 + pair.omega2);

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "err_first_order", "err_symmetric"});
    std::vector<double> ts, e1, e2;
    for (int k = 0; k < levels; ++k) {
        double t = t0 / double(1 << k);
        Vec3 exact = rodrigues_propagate(exact_op, t, s0);
        double err1 = norm(disentangle::zassenhaus_first_order(pair, t, s0) - exact);
        double err2 = norm(disentangle::symmetric_split(pair, t, s0) - exact);
        csv.row({t, err1, err2});
        ts.push_back(t);
        e1.push_back(err1);
        e2.push_back(err2);
    }
    rep.outputs.push_back(path);
    double bound = cfg.num("numerics.slope_bound");
    double s1 = slope_fit(ts, e1), s2 = slope_fit(ts, e2);
    rep.diagnostics.push_back({"first_order_slope", s1, bound, s1 >= bound});
    rep.diagnostics.push_back({"symmetric_slope", s2, bound, s2 >= bound});
}

void run_magnus_demo(const ScenarioConfig& cfg, const std::string& out_dir,
                     RunReport& rep) {
    double W0 = cfg.num("magnus.Omega0");
    double wr = cfg.num("magnus.omega_rot");
    double T = cfg.num("study.t_total");
    int levels = static_cast<int>(cfg.num("study.n_levels"));
    int n_quad = static_cast<int>(cfg.num("numerics.n_quad"));
    auto omega_of = [W0, wr](double t) {
        return Vec3{W0 * std::cos(wr * t), W0 * std::sin(wr * t), 0.0};
    };
    Vec3 s0{0.0, 0.0, 1.0};

    // dense reference
    oracle::DerivativeField rhs = [&](double t, std::span<const double> s,
                                      std::span<double> ds) {
        Vec3 w = omega_of(t);
        Vec3 v{s[0], s[1], s[2]};
        Vec3 d = -1.0 * cross(w, v);
        ds[0] = d.x; ds[1] = d.y; ds[2] = d.z;
    };
    double ref0[3] = {s0.x, s0.y, s0.z};
    auto ref = oracle::rk4_integrate(rhs, std::span<const double>(ref0, 3), T, T / 200000.0);
    Vec3 vref{ref.states.back()[0], ref.states.back()[1], ref.states.back()[2]};

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"h", "err"});
    std::vector<double> hs, errs;
    double norm_drift = 0.0;
    for (int k = 0; k < levels; ++k) {
        int steps = 1 << k;
        double h = T / steps;
        Vec3 s = s0;
        for (int j = 0; j < steps; ++j) {
            double t0 = j * h;
            timedep::TimeTorque shifted{[&, t0](double tau) { return omega_of(t0 + tau); }};
            s = timedep::magnus2_propagate(shifted, h, s, n_quad);
        }
        norm_drift = std::max(norm_drift, std::fabs(norm(s) - norm(s0)) / norm(s0));
        double err = norm(s - vref);
        csv.row({h, err});
        hs.push_back(h);
        errs.push_back(err);
    }
    rep.outputs.push_back(path);
    double nb = cfg.num("numerics.norm_drift_bound");
    rep.diagnostics.push_back({"norm_drift", norm_drift, nb, norm_drift <= nb});
    double slope = slope_fit(hs, errs);
    rep.diagnostics.push_back({"order_slope", slope, 3.5, slope >= 3.5});
}

void run_llg_demo(const ScenarioConfig& cfg, const std::string& out_dir, RunReport& rep) {
    stepping::LlgParams lp{cfg.num("llg.alpha"), cfg.num("llg.beta"), cfg.vec3("llg.H")};
    Vec3 M = cfg.vec3("initial.M0");
    double delta = cfg.num("numerics.delta");
    int n = static_cast<int>(cfg.num("numerics.n_steps"));

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "Mx", "My", "Mz", "angle_to_H"});
    double m0 = norm(M);
    double norm_drift = 0.0, angle_increase = 0.0;
    double prev_angle = std::acos(dot(M, lp.H) / (m0 * norm(lp.H)));
    csv.row({0.0, M.x, M.y, M.z, prev_angle});
    for (int j = 1; j <= n; ++j) {
        Vec3 next = stepping::llg_step(M, lp, delta);
        norm_drift = std::max(norm_drift, std::fabs(norm(next) - norm(M)) / norm(M));
        M = next;
        double angle = std::acos(std::clamp(dot(M, lp.H) / (norm(M) * norm(lp.H)), -1.0, 1.0));
        angle_increase = std::max(angle_increase, angle - prev_angle);
        prev_angle = angle;
        csv.row({j * delta, M.x, M.y, M.z, angle});
    }
    rep.outputs.push_back(path);
    double nb = cfg.num("numerics.norm_step_bound");
    rep.diagnostics.push_back({"norm_step_drift", norm_drift, nb, norm_drift <= nb});
    rep.diagnostics.push_back(
        {"alignment_monotone_violation", angle_increase, 1e-12, angle_increase <= 1e-12});
}

void run_radiation_reaction(const ScenarioConfig& cfg, const std::string& out_dir,
                            RunReport& rep) {
    secondorder::RadiationReactionParams params;
    params.tau = cfg.num("rr.tau");
    params.Omega = cfg.vec3("rr.Omega");
    Vec3 Q = cfg.vec3("rr.Q");
    auto Q_of = [Q](double) { return Q; };
    double t_end = cfg.num("numerics.t_end_tau") * params.tau;
    int n = static_cast<int>(cfg.num("numerics.n_samples"));
    double tol = cfg.num("numerics.quad_tol");

    std::string path = join_path(out_dir, cfg.str("output.file"));
    CsvWriter csv(path, {"t", "vx", "vy", "vz", "ax", "ay", "az"});
    double agree = 0.0, scale = 0.0;
    for (int j = 0; j <= n; ++j) {
        double t = t_end * j / n;
        auto [v, a] = secondorder::rr_matrix_propagate(params, Vec3{}, Vec3{}, Q_of, t, tol);
        csv.row({t, v.x, v.y, v.z, a.x, a.y, a.z});
        if (j % (n / 16 + 1) == 0) {
            Vec3 vf = secondorder::rr_forced_velocity(params, Q_of, t, tol);
            agree = std::max(agree, norm(vf - v));
            scale = std::max(scale, norm(v));
        }
    }
    rep.outputs.push_back(path);
    double rel = (scale > 0.0) ? agree / scale : agree;
    double b = cfg.num("numerics.agreement_bound");
    rep.diagnostics.push_back({"formulation_agreement", rel, b, rel <= b});
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& cfg, const std::string& out_dir) {
    RunReport rep;
    rep.scenario = cfg.scenario;
    auto start = std::chrono::steady_clock::now();
    try {
        if (cfg.scenario == "lorentz-static") run_lorentz_static(cfg, out_dir, rep);
        else if (cfg.scenario == "coriolis-fall") run_coriolis_fall(cfg, out_dir, rep);
        else if (cfg.scenario == "field-map") run_field_map(cfg, out_dir, rep);
        else if (cfg.scenario == "relativistic") run_relativistic(cfg, out_dir, rep);
        else if (cfg.scenario == "spectrum") run_spectrum(cfg, out_dir, rep);
        else if (cfg.scenario == "lineshape") run_lineshape(cfg, out_dir, rep);
        else if (cfg.scenario == "zassenhaus-order") run_zassenhaus(cfg, out_dir, rep);
        else if (cfg.scenario == "magnus-demo") run_magnus_demo(cfg, out_dir, rep);
        else if (cfg.scenario == "llg-demo") run_llg_demo(cfg, out_dir, rep);
        else if (cfg.scenario == "radiation-reaction") run_radiation_reaction(cfg, out_dir, rep);
        else throw ValidationError("scenario", "unknown scenario " + cfg.scenario);
    } catch (const ValidationError&) {
        throw;  // config problems keep their own type and exit code
    } catch (const Error& e) {
        throw Error("scenario " + cfg.scenario + ": " + e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<std::pair<std::string, std::string>> list_scenarios() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : presets()) out.emplace_back(p.name, p.description);
    return out;
}

}  // namespace tprop::cli
