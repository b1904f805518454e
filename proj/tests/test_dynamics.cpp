#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tprop/dynamics.hpp"
#include "tprop/errors.hpp"
#include "tprop/vop.hpp"

using namespace tprop;
using namespace tprop::dynamics;
using testutil::rel_err;

namespace {

// 3x3 Cramer solve of 2 omega x v + eta v = g
Vec3 solve_limit_3x3(const Vec3& w, double eta, const Vec3& g) {
    // matrix M = eta I + 2 [w]_x
    double M[3][3] = {{eta, -2 * w.z, 2 * w.y},
                      {2 * w.z, eta, -2 * w.x},
                      {-2 * w.y, 2 * w.x, eta}};
    auto det3 = [](double a[3][3]) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    double d = det3(M);
    Vec3 out;
    for (int c = 0; c < 3; ++c) {
        double N[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) N[i][j] = M[i][j];
        N[0][c] = g.x; N[1][c] = g.y; N[2][c] = g.z;
        out[c] = det3(N) / d;
    }
    return out;
}

std::pair<Vec3, Vec3> lorentz_rk4(const Particle& p, const UniformFields& f, const Vec3& r0,
                                  const Vec3& v0, double t_end, double dt) {
    Vec3 W = p.qm() * f.B, Q = p.qm() * f.E;
    return testutil::rk4_rv(
        [&](double, const Vec3&, const Vec3& v) {
            return std::pair<Vec3, Vec3>{v, -1.0 * cross(W, v) + Q};
        },
        r0, v0, t_end, dt);
}

}  // namespace

TEST_CASE("lorentz velocity") {
    Particle p{1.0, 1.0};
    SUBCASE("parallel launch is force free") {
        UniformFields f{{0, 0, 0}, {0, 0, 1.3}};
        Vec3 v0{0, 0, 0.7};
        for (double t : {0.1, 3.0, 17.0})
            CHECK(rel_err(lorentz_velocity(p, f, v0, t), v0) < 1e-14);
    }
    SUBCASE("full gyration restores the velocity") {
        UniformFields f{{0, 0, 0}, {0.4, -0.3, 1.0}};
        Vec3 v0{1.0, 0.2, -0.5};
        double period = 2.0 * M_PI / (std::fabs(p.qm()) * norm(f.B));
        CHECK(rel_err(lorentz_velocity(p, f, v0, period), v0) < 1e-12);
    }
    SUBCASE("electron in crossed fields matches the oracle over 5 periods") {
        Particle electron{1.0, -1.0};
        UniformFields f{{0, -0.2, 0}, {0, 0, 1.0}};
        Vec3 v0{1.0, 0, 0};
        double period = 2.0 * M_PI / (std::fabs(electron.qm()) * norm(f.B));
        double t_end = 5.0 * period;
        auto [r_o, v_o] = lorentz_rk4(electron, f, {0, 0, 0}, v0, t_end, period / 4000);
        CHECK(rel_err(lorentz_velocity(electron, f, v0, t_end), v_o) < 1e-9);
        CHECK(rel_err(lorentz_position(electron, f, {0, {0, 0, 0}, v0}, t_end), r_o) < 1e-9);
    }
    SUBCASE("B = 0 is uniform acceleration") {
        UniformFields f{{0.3, 0, -0.1}, {0, 0, 0}};
        Vec3 v0{1, 2, 3};
        CHECK(rel_err(lorentz_velocity(p, f, v0, 2.0), v0 + 2.0 * f.E) < 1e-14);
    }
}

TEST_CASE("lorentz position") {
    Particle p{2.0, -1.5};
    UniformFields f{{0.1, -0.2, 0.3}, {0.5, 0.5, -0.7}};
    ParticleState s0{0.0, {1, 2, 3}, {-0.3, 0.8, 0.1}};
    SUBCASE("starts at r0") { CHECK(rel_err(lorentz_position(p, f, s0, 0.0), s0.r) == 0.0); }
    SUBCASE("transverse circular orbit closes") {
        UniformFields fb{{0, 0, 0}, {0, 0, 2.0}};
        ParticleState c0{0.0, {0.5, -1, 2}, {0.9, 0.4, 0}};
        double period = 2.0 * M_PI / (std::fabs(p.qm()) * norm(fb.B));
        CHECK(norm(lorentz_position(p, fb, c0, period) - c0.r) < 1e-12 * norm(c0.v) * period);
    }
    SUBCASE("central difference equals the velocity") {
        double period = 2.0 * M_PI / (std::fabs(p.qm()) * norm(f.B));
        double h = 1e-6 * period;
        for (double t : {0.7, 1.9}) {
            Vec3 num = (lorentz_position(p, f, s0, t + h) - lorentz_position(p, f, s0, t - h)) /
                       (2 * h);
            CHECK(rel_err(num, lorentz_velocity(p, f, s0.v, t)) < 1e-6);
        }
    }
}

TEST_CASE("drift velocity") {
    CHECK(norm(drift_velocity({1, 0, 0}, {0, 0, 2}) - Vec3{0, -0.5, 0}) < 1e-16);
    CHECK(norm(drift_velocity({0, 0, 3}, {0, 0, 2})) == 0.0);
    CHECK_THROWS_AS(drift_velocity({1, 0, 0}, {0, 0, 0}), ZeroField);

    SUBCASE("gyro-average over whole periods") {
        Particle p{1.0, -1.0};
        UniformFields f{{0.15, -0.1, 0.0}, {0, 0, 0.9}};
        f.E -= dot(f.E, normalized(f.B)) * normalized(f.B);  // E perpendicular to B
        Vec3 v0{0.8, 0.3, 0.2};
        double period = 2.0 * M_PI / (std::fabs(p.qm()) * norm(f.B));
        double T = 8.0 * period;
        Vec3 avg = (lorentz_position(p, f, {0, {0, 0, 0}, v0}, T) - Vec3{0, 0, 0}) / T;
        Vec3 n = normalized(f.B);
        Vec3 transverse = avg - dot(avg, n) * n;
        CHECK(rel_err(transverse, drift_velocity(f.E, f.B)) < 1e-9);
    }
}

TEST_CASE("composed drift") {
    Vec3 E{0.2, 0.1, 0}, B{0, 0, 1.4};
    CHECK(norm(composed_drift(E, {0, 0, 0}, B) - drift_velocity(E, B)) == 0.0);
    CHECK(norm(composed_drift(E, -1.0 * E, B)) == 0.0);
    CHECK_THROWS_AS(composed_drift(E, E, {0, 0, 0}), ZeroField);
}

TEST_CASE("pseudo-momentum") {
    Particle p{1.0, 1.0};
    SUBCASE("trivial zero") {
        UniformFields f{{0, 0, 0}, {0, 0, 1}};
        ParticleState s{0.0, {0, 0, 0}, {0, 0, 0}};
        CHECK(norm(pseudo_momentum(p, f, s)) == 0.0);
    }
    SUBCASE("conserved along the closed forms") {
        Particle e{1.0, -1.0};
        UniformFields f{{0.1, 0.05, -0.2}, {0.3, -0.2, 1.0}};
        ParticleState s0{0.0, {0.4, -0.2, 0.8}, {1.0, 0.1, -0.6}};
        double wc = std::fabs(e.qm()) * norm(f.B);
        Vec3 pi0 = pseudo_momentum(e, f, s0);
        double scale = std::max(norm(pi0), e.mass * norm(s0.v));
        for (double t : {3.7 / wc, 20.0 / wc, 61.3 / wc}) {
            ParticleState st{t, lorentz_position(e, f, s0, t), lorentz_velocity(e, f, s0.v, t)};
            CHECK(norm(pseudo_momentum(e, f, st) - pi0) < 1e-9 * scale);
        }
    }
    SUBCASE("undefined without a magnetic field") {
        UniformFields f{{0.1, 0, 0}, {0, 0, 0}};
        CHECK_THROWS_AS(pseudo_momentum(p, f, {0, {0, 0, 0}, {1, 0, 0}}), ZeroField);
    }
    SUBCASE("constant along the rk4 trajectory") {
        UniformFields f{{0.1, 0, 0}, {0, 0, 1.0}};
        Vec3 r0{0, 0, 0}, v0{0.5, 0, 0.2};
        Vec3 pi0 = pseudo_momentum(p, f, {0, r0, v0});
        auto [r1, v1] = lorentz_rk4(p, f, r0, v0, 12.0, 0.001);
        Vec3 pi1 = pseudo_momentum(p, f, {12.0, r1, v1});
        CHECK(norm(pi1 - pi0) < 1e-8 * std::max(1.0, norm(pi0)));
    }
}

TEST_CASE("drude velocity") {
    Particle p{1.0, 1.0};
    SUBCASE("pure relaxation") {
        UniformFields f{{0, 0, 0}, {0, 0, 0}};
        Vec3 v0{1, -2, 0.5};
        CHECK(rel_err(drude_velocity(p, f, 2.0, v0, 3.0), std::exp(-1.5) * v0) < 1e-14);
    }
    SUBCASE("stationary state from the operator resolvent") {
        using cd = std::complex<double>;
        UniformFields f{{0.2, -0.1, 0.3}, {0.4, 0.8, -0.2}};
        double tau = 0.8;
        Vec3 vinf = analytic_function_apply([tau](cd z) { return 1.0 / (1.0 / tau + z); },
                                            Vop(p.qm() * f.B), p.qm() * f.E);
        CHECK(rel_err(drude_velocity(p, f, tau, {0.9, 0.1, -0.4}, 25.0 * tau), vinf) < 1e-9);
    }
    SUBCASE("rk4 oracle") {
        auto g = testutil::rng(31);
        for (int i = 0; i < 25; ++i) {
            UniformFields f{testutil::random_vec3(g), testutil::random_vec3(g)};
            double tau = testutil::uniform(g, 0.3, 3.0);
            Vec3 v0 = testutil::random_vec3(g);
            double t = testutil::uniform(g, 0.5, 6.0);
            Vec3 W = p.qm() * f.B, Q = p.qm() * f.E;
            Vec3 want = testutil::rk4_vec3(
                [&](double, const Vec3& v) { return -1.0 * cross(W, v) + Q - v / tau; }, v0, t,
                t / 6000);
            CHECK(rel_err(drude_velocity(p, f, tau, v0, t), want) < 1e-9);
        }
    }
}

TEST_CASE("coriolis velocity") {
    SUBCASE("free fall when undamped and non-rotating") {
        CoriolisEnv env{{0, 0, 0}, {0, 0, -9.8}, 0.0};
        Vec3 v0{1, 0, 2};
        CHECK(rel_err(coriolis_velocity(env, v0, 3.0), v0 + 3.0 * env.g) < 1e-14);
    }
    SUBCASE("45 degrees north, body at rest, against the oracle") {
        double w = 7.2921159e-5, lat = M_PI / 4;
        CoriolisEnv env{{0, w * std::cos(lat), w * std::sin(lat)}, {0, 0, -9.80665}, 0.1};
        Vec3 v0{0, 0, 0};
        for (double t : {5.0, 30.0, 90.0}) {
            Vec3 want = testutil::rk4_vec3(
                [&](double, const Vec3& v) {
                    return -2.0 * cross(env.omega, v) - env.eta * v + env.g;
                },
                v0, t, t / 20000);
            CHECK(rel_err(coriolis_velocity(env, v0, t), want) < 1e-9);
        }
    }
    SUBCASE("long-time limit") {
        // the transient decays as e^{-eta t}, which is 2.06e-9 at t = 20/eta;
        // probe just past that point for the 1e-9 agreement
        CoriolisEnv env{{0.02, -0.01, 0.04}, {0.1, -0.3, -1.0}, 0.5};
        Vec3 vstar = limit_velocity(env);
        CHECK(rel_err(coriolis_velocity(env, {1, 1, 1}, 22.0 / env.eta), vstar) < 1e-9);
    }
}

TEST_CASE("coriolis position") {
    CoriolisEnv env{{0.01, 0.03, 0.05}, {0, 0, -9.8}, 0.2};
    ParticleState s0{0.0, {10, -5, 100}, {0.4, -0.1, 0}};
    SUBCASE("starts at r0") { CHECK(norm(coriolis_position(env, s0, 0.0) - s0.r) == 0.0); }
    SUBCASE("parabola limit") {
        CoriolisEnv free{{0, 0, 0}, {0, 0, -9.8}, 0.0};
        Vec3 want = s0.r + 2.0 * s0.v + 2.0 * free.g;  // t = 2: r0 + v0 t + g t^2/2
        CHECK(rel_err(coriolis_position(free, s0, 2.0), want) < 1e-14);
    }
    SUBCASE("derivative matches the velocity") {
        double h = 1e-6;
        for (double t : {1.0, 7.0, 23.0}) {
            Vec3 num =
                (coriolis_position(env, s0, t + h) - coriolis_position(env, s0, t - h)) / (2 * h);
            CHECK(rel_err(num, coriolis_velocity(env, s0.v, t)) < 1e-6);
        }
    }
    SUBCASE("oracle on the full state") {
        auto [r_o, v_o] = testutil::rk4_rv(
            [&](double, const Vec3&, const Vec3& v) {
                return std::pair<Vec3, Vec3>{v, -2.0 * cross(env.omega, v) - env.eta * v + env.g};
            },
            s0.r, s0.v, 15.0, 15.0 / 30000);
        CHECK(rel_err(coriolis_position(env, s0, 15.0), r_o) < 1e-9);
        CHECK(rel_err(coriolis_velocity(env, s0.v, 15.0), v_o) < 1e-9);
    }
}

TEST_CASE("limit velocity") {
    SUBCASE("pure drag") {
        CoriolisEnv env{{0, 0, 0}, {0, 0, -9.8}, 0.25};
        CHECK(rel_err(limit_velocity(env), env.g / env.eta) == 0.0);
    }
    SUBCASE("rotation parallel to gravity collapses to pure drag") {
        CoriolisEnv env{{0, 0, 0.3}, {0, 0, -9.8}, 0.25};
        CHECK(rel_err(limit_velocity(env), env.g / env.eta) < 1e-15);
    }
    SUBCASE("agrees with the 3x3 linear solve") {
        auto g = testutil::rng(32);
        for (int i = 0; i < 100; ++i) {
            CoriolisEnv env{testutil::random_vec3(g, -0.5, 0.5), testutil::random_vec3(g, -2, 2),
                            testutil::uniform(g, 0.05, 2.0)};
            Vec3 direct = solve_limit_3x3(env.omega, env.eta, env.g);
            Vec3 formula = limit_velocity(env);
            CHECK(rel_err(formula, direct) < 1e-12);
            Vec3 residual = 2.0 * cross(env.omega, formula) + env.eta * formula - env.g;
            CHECK(norm(residual) < 1e-12 * norm(env.g));
        }
    }
    SUBCASE("no limit without drag") {
        CHECK_THROWS_AS(limit_velocity(CoriolisEnv{{0, 0, 1}, {0, 0, -9.8}, 0.0}), NoLimit);
    }
}

TEST_CASE("speed conservation without electric field") {
    Particle p{1.0, -1.0};
    UniformFields f{{0, 0, 0}, {0.2, 0.9, -0.4}};
    Vec3 v0{1.2, -0.3, 0.5};
    double period = 2.0 * M_PI / (std::fabs(p.qm()) * norm(f.B));
    for (int j = 0; j <= 100; ++j) {
        double t = 10.0 * period * j / 100;
        CHECK(std::fabs(norm(lorentz_velocity(p, f, v0, t)) - norm(v0)) < 1e-12 * norm(v0));
    }
}
