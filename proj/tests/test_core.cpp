#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tprop/dynamics.hpp"
#include "tprop/errors.hpp"
#include "tprop/vop.hpp"

using namespace tprop;
using testutil::rel_err;

TEST_CASE("cross product basics") {
    CHECK(norm(cross({1, 0, 0}, {0, 1, 0}) - Vec3{0, 0, 1}) == 0.0);
    CHECK(norm(cross({0, 0, 2}, {0, 0, 5})) == 0.0);
    CHECK(norm(cross({1, 2, 3}, {4, 5, 6}) - Vec3{-3, 6, -3}) == 0.0);

    auto g = testutil::rng(11);
    for (int i = 0; i < 200; ++i) {
        Vec3 a = testutil::random_vec3(g, -5, 5), b = testutil::random_vec3(g, -5, 5);
        CHECK(norm(cross(a, b) + cross(b, a)) == 0.0);  // anticommutative
        CHECK(std::fabs(dot(a, cross(a, b))) < 1e-13 * norm(a) * norm(a) * norm(b));
    }
}

TEST_CASE("vop powers") {
    Vop op({0, 0, 1});
    Vec3 s0{1, 0, 0};
    auto g = testutil::rng(12);
    Vec3 any = testutil::random_vec3(g);
    CHECK(norm(vop_power_apply(op, 0, any) - any) == 0.0);
    CHECK(norm(vop_power_apply(op, 1, s0) - Vec3{0, 1, 0}) == 0.0);
    CHECK(norm(vop_power_apply(op, 2, s0) - Vec3{-1, 0, 0}) == 0.0);
}

TEST_CASE("series propagator") {
    Vop op({0, 0, 1});
    Vec3 s0{1, 0, 0};
    auto g = testutil::rng(13);
    Vec3 any = testutil::random_vec3(g);
    CHECK(norm(series_propagate(op, 0.0, any, 30) - any) == 0.0);
    CHECK(norm(series_propagate(op, 2.5, any, 1) - any) == 0.0);
    CHECK(norm(series_propagate(op, 0.3, s0, 40) - rodrigues_propagate(op, 0.3, s0)) < 1e-14);
}

TEST_CASE("rodrigues rotation") {
    SUBCASE("axis fixed point") {
        Vop op({0.3, -0.4, 0.5});
        Vec3 s0 = 2.0 * op.torque;
        CHECK(rel_err(rodrigues_propagate(op, 7.7, s0), s0) < 1e-15);
    }
    SUBCASE("quarter turn") {
        CHECK(norm(rodrigues_propagate(Vop({0, 0, 1}), M_PI / 2, {1, 0, 0}) - Vec3{0, 1, 0}) <
              1e-15);
    }
    SUBCASE("series oracle") {
        auto g = testutil::rng(14);
        for (int i = 0; i < 200; ++i) {
            Vec3 torque = testutil::random_vec3(g, -2, 2);
            Vec3 s0 = testutil::random_vec3(g, -3, 3);
            double t = testutil::uniform(g, 0.0, 10.0 / std::max(0.2, norm(torque)));
            Vop op(torque);
            CHECK(norm(rodrigues_propagate(op, t, s0) - series_propagate(op, t, s0, 60)) <
                  1e-12 * std::max(1.0, norm(s0)));
        }
    }
    SUBCASE("norm preservation, 1000 cases") {
        auto g = testutil::rng(15);
        for (int i = 0; i < 1000; ++i) {
            Vec3 torque = testutil::random_vec3(g, -4, 4);
            Vec3 s0 = testutil::random_vec3(g, -3, 3);
            double t = testutil::uniform(g, -8, 8);
            double n0 = norm(s0);
            double n1 = norm(rodrigues_propagate(Vop(torque), t, s0));
            CHECK(std::fabs(n1 - n0) < 1e-13 * std::max(1.0, n0));
        }
    }
    SUBCASE("group property") {
        auto g = testutil::rng(16);
        for (int i = 0; i < 100; ++i) {
            Vop op(testutil::random_vec3(g, -2, 2));
            Vec3 s0 = testutil::random_vec3(g);
            double t1 = testutil::uniform(g, -3, 3), t2 = testutil::uniform(g, -3, 3);
            Vec3 two = rodrigues_propagate(op, t2, rodrigues_propagate(op, t1, s0));
            Vec3 one = rodrigues_propagate(op, t1 + t2, s0);
            CHECK(norm(two - one) < 1e-12 * std::max(1.0, norm(s0)));
        }
    }
    SUBCASE("zero torque is the identity") {
        CHECK(norm(rodrigues_propagate(Vop({0, 0, 0}), 3.0, {1, 2, 3}) - Vec3{1, 2, 3}) == 0.0);
    }
}

TEST_CASE("inhomogeneous propagator") {
    auto g = testutil::rng(17);
    SUBCASE("zero drive reduces to the rotation") {
        Vop op({0.2, 1.0, -0.3});
        Vec3 s0 = testutil::random_vec3(g);
        CHECK(norm(inhomogeneous_propagate(op, {0, 0, 0}, 2.1, s0) -
                   rodrigues_propagate(op, 2.1, s0)) < 1e-14);
    }
    SUBCASE("zero torque drifts linearly") {
        Vec3 s0{1, -2, 0.5}, n{0.3, 0.1, -0.2};
        CHECK(norm(inhomogeneous_propagate(Vop({0, 0, 0}), n, 4.0, s0) - (s0 + 4.0 * n)) <
              1e-14);
    }
    SUBCASE("rk4 oracle") {
        for (int i = 0; i < 40; ++i) {
            Vec3 torque = testutil::random_vec3(g, -2, 2);
            Vec3 nv = testutil::random_vec3(g, -1, 1);
            Vec3 s0 = testutil::random_vec3(g, -2, 2);
            double t = testutil::uniform(g, 0.2, 4.0);
            Vec3 got = inhomogeneous_propagate(Vop(torque), nv, t, s0);
            Vec3 want = testutil::rk4_vec3(
                [&](double, const Vec3& s) { return cross(torque, s) + nv; }, s0, t, t / 4000);
            CHECK(norm(got - want) < 1e-9 * std::max(1.0, norm(want)));
        }
    }
    SUBCASE("derivative matches the defining equation") {
        Vec3 torque{0.7, -0.2, 0.4}, nv{0.1, 0.3, -0.5}, s0{1, 0.5, -1};
        Vop op(torque);
        double h = 1e-5;
        for (double t : {0.3, 1.1, 2.6}) {
            Vec3 ds = (inhomogeneous_propagate(op, nv, t + h, s0) -
                       inhomogeneous_propagate(op, nv, t - h, s0)) / (2 * h);
            Vec3 s = inhomogeneous_propagate(op, nv, t, s0);
            CHECK(norm(ds - (cross(torque, s) + nv)) < 1e-6);
        }
    }
}

TEST_CASE("analytic function of the operator") {
    using cd = std::complex<double>;
    auto g = testutil::rng(18);
    SUBCASE("exponential reproduces the rotation") {
        for (int i = 0; i < 100; ++i) {
            Vec3 torque = testutil::random_vec3(g, -2, 2);
            Vec3 v = testutil::random_vec3(g, -2, 2);
            double t = testutil::uniform(g, -4, 4);
            Vec3 got =
                analytic_function_apply([t](cd z) { return std::exp(t * z); }, Vop(torque), v);
            CHECK(norm(got - rodrigues_propagate(Vop(torque), t, v)) <
                  1e-12 * std::max(1.0, norm(v)));
        }
    }
    SUBCASE("square on the transverse plane") {
        Vop op({0, 0, 2.0});
        Vec3 v{0.3, -0.8, 0.0};  // perpendicular to the axis
        Vec3 got = analytic_function_apply([](cd z) { return z * z; }, op, v);
        CHECK(norm(got - (-4.0) * v) < 1e-14);
    }
    SUBCASE("resolvent reproduces the stationary velocity") {
        dynamics::CoriolisEnv env;
        env.omega = {0.1, -0.25, 0.3};
        env.g = {0.0, 0.2, -9.8};
        env.eta = 0.7;
        double eta = env.eta;
        Vec3 got = analytic_function_apply([eta](cd z) { return 1.0 / (eta + z); },
                                           Vop(2.0 * env.omega), env.g);
        CHECK(rel_err(got, dynamics::limit_velocity(env)) < 1e-13);
    }
    SUBCASE("non-evaluable f throws") {
        Vop op({0, 0, 1});
        CHECK_THROWS_AS(
            analytic_function_apply([](cd) { return cd(NAN, 0.0); }, op, {1, 0, 0}), EvalError);
        CHECK_THROWS_AS(
            analytic_function_apply([](cd) { return cd(0.0, 1.0); }, op, {1, 0, 0}), EvalError);
    }
}
