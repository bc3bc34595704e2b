#include <doctest.h>

#include <cmath>
#include <random>

#include "ratmeyer/sfs.hpp"

using namespace ratmeyer;

namespace {
const Rational kDelta(1, 8);
}

TEST_CASE("eval_fj pointwise") {
    BumpProfile phi = make_profile(kDelta);
    CHECK(eval_fj(0, phi, 0.0) == Cx(1.0));
    CHECK(eval_fj(0, phi, 0.2) == Cx(1.0));  // constant branch, not phi(0.2)
    CHECK(eval_fj(1, phi, 0.75) == Cx(1.0));
    CHECK(eval_fj(2, phi, -1.25) == Cx(1.0));  // (-1)^2 phi(0) from the mirrored term
    CHECK(eval_fj(1, phi, -0.75) == Cx(-1.0));
}

TEST_CASE("conjugation convention for complex profiles") {
    BumpProfile base = make_profile(kDelta);
    CxProfile phic = [&](double x) { return Cx(base(x), 0.25 * base(x + 0.1)); };
    Cx raw = phic(0.05);
    REQUIRE(raw.imag() != 0.0);
    // j = 1 (odd): first support piece carries the conjugate
    CHECK(eval_fj(1, phic, 0.05 + 0.75) == std::conj(raw));
    // j = 2 (even): no conjugation
    CHECK(eval_fj(2, phic, 0.05 + 1.25) == raw);
}

TEST_CASE("support containment") {
    BumpProfile phi = make_profile(kDelta);
    for (int j = 0; j <= 6; ++j) {
        auto in_stated = [&](double xi) {
            double a = -j / 2.0 - 0.75, b = -j / 2.0 + 0.25;
            double c = j / 2.0 - 0.25, d = j / 2.0 + 0.75;
            return (xi >= a && xi <= b) || (xi >= c && xi <= d);
        };
        for (double xi = -5.0; xi <= 5.0; xi += 0.0137)
            if (!in_stated(xi)) CHECK(std::abs(eval_fj(j, phi, xi)) == 0.0);
        // exact support intervals enclose all nonzero samples
        auto sup = fj_support(j, kDelta);
        for (double xi = -5.0; xi <= 5.0; xi += 0.0137) {
            if (std::abs(eval_fj(j, phi, xi)) == 0.0) continue;
            bool inside = false;
            for (auto& [a, b] : sup) inside = inside || (xi >= a.to_double() && xi <= b.to_double());
            CHECK(inside);
        }
    }
}

TEST_CASE("dual gramian identity") {
    BumpProfile phi = make_profile(kDelta);

    // k = 0 at xi = 0: only j = 0 contributes
    Cx s = 0;
    for (int j = 0; j <= 8; ++j) s += eval_fj(j, phi, 0.0) * std::conj(eval_fj(j, phi, 0.0));
    CHECK(std::abs(s - Cx(1.0)) < 1e-15);

    // telescoping: for each k >= 1 the two surviving products cancel
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int k = 1; k <= 6; ++k)
        for (int rep = 0; rep < 20; ++rep) {
            double xi = u(rng);
            Cx t = eval_fj(k - 1, phi, xi) * std::conj(eval_fj(k - 1, phi, xi + k)) +
                   eval_fj(k, phi, xi) * std::conj(eval_fj(k, phi, xi + k));
            CHECK(std::abs(t) < 1e-13);
        }

    DualGramianReport rep = dual_gramian_residual(phi, 12, -2.0, 2.0, 4096, 6);
    CHECK(rep.max_residual < 1e-12);

    DualGramianReport rep_mt = dual_gramian_residual(phi, 12, -2.0, 2.0, 4096, 6, 4);
    CHECK(rep_mt.max_residual == rep.max_residual);  // deterministic reduction

    CHECK_THROWS_WITH_AS(dual_gramian_residual(phi, 2, -2.0, 2.0, 64, 6),
                         doctest::Contains("need at least"), std::invalid_argument);
}

TEST_CASE("tensor generators") {
    BumpProfile phi = make_profile(kDelta);
    CHECK(eval_tensor({0, 0}, phi, {0.0, 0.0}) == Cx(1.0));
    CHECK(eval_tensor({1, 0}, phi, {0.75, 0.0}) == Cx(1.0));
    CHECK(eval_tensor({1, 2}, phi, {10.0, 0.3}) == Cx(0.0));

    BoxUnion sup = tensor_support({1, 2}, kDelta);
    CHECK(sup.boxes.size() == 4);
    CHECK(sup.contains({Rational(3, 4), Rational(5, 4)}));
    CHECK(!sup.contains({Rational(0), Rational(0)}));
    BoxUnion sup0 = tensor_support({0, 1}, kDelta);
    CHECK(sup0.boxes.size() == 2);
}

TEST_CASE("norm one by quadrature") {
    BumpProfile phi = make_profile(kDelta);
    for (int j = 0; j <= 12; ++j) {
        Cx n = sfs_inner_product(phi, {j}, {0}, {j}, {0});
        CHECK(std::abs(n - Cx(1.0)) < 1e-10);
    }
}

TEST_CASE("orthonormality spot checks") {
    BumpProfile phi = make_profile(kDelta);
    // disjoint supports: exactly zero without quadrature
    CHECK(sfs_inner_product(phi, {0}, {3}, {5}, {0}) == Cx(0.0));
    // adjacent generators, same shift
    CHECK(std::abs(sfs_inner_product(phi, {1}, {0}, {2}, {0})) < 1e-10);

    SfsOrthoReport r1 = orthonormality_check_sfs(phi, 8, 8, 1, 40, 2024);
    CHECK(r1.pairs_tested == 40);
    CHECK(r1.max_deviation < 1e-8);

    SfsOrthoReport r2 = orthonormality_check_sfs(phi, 3, 2, 2, 12, 2025);
    CHECK(r2.max_deviation < 1e-8);
}

TEST_CASE("frequency overlap shrinks with delta") {
    // measure of {0 < |f1| < 1} decreases monotonically as delta -> 0
    double prev = 1e9;
    for (const Rational& d : {Rational(1, 4), Rational(1, 8), Rational(1, 20)}) {
        BumpProfile phi = make_profile(d);
        long count = 0, total = 200000;
        for (long i = 0; i < total; ++i) {
            double xi = -2.0 + 4.0 * double(i) / double(total - 1);
            double v = std::abs(eval_fj(1, phi, xi));
            if (v > 0.0 && v < 1.0) ++count;
        }
        double measure = 4.0 * double(count) / double(total);
        CHECK(measure < prev);
        prev = measure;
    }
}
