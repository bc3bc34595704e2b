#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>
#include <set>

#include "ratmeyer/lattice.hpp"

using namespace ratmeyer;

namespace {

RatMatrix mat(int rows, int cols, std::initializer_list<const char*> entries) {
    std::vector<std::string> e;
    for (auto* s : entries) e.emplace_back(s);
    return RatMatrix::from_strings(rows, cols, e);
}

Lattice random_lattice(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    while (true) {
        RatMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) = Rational(num(rng), den(rng));
        if (!g.det().is_zero()) return Lattice(g);
    }
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(2, -4).num() == BigInt(-1));
    CHECK(Rational(2, -4).den() == BigInt(2));
    CHECK(Rational::parse("22/7").str() == "22/7");
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-0.05") == Rational(-1, 20));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational_approx meets tolerance with exact orthogonality later") {
    double x = 0.41421356237309515;  // sqrt(2)-1
    Rational r = rational_approx(x, 1e-9);
    CHECK(std::abs(r.to_double() - x) <= 1e-9);
    CHECK(rational_approx(0.5, 1e-12) == Rational(1, 2));
    CHECK(rational_approx(0.0, 1e-3) == Rational(0));
}

TEST_CASE("ratmatrix det/inverse/json") {
    RatMatrix a = mat(2, 2, {"1/2", "1", "3", "0"});
    CHECK(a.det() == Rational(-3));
    RatMatrix ai = a.inverse();
    CHECK((a * ai).is_identity());

    auto j = a.to_json();
    RatMatrix back = RatMatrix::from_json(j);
    CHECK(back == a);
    CHECK(j.dump() == back.to_json().dump());  // bit-exact round trip

    CHECK_THROWS_AS(mat(2, 2, {"1", "2", "2", "4"}).inverse(), std::domain_error);
}

TEST_CASE("hnf identity and gcd cases") {
    HnfResult h = hnf(RatMatrix::identity(2));
    CHECK(h.H.is_identity());

    HnfResult g = hnf(mat(1, 2, {"4", "6"}));
    CHECK(g.H.at(0, 0) == Rational(2));

    RatMatrix M = mat(2, 4, {"3", "0", "2", "0", "0", "3", "0", "2"});
    HnfResult f = hnf(M);
    // brute-force oracle: enumerate small integer combinations of the columns
    // and confirm both unit vectors lie in the span
    bool found_e1 = false, found_e2 = false;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    int x = 3 * a + 2 * c, y = 3 * b + 2 * d;
                    if (x == 1 && y == 0) found_e1 = true;
                    if (x == 0 && y == 1) found_e2 = true;
                }
    CHECK(found_e1);
    CHECK(found_e2);
    CHECK(f.H.is_identity());
    CHECK(abs(f.U.det()) == Rational(1));

    CHECK_THROWS_WITH(hnf(mat(2, 2, {"1", "2", "2", "4"})), "degenerate lattice");
}

TEST_CASE("snf divisibility and factorization") {
    RatMatrix C = mat(2, 2, {"2", "4", "6", "8"});
    SnfResult s = snf(C);
    CHECK((s.U * C * s.V) == s.S);
    CHECK(abs(s.U.det()) == Rational(1));
    CHECK(abs(s.V.det()) == Rational(1));
    CHECK(s.S.at(0, 1).is_zero());
    CHECK(s.S.at(1, 0).is_zero());
    BigInt s0 = s.S.at(0, 0).num(), s1 = s.S.at(1, 1).num();
    CHECK(s0 > 0);
    CHECK(s1 % s0 == 0);
    CHECK(s0 * s1 == abs(C.det()).num());
}

TEST_CASE("lattice_sum examples") {
    Lattice z1 = Lattice::standard(1);
    Lattice g = lattice_sum(mat(1, 1, {"3/2"}), z1, z1);
    CHECK(g == Lattice(mat(1, 1, {"1/2"})));

    Lattice z3 = Lattice::standard(3);
    CHECK(lattice_sum(RatMatrix::identity(3), z3, z3) == z3);

    Lattice z2 = Lattice::standard(2);
    RatMatrix At = mat(2, 2, {"0", "1/2", "3", "0"});
    Lattice g2 = lattice_sum(At, z2, z2);
    CHECK(g2 == Lattice(mat(2, 2, {"1/2", "0", "0", "1"})));
}

TEST_CASE("dual lattices") {
    Lattice z2 = Lattice::standard(2);
    CHECK(z2.dual() == z2);

    Lattice half(mat(1, 1, {"1/2"}));
    CHECK(half.dual() == Lattice(mat(1, 1, {"2"})));

    Lattice g(mat(2, 2, {"1/2", "0", "0", "1"}));
    CHECK(g.dual() == Lattice(mat(2, 2, {"2", "0", "0", "1"})));

    // oracle: every generator pair has an integer inner product
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(rat_dot(g.basis_inv().transpose().column_vec(i), g.basis().column_vec(j)).is_integer());
}

TEST_CASE("transversal examples and canonicalization") {
    Lattice sub(mat(1, 1, {"3/2"}));
    Lattice super(mat(1, 1, {"1/2"}));
    Transversal t = transversal(sub, super);
    REQUIRE(t.count() == 3);
    // oracle: (1/2)Z intersected with [0, 3/2) and pairwise distinct mod sub
    std::set<std::string> got;
    for (const auto& c : t.cosets) got.insert(c[0].str());
    CHECK(got == std::set<std::string>{"0", "1/2", "1"});

    Transversal t2 = transversal(Lattice::standard(1), super);
    REQUIRE(t2.count() == 2);
    CHECK(t2.cosets[0][0] == Rational(0));
    CHECK(t2.cosets[1][0] == Rational(1, 2));

    Transversal t3 = transversal(super, super);
    REQUIRE(t3.count() == 1);
    CHECK(t3.cosets[0][0] == Rational(0));

    CHECK_THROWS_WITH(transversal(super, sub), "not a sublattice");
}

TEST_CASE("transversal covers a brute-force coset enumeration") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + int(rng() % 2);
        Lattice super = random_lattice(n, rng);
        std::uniform_int_distribution<int> ci(-2, 2);
        RatMatrix C(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) C.at(i, j) = Rational(ci(rng));
        } while (C.det().is_zero());
        Lattice sub(super.basis() * C);
        Transversal t = transversal(sub, super);
        CHECK(Rational(BigInt(t.count())) == sub.volume() / super.volume());
        // pairwise distinct mod sub
        for (size_t i = 0; i < t.cosets.size(); ++i)
            for (size_t j = i + 1; j < t.cosets.size(); ++j)
                CHECK(!sub.contains(rat_sub(t.cosets[i], t.cosets[j])));
        // every residue of a super point (mod sub) must be one of the
        // canonical reps, and all reps must occur
        std::set<std::string> reps;
        for (const auto& c : t.cosets) {
            std::string key;
            for (const auto& x : c) key += x.str() + ",";
            reps.insert(key);
        }
        RatVector lo(size_t(n), Rational(0)), hi(size_t(n), Rational(0));
        for (long mask = 0; mask < (1L << n); ++mask) {
            RatVector corner(size_t(n), Rational(0));
            for (int j = 0; j < n; ++j)
                if ((mask >> j) & 1) corner = rat_add(corner, sub.basis().column_vec(j));
            for (int i = 0; i < n; ++i) {
                if (corner[size_t(i)] < lo[size_t(i)]) lo[size_t(i)] = corner[size_t(i)];
                if (hi[size_t(i)] < corner[size_t(i)]) hi[size_t(i)] = corner[size_t(i)];
            }
        }
        std::set<std::string> residues;
        for (const auto& pt : super.points_in_box(lo, hi)) {
            RatVector r = sub.reduce(pt);
            std::string key;
            for (const auto& x : r) key += x.str() + ",";
            residues.insert(key);
        }
        CHECK(residues == reps);
    }
}

TEST_CASE("group indices") {
    GroupIndices g1 = group_indices(mat(1, 1, {"3/2"}));
    CHECK(g1.p == 3);
    CHECK(g1.q == 2);
    CHECK(g1.n_min == 1);

    GroupIndices g2 = group_indices(mat(2, 2, {"2", "0", "0", "2"}));
    CHECK(g2.p == 4);
    CHECK(g2.q == 1);
    CHECK(g2.gamma == Lattice::standard(2));
    CHECK(g2.p - g2.q == 3);  // |det A| - 1 for N = 1

    GroupIndices g3 = group_indices(mat(2, 2, {"0", "1/2", "3", "0"}));
    CHECK(g3.p == 3);
    CHECK(g3.q == 2);

    CHECK_THROWS(group_indices(RatMatrix::identity(2)));
}

TEST_CASE("dual involution and index duality on random lattices") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng() % 3);
        Lattice L = random_lattice(n, rng);
        CHECK(L.dual().dual() == L);
    }
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + int(rng() % 2);
        Lattice gamma = random_lattice(n, rng);
        std::uniform_int_distribution<int> ci(-2, 2);
        RatMatrix C(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) C.at(i, j) = Rational(ci(rng));
        } while (C.det().is_zero());
        Lattice lambda(gamma.basis() * C);
        long p_direct = transversal(lambda, gamma).count();
        long p_dual = transversal(gamma.dual(), lambda.dual()).count();
        CHECK(p_direct == p_dual);
    }
}

TEST_CASE("character orthogonality of dual transversals") {
    const double tol = 1e-12;
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + int(rng() % 2);
        Lattice gamma = random_lattice(n, rng);
        std::uniform_int_distribution<int> ci(-2, 2);
        RatMatrix C(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) C.at(i, j) = Rational(ci(rng));
        } while (C.det().is_zero());
        Lattice lambda(gamma.basis() * C);
        Transversal D = transversal(lambda, gamma);
        Transversal W = transversal(gamma.dual(), lambda.dual());
        REQUIRE(D.count() == W.count());
        long p = D.count();
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) {
                std::complex<double> s = 0;
                for (long j = 0; j < p; ++j) {
                    Rational ip = rat_dot(rat_sub(D.cosets[size_t(a)], D.cosets[size_t(b)]), W.cosets[size_t(j)]);
                    double frac = ip.to_double() - double(ip.floor());
                    s += std::polar(1.0, 2 * 3.14159265358979323846 * frac);
                }
                s /= double(p);
                double expect = a == b ? 1.0 : 0.0;
                CHECK(std::abs(s - std::complex<double>(expect)) < tol);
            }
    }
}

TEST_CASE("cayley rationalization") {
    RatMatrix qi = cayley_rationalize(Eigen::MatrixXd::Identity(2, 2), 1e-6);
    CHECK(qi.is_identity());

    double a = 3.14159265358979323846 / 4;
    Eigen::MatrixXd rot(2, 2);
    rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    RatMatrix q = cayley_rationalize(rot, 1e-3);
    CHECK((q.transpose() * q).is_identity());  // exact
    CHECK((q.to_eigen() - rot).norm() <= 1e-3);

    // reflection composed with a small rotation: the retry path must engage
    double e = 0.01;
    Eigen::MatrixXd refl(2, 2);
    refl << std::cos(e), -std::sin(e), -std::sin(e), -std::cos(e);
    RatMatrix qr = cayley_rationalize(refl, 1e-4);
    CHECK((qr.transpose() * qr).is_identity());
    CHECK((qr.to_eigen() - refl).norm() <= 1e-4);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    for (int t = 0; t < 10; ++t) {
        double th = ang(rng);
        Eigen::MatrixXd u(2, 2);
        u << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        RatMatrix qq = cayley_rationalize(u, 1e-5, 1000 + std::uint64_t(t));
        CHECK((qq.transpose() * qq).is_identity());
        CHECK((qq.to_eigen() - u).norm() <= 1e-5);
    }

    CHECK_THROWS(cayley_rationalize(2 * Eigen::MatrixXd::Identity(2, 2), 1e-3));
}

TEST_CASE("lattice membership, reduce, and points_in_box") {
    Lattice g(mat(2, 2, {"1/2", "0", "0", "1"}));
    CHECK(g.contains({Rational(3, 2), Rational(-4)}));
    CHECK(!g.contains({Rational(1, 3), Rational(0)}));
    RatVector r = g.reduce({Rational(7, 4), Rational(-1, 2)});
    CHECK(r[0] == Rational(1, 4));
    CHECK(r[1] == Rational(1, 2));

    auto pts = Lattice::standard(1).points_in_box({Rational(-3, 2)}, {Rational(3, 2)});
    REQUIRE(pts.size() == 3);
    CHECK(pts[0][0] == Rational(-1));
    CHECK(pts[2][0] == Rational(1));
}
