#include "ratmeyer/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

namespace ratmeyer {

namespace {

bool rat_vec_less(const RatVector& a, const RatVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

long to_long_checked(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long>::max()) || v < BigInt(std::numeric_limits<long>::min()))
        throw std::overflow_error("lattice index does not fit in long");
    return static_cast<long>(v);
}

} // namespace

Lattice::Lattice(RatMatrix basis) : basis_(std::move(basis)) {
    if (!basis_.is_square()) throw std::invalid_argument("Lattice: basis must be square");
    basis_inv_ = basis_.inverse();  // throws if singular
}

Lattice Lattice::standard(int n) { return Lattice(RatMatrix::identity(n)); }

Rational Lattice::volume() const { return abs(basis_.det()); }

Lattice Lattice::dual() const { return Lattice(basis_inv_.transpose()); }

bool Lattice::contains(const RatVector& x) const {
    RatVector z = basis_inv_ * x;
    for (const auto& c : z)
        if (!c.is_integer()) return false;
    return true;
}

bool Lattice::sublattice_of(const Lattice& super) const {
    return (super.basis_inv_ * basis_).is_integer();
}

Lattice Lattice::canonicalized() const {
    BigInt d = basis_.denominator_lcm();
    RatMatrix scaled = basis_.scaled(Rational(d));
    HnfResult h = hnf(scaled);
    return Lattice(h.H.scaled(Rational(BigInt(1), d)));
}

bool Lattice::operator==(const Lattice& o) const {
    return sublattice_of(o) && o.sublattice_of(*this);
}

RatVector Lattice::reduce(const RatVector& x) const {
    RatVector z = basis_inv_ * x;
    for (auto& c : z) c = c - Rational(c.floor());
    return basis_ * z;
}

std::vector<RatVector> Lattice::points_in_box(const RatVector& lo, const RatVector& hi) const {
    int n = dim();
    // bound the integer coordinates by mapping all box corners through G^{-1}
    std::vector<BigInt> zlo(n), zhi(n);
    bool first = true;
    for (long mask = 0; mask < (1L << n); ++mask) {
        RatVector corner(n);
        for (int i = 0; i < n; ++i) corner[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        RatVector z = basis_inv_ * corner;
        for (int i = 0; i < n; ++i) {
            BigInt f = z[i].floor();
            BigInt c = f + (z[i].is_integer() ? 0 : 1);
            if (first || f < zlo[i]) zlo[i] = f;
            if (first || c > zhi[i]) zhi[i] = c;
        }
        first = false;
    }
    std::vector<RatVector> out;
    std::vector<BigInt> z(n);
    for (int i = 0; i < n; ++i) z[i] = zlo[i];
    while (true) {
        RatVector zr(n);
        for (int i = 0; i < n; ++i) zr[i] = Rational(z[i]);
        RatVector y = basis_ * zr;
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) inside = lo[i] <= y[i] && y[i] <= hi[i];
        if (inside) out.push_back(std::move(y));
        int ax = 0;
        while (ax < n) {
            if (++z[ax] <= zhi[ax]) break;
            z[ax] = zlo[ax];
            ++ax;
        }
        if (ax == n) break;
    }
    std::sort(out.begin(), out.end(), rat_vec_less);
    return out;
}

Lattice lattice_sum(const RatMatrix& A, const Lattice& L1, const Lattice& L2) {
    RatMatrix M = (A * L1.basis()).hcat(L2.basis());
    BigInt d = M.denominator_lcm();
    HnfResult h = hnf(M.scaled(Rational(d)));
    return Lattice(h.H.scaled(Rational(BigInt(1), d)));
}

Transversal transversal(const Lattice& sub, const Lattice& super) {
    RatMatrix C = super.basis_inv() * sub.basis();
    if (!C.is_integer()) throw std::domain_error("not a sublattice");
    SnfResult s = snf(C);
    int n = C.rows();
    RatMatrix Uinv = s.U.inverse();

    std::vector<BigInt> diag(n);
    BigInt total = 1;
    for (int i = 0; i < n; ++i) {
        diag[i] = s.S.at(i, i).num();
        total *= diag[i];
    }
    long count = to_long_checked(total);

    std::vector<RatVector> reps;
    reps.reserve(size_t(count));
    std::vector<BigInt> e(n, 0);
    while (true) {
        RatVector er(n);
        for (int i = 0; i < n; ++i) er[i] = Rational(e[i]);
        RatVector x = super.basis() * (Uinv * er);
        reps.push_back(sub.reduce(x));
        int ax = 0;
        while (ax < n) {
            if (++e[ax] < diag[ax]) break;
            e[ax] = 0;
            ++ax;
        }
        if (ax == n) break;
    }
    std::sort(reps.begin(), reps.end(), rat_vec_less);
    return Transversal{std::move(reps), sub, super};
}

bool is_expansive(const RatMatrix& A, double tol_eig) {
    Eigen::MatrixXd M = A.to_eigen();
    Eigen::VectorXcd ev = M.eigenvalues();
    for (int i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i]) <= 1.0 + tol_eig) return false;
    return true;
}

GroupIndices group_indices(const RatMatrix& A, double tol_eig) {
    if (!A.is_square()) throw std::invalid_argument("group_indices: A must be square");
    if (!is_expansive(A, tol_eig)) throw std::domain_error("group_indices: dilation is not expansive");
    int n = A.rows();
    Lattice zn = Lattice::standard(n);
    Lattice gamma = lattice_sum(A, zn, zn);
    Lattice lambda(A);
    long p = transversal(lambda, gamma).count();
    long q = transversal(zn, gamma).count();
    long d = p - q;
    if (d <= 0) throw std::domain_error("group_indices: p <= q for expansive dilation");
    long n_min = (n + 2 * d - 1) / (2 * d);
    if (n_min < 1) n_min = 1;
    return GroupIndices{p, q, n_min, gamma};
}

namespace {

// Cayley transform of an exact rational skew-symmetric matrix; the result
// satisfies Q^T Q = I with zero rational error.
RatMatrix cayley_of_skew(const RatMatrix& S) {
    int n = S.rows();
    RatMatrix I = RatMatrix::identity(n);
    return (I + S) * ((I - S).inverse());
}

RatMatrix random_rational_rotation(int n, double angle, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-angle, angle);
    RatMatrix S(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational r = rational_approx(u(rng), 1e-6 * angle + 1e-12);
            S.at(i, j) = r;
            S.at(j, i) = -r;
        }
    return cayley_of_skew(S);
}

} // namespace

RatMatrix cayley_rationalize(const Eigen::MatrixXd& U, double tol, std::uint64_t seed) {
    const int n = int(U.rows());
    if (U.cols() != n) throw std::invalid_argument("cayley_rationalize: not square");
    if ((U.transpose() * U - Eigen::MatrixXd::Identity(n, n)).norm() > 1e-10)
        throw std::domain_error("cayley_rationalize: input not orthogonal within 1e-10");

    std::mt19937_64 rng(seed);
    Eigen::MatrixXd M = U;
    RatMatrix right = RatMatrix::identity(n);  // exact orthogonal; Q = core(M) * right

    if (M.determinant() < 0) {
        RatMatrix S = RatMatrix::identity(n);
        S.at(n - 1, n - 1) = Rational(-1);
        M = M * S.to_eigen();
        right = S * right;  // S is its own inverse
    }

    const int max_retries = 12;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        double margin = std::abs((M + Eigen::MatrixXd::Identity(n, n)).determinant());
        if (margin > std::max(tol, 1e-8)) {
            Eigen::MatrixXd Sf =
                (M + Eigen::MatrixXd::Identity(n, n)).inverse() * (M - Eigen::MatrixXd::Identity(n, n));
            for (double eps = tol / 8; eps > 1e-16; eps /= 16) {
                RatMatrix S(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        Rational r = rational_approx(Sf(i, j), eps);
                        S.at(i, j) = r;
                        S.at(j, i) = -r;
                    }
                RatMatrix Q0 = cayley_of_skew(S);
                if ((Q0.to_eigen() - M).norm() <= tol) return Q0 * right;
            }
        }
        // -1 is (nearly) an eigenvalue, or the approximation failed: compose
        // with an exact rational rotation and retry. Right-multiplication by
        // an orthogonal factor preserves the Frobenius distance, so the
        // tolerance is unaffected.
        RatMatrix G = random_rational_rotation(n, 0.2, rng);
        M = M * G.to_eigen();
        right = G.transpose() * right;
    }
    throw std::domain_error("Cayley singular");
}

} // namespace ratmeyer
