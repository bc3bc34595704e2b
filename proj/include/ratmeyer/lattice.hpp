#pragma once

#include <optional>

#include "ratmeyer/ratmatrix.hpp"

namespace ratmeyer {

// Full rank lattice Gamma = G * Z^n given by an exact rational basis G
// (columns are generators).
class Lattice {
public:
    explicit Lattice(RatMatrix basis);
    static Lattice standard(int n);

    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    const RatMatrix& basis_inv() const { return basis_inv_; }

    Rational volume() const;  // |det G|

    Lattice dual() const;  // basis G^{-T}

    bool contains(const RatVector& x) const;
    bool sublattice_of(const Lattice& super) const;

    // HNF-canonical basis: (1/d) * hnf(d*G) with d the minimal integer
    // clearing all denominators. Invariant under change of basis.
    Lattice canonicalized() const;
    bool operator==(const Lattice& o) const;

    // Reduce x into the half-open fundamental parallelepiped G*[0,1)^n.
    RatVector reduce(const RatVector& x) const;

    // All lattice points y with lo[i] <= y_i <= hi[i] (a superset is never
    // returned; bounds are handled exactly).
    std::vector<RatVector> points_in_box(const RatVector& lo, const RatVector& hi) const;

private:
    RatMatrix basis_;
    RatMatrix basis_inv_;
};

// {x + y : x in A*L1, y in L2} via HNF of the concatenated basis.
Lattice lattice_sum(const RatMatrix& A, const Lattice& L1, const Lattice& L2);

// Coset representatives of super/sub for sub <= super, canonicalized to the
// half-open fundamental parallelepiped of sub at the origin and sorted.
struct Transversal {
    std::vector<RatVector> cosets;
    Lattice sub;
    Lattice super;
    long count() const { return long(cosets.size()); }
};
Transversal transversal(const Lattice& sub, const Lattice& super);

struct GroupIndices {
    long p;           // |Gamma / A Z^n|
    long q;           // |Gamma / Z^n|
    long n_min;       // smallest N with n <= 2(p-q)N
    Lattice gamma;    // A Z^n + Z^n
};
// Throws if A is not expansive (eigenvalue moduli checked in floating point
// against 1 + tol_eig; a diagnostic, not a proof).
GroupIndices group_indices(const RatMatrix& A, double tol_eig = 1e-9);

bool is_expansive(const RatMatrix& A, double tol_eig = 1e-9);

// Nearest rational orthogonal matrix: Q in O(n,Q) with Q^T Q = I exactly and
// ||Q - U||_F <= tol. U must be orthogonal within 1e-10. Reflections and
// orthogonal matrices with eigenvalue -1 are handled by composing with exact
// rational rotations before the Cayley step.
RatMatrix cayley_rationalize(const Eigen::MatrixXd& U, double tol, std::uint64_t seed = 12345);

} // namespace ratmeyer
