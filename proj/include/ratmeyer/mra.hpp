#pragma once

#include "ratmeyer/bandfn.hpp"
#include "ratmeyer/bump.hpp"

namespace ratmeyer {

// Ellipsoid E = U^T P U (B(0,1)) with U in O(n,Q) exactly and P a positive
// rational diagonal.
struct Ellipsoid {
    RatMatrix U;
    RatVector axes;  // diagonal of P

    int dim() const { return U.rows(); }
    // {x : x^T H x <= 1} with H = U^T P^{-2} U
    RatMatrix quad_form() const;
    Ellipsoid scaled(const Rational& c) const;
};

struct EllipsoidResult {
    Ellipsoid E;
    double lambda;       // certified expansion factor, lambda E inside B(E)
    double certificate;  // smallest eigenvalue of H - lambda^2 B^-T H B^-1
};

// Expanding ellipsoid with rational axes for an expansive B, rescaled so
// min(p_i) > sqrt(n)/(lambda-1). The certificate is recomputed from the
// exact rationalized data.
EllipsoidResult expanding_ellipsoid(const Eigen::MatrixXd& B, double margin = 1e-9, double cayley_tol = 1e-6);

// Multi-indices whose cells meet E (cells are the open tensor supports of
// the SFS generators at overlap delta; delta = 0 gives the bare partition).
std::vector<std::vector<int>> index_set(const Ellipsoid& E, const Rational& delta);

struct MraSpec {
    RatMatrix A;
    ScalingVector phi;
    std::string provenance;

    const Lattice& gamma() const { return phi.gamma(); }
    long multiplicity() const { return phi.multiplicity(); }
    nlohmann::json to_json() const;
};

struct EllipsoidMraOptions {
    Rational delta = Rational(1, 8);
    double margin = 1e-9;
    Rational inclusion_margin = Rational(1, 1000000000);
    long max_multiplicity = 4000;
    int shrink_steps = 40;
    Rational shrink_factor = Rational(17, 20);
    int cover_samples = 200;
};

// Scaling vector D_U w_j over Gamma = U^{-1} Z^n for the cells meeting a
// shrunk expanding ellipsoid; every generator support is certified inside
// B(E) by exact vertex tests.
MraSpec build_mra_ellipsoid(const RatMatrix& A, const Rational& delta,
                            const EllipsoidMraOptions& opts = EllipsoidMraOptions{});

// Change of variables: dilation P^{-1} A P, lattice P^{-1} Gamma, generators
// dilated by P.
MraSpec rescale_mra(const MraSpec& spec, const RatMatrix& P);

// Regroup over a sublattice of finite index r; multiplicity becomes r*N.
MraSpec refine_to_lattice(const MraSpec& spec, const Lattice& target);

// Multiplicity-1 scaling vector from a compact tile K of R^n/Gamma^* with
// K^{+eps} inside B(K^{-eps}); hypothesis checks sample exact rational
// points. Throws naming the violated hypothesis.
MraSpec strictly_expansive_scaling(const RatMatrix& A, const Lattice& gamma, const BoxUnion& K,
                                   const Rational& eps);

// Same construction with the hypothesis checks skipped; for building
// deliberately broken inputs in diagnostics and tests.
MraSpec se_scaling_unchecked(const RatMatrix& A, const Lattice& gamma, const BoxUnion& K, const Rational& eps);

// Z^n-periodic low-pass for an integer dilation built from a tiling
// partition function f: m = (sum_k h(f(A^T(xi+k))))^{1/2} (sum_k h(f(A^T xi+k)))^{-1/2}.
std::function<double(const Eigen::VectorXd&)> integer_lowpass_se9(const RatMatrix& A, const Mollified& f);

// Generator factories (frequency-domain descriptors).
BandFn make_sfs_generator(const RatMatrix& V, const std::vector<int>& jj, const Rational& delta);
BandFn make_se_generator(const Lattice& gamma, const BoxUnion& K, const Rational& eps);
BandFn dilated(const BandFn& f, const RatMatrix& P);  // |det P|^{-1/2} f(P^{-T} xi)
// sqrt(c2) * prod_i g(scale_i * xi_i) for a 1-D g with identity-framed support
BandFn make_scaled_product(const BandFn& g, const std::vector<Rational>& scales, const Rational& c2);

} // namespace ratmeyer
