#pragma once

#include <Eigen/Dense>
#include <complex>
#include <filesystem>
#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "ratmeyer/lattice.hpp"

namespace ratmeyer {

class TrigPoly;

// Matrix-valued function sampled on a uniform grid over a fundamental
// parallelepiped of (per_lattice)^* in frequency. Node (i_1,...,i_n) sits at
// dual_basis * (i_1/s_1, ..., i_n/s_n); indexing wraps periodically.
//
// A finer periodicity lattice can be recorded when the values repeat under a
// superlattice of (per_lattice)^* (polyphase components do).
class GridFn {
public:
    GridFn(Lattice per_lattice, std::vector<int> shape, int rows, int cols);

    const Lattice& per_lattice() const { return *per_; }
    const Lattice& domain_dual() const { return *dual_; }  // (per_lattice)^*
    const std::vector<int>& shape() const { return shape_; }
    int dim() const { return int(shape_.size()); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long nodes() const { return nodes_; }

    void set_fine_periodicity(const Lattice& l) { fine_per_ = std::make_shared<Lattice>(l); }
    const Lattice* fine_periodicity() const { return fine_per_ ? fine_per_.get() : nullptr; }

    long flat(const std::vector<int>& idx) const;        // wraps
    std::vector<int> unflat(long f) const;
    Eigen::Map<Eigen::MatrixXcd> at(long f);
    Eigen::Map<const Eigen::MatrixXcd> at(long f) const;
    Eigen::Map<Eigen::MatrixXcd> at(const std::vector<int>& idx) { return at(flat(idx)); }
    Eigen::Map<const Eigen::MatrixXcd> at(const std::vector<int>& idx) const { return at(flat(idx)); }

    RatVector node_exact(const std::vector<int>& idx) const;
    RatVector node_exact(long f) const { return node_exact(unflat(f)); }
    Eigen::VectorXd node(long f) const { return rat_to_eigen(node_exact(f)); }

    // Integer index offset of a dual-lattice vector w (node spacing must
    // divide w; throws otherwise).
    std::vector<int> offset_of(const RatVector& w) const;

    // mean of the squared Frobenius norm over nodes (trapezoid rule for the
    // periodic integral, normalized by the cell volume)
    double mean_sq_norm() const;

    TrigPoly to_trig(double rel_tol = 1e-15) const;

    void save(const std::filesystem::path& file) const;
    static GridFn load(const std::filesystem::path& file);
    nlohmann::json to_json() const;  // lossless, for small grids

private:
    std::shared_ptr<Lattice> per_, dual_;
    std::shared_ptr<Lattice> fine_per_;
    std::vector<int> shape_;
    int rows_, cols_;
    long nodes_;
    std::vector<std::complex<double>> data_;
};

// Finite Fourier sum F(xi) = sum_z A_z exp(2 pi i <G z, xi>) with G the basis
// of the periodicity lattice of the GridFn it came from.
class TrigPoly {
public:
    TrigPoly(RatMatrix gen_basis, int rows, int cols);

    void add_term(std::vector<int> z, Eigen::MatrixXcd coef);
    Eigen::MatrixXcd eval(const Eigen::VectorXd& xi) const;
    size_t term_count() const { return terms_.size(); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    RatMatrix gen_basis_;
    Eigen::MatrixXd gen_basis_d_;
    int rows_, cols_;
    std::vector<std::pair<std::vector<int>, Eigen::MatrixXcd>> terms_;
};

// Round the requested per-axis sample count up so that every vector in
// `offsets` (given in dual-basis coordinates, exact rationals) lands on a
// grid node.
std::vector<int> commensurate_shape(int dim, int requested, const std::vector<RatVector>& offset_coords);

} // namespace ratmeyer
