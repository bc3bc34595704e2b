#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "ratmeyer/rational.hpp"

namespace ratmeyer {

using RatVector = std::vector<Rational>;

RatVector rat_add(const RatVector& a, const RatVector& b);
RatVector rat_sub(const RatVector& a, const RatVector& b);
RatVector rat_scale(const Rational& c, const RatVector& a);
Rational rat_dot(const RatVector& a, const RatVector& b);
Eigen::VectorXd rat_to_eigen(const RatVector& a);

// Dense matrix over Q, row-major. All arithmetic is exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const RatVector& d);
    static RatMatrix from_strings(int rows, int cols, const std::vector<std::string>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix scaled(const Rational& c) const;

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Rational det() const;       // Gaussian elimination over Q
    RatMatrix inverse() const;  // throws std::domain_error if singular

    bool is_integer() const;
    bool is_identity() const;
    // Smallest d >= 1 with d*M integer.
    BigInt denominator_lcm() const;
    RatMatrix column(int j) const;
    RatVector column_vec(int j) const;
    // Horizontal concatenation [*this | o].
    RatMatrix hcat(const RatMatrix& o) const;

    Eigen::MatrixXd to_eigen() const;

    nlohmann::json to_json() const;              // entries as "num/den" strings
    static RatMatrix from_json(const nlohmann::json& j);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Column-style Hermite normal form of an integer matrix M (full row rank):
// M * U = [H | 0] with U unimodular, H lower triangular with positive
// diagonal and off-diagonal entries reduced mod the diagonal.
// Throws std::domain_error("degenerate lattice") on rank deficiency.
struct HnfResult {
    RatMatrix H;  // rows x rows, integer entries
    RatMatrix U;  // cols x cols, unimodular
};
HnfResult hnf(const RatMatrix& M);

// Smith normal form of a square integer matrix C: S = U*C*V with U, V
// unimodular and S = diag(s_1,...,s_n), s_i | s_{i+1}, s_i > 0.
struct SnfResult {
    RatMatrix S, U, V;
};
SnfResult snf(const RatMatrix& C);

} // namespace ratmeyer
