#include "ratmeyer/ratmatrix.hpp"

#include <nlohmann/json.hpp>
#include <numeric>

namespace ratmeyer {

Rational rational_approx(double x, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("rational_approx: eps must be positive");
    if (std::abs(x) < eps) return Rational(0);
    bool neg = x < 0;
    double v = std::abs(x);
    // continued fraction expansion of v; stop at the first convergent within eps
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double ip = std::floor(frac);
        if (ip > 9e15) break;
        BigInt a = static_cast<long long>(ip);
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(BigRat(p1, q1));
        if (std::abs(approx - v) <= eps) break;
        double rem = frac - ip;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1);
    return neg ? -r : r;
}

RatVector rat_add(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector rat_sub(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector rat_scale(const Rational& c, const RatVector& a) {
    RatVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rational rat_dot(const RatVector& a, const RatVector& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Eigen::VectorXd rat_to_eigen(const RatVector& a) {
    Eigen::VectorXd v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[long(i)] = a[i].to_double();
    return v;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
    RatMatrix m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

RatMatrix RatMatrix::from_strings(int rows, int cols, const std::vector<std::string>& entries) {
    if (entries.size() != size_t(rows) * cols)
        throw std::invalid_argument("from_strings: entry count mismatch");
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rational::parse(entries[size_t(i) * cols + j]);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
        }
    return m;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("RatMatrix: vector dimension mismatch");
    RatVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
    return m;
}

Rational RatMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det: not square");
    RatMatrix w(*this);
    int n = rows_;
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        Rational inv = Rational(1) / w.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (w.at(r, c).is_zero()) continue;
            Rational f = w.at(r, c) * inv;
            for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse: not square");
    int n = rows_;
    RatMatrix w(*this);
    RatMatrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Rational f = Rational(1) / w.at(c, c);
        for (int j = 0; j < n; ++j) {
            w.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || w.at(r, c).is_zero()) continue;
            Rational g = w.at(r, c);
            for (int j = 0; j < n; ++j) {
                w.at(r, j) -= g * w.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool RatMatrix::is_integer() const {
    for (const auto& x : a_)
        if (!x.is_integer()) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

BigInt RatMatrix::denominator_lcm() const {
    BigInt l = 1;
    for (const auto& x : a_) l = lcm(l, x.den());
    return l;
}

RatMatrix RatMatrix::column(int j) const {
    RatMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

RatVector RatMatrix::column_vec(int j) const {
    RatVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RatMatrix RatMatrix::hcat(const RatMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    RatMatrix m(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

Eigen::MatrixXd RatMatrix::to_eigen() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).to_double();
    return m;
}

nlohmann::json RatMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix RatMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("RatMatrix: bad JSON");
    int rows = int(j.size());
    int cols = int(j[0].size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j[size_t(i)].size()) != cols) throw std::invalid_argument("RatMatrix: ragged JSON");
        for (int c = 0; c < cols; ++c) m.at(i, c) = Rational::parse(j[size_t(i)][size_t(c)].get<std::string>());
    }
    return m;
}

namespace {

// In-place column reduction helpers on BigInt matrices stored row-major.
struct IMat {
    int rows, cols;
    std::vector<BigInt> a;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    BigInt& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[size_t(i) * cols + j]; }
    void swap_cols(int j0, int j1) {
        for (int i = 0; i < rows; ++i) std::swap(at(i, j0), at(i, j1));
    }
    void addmul_col(int dst, int src, const BigInt& f) {
        for (int i = 0; i < rows; ++i) at(i, dst) += f * at(i, src);
    }
    void negate_col(int j) {
        for (int i = 0; i < rows; ++i) at(i, j) = -at(i, j);
    }
    void swap_rows(int i0, int i1) {
        for (int j = 0; j < cols; ++j) std::swap(at(i0, j), at(i1, j));
    }
    void addmul_row(int dst, int src, const BigInt& f) {
        for (int j = 0; j < cols; ++j) at(dst, j) += f * at(src, j);
    }
    void negate_row(int i) {
        for (int j = 0; j < cols; ++j) at(i, j) = -at(i, j);
    }
};

IMat to_imat(const RatMatrix& m) {
    if (!m.is_integer()) throw std::invalid_argument("expected integer matrix");
    IMat w(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w.at(i, j) = m.at(i, j).num();
    return w;
}

RatMatrix to_ratmatrix(const IMat& m) {
    RatMatrix r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

} // namespace

HnfResult hnf(const RatMatrix& Min) {
    IMat M = to_imat(Min);
    int n = M.rows, m = M.cols;
    IMat U(m, m);
    for (int j = 0; j < m; ++j) U.at(j, j) = 1;

    int col = 0;
    for (int row = 0; row < n; ++row) {
        // eliminate to a single nonzero in this row among columns >= col
        while (true) {
            int piv = -1;
            BigInt best = 0;
            for (int j = col; j < m; ++j) {
                if (M.at(row, j) == 0) continue;
                BigInt v = abs(M.at(row, j));
                if (piv < 0 || v < best) { piv = j; best = v; }
            }
            if (piv < 0) throw std::domain_error("degenerate lattice");
            if (piv != col) { M.swap_cols(col, piv); U.swap_cols(col, piv); }
            bool clean = true;
            for (int j = col + 1; j < m; ++j) {
                if (M.at(row, j) == 0) continue;
                BigInt f = -(M.at(row, j) / M.at(row, col));
                if (f != 0) { M.addmul_col(j, col, f); U.addmul_col(j, col, f); }
                if (M.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (M.at(row, col) < 0) { M.negate_col(col); U.negate_col(col); }
        // reduce earlier columns mod the new pivot
        for (int j = 0; j < col; ++j) {
            BigInt q = M.at(row, j) / M.at(row, col);
            if (M.at(row, j) - q * M.at(row, col) < 0) --q;
            if (q != 0) { M.addmul_col(j, col, -q); U.addmul_col(j, col, -q); }
        }
        ++col;
    }

    RatMatrix Mfull = to_ratmatrix(M);
    RatMatrix H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H.at(i, j) = Mfull.at(i, j);
    return HnfResult{H, to_ratmatrix(U)};
}

SnfResult snf(const RatMatrix& Cin) {
    if (!Cin.is_square()) throw std::invalid_argument("snf: not square");
    int n = Cin.rows();
    IMat S = to_imat(Cin);
    IMat U(n, n), V(n, n);
    for (int i = 0; i < n; ++i) { U.at(i, i) = 1; V.at(i, i) = 1; }

    for (int k = 0; k < n; ++k) {
        while (true) {
            // pick the smallest nonzero entry in the trailing block as pivot
            int pi = -1, pj = -1;
            BigInt best = 0;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) {
                    if (S.at(i, j) == 0) continue;
                    BigInt v = abs(S.at(i, j));
                    if (pi < 0 || v < best) { pi = i; pj = j; best = v; }
                }
            if (pi < 0) throw std::domain_error("snf: singular matrix");
            if (pi != k) { S.swap_rows(k, pi); U.swap_rows(k, pi); }
            if (pj != k) { S.swap_cols(k, pj); V.swap_cols(k, pj); }
            bool done = true;
            for (int i = k + 1; i < n; ++i) {
                if (S.at(i, k) == 0) continue;
                BigInt f = -(S.at(i, k) / S.at(k, k));
                S.addmul_row(i, k, f);
                U.addmul_row(i, k, f);
                if (S.at(i, k) != 0) done = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (S.at(k, j) == 0) continue;
                BigInt f = -(S.at(k, j) / S.at(k, k));
                S.addmul_col(j, k, f);
                V.addmul_col(j, k, f);
                if (S.at(k, j) != 0) done = false;
            }
            if (!done) continue;
            // divisibility: pivot must divide the trailing block
            bool divides = true;
            for (int i = k + 1; i < n && divides; ++i)
                for (int j = k + 1; j < n && divides; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        S.addmul_row(k, i, 1);
                        U.addmul_row(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (S.at(k, k) < 0) { S.negate_row(k); U.negate_row(k); }
    }
    return SnfResult{to_ratmatrix(S), to_ratmatrix(U), to_ratmatrix(V)};
}

} // namespace ratmeyer
