#include "ratmeyer/gridfn.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>

namespace ratmeyer {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

GridFn::GridFn(Lattice per_lattice, std::vector<int> shape, int rows, int cols)
    : per_(std::make_shared<Lattice>(std::move(per_lattice))),
      dual_(std::make_shared<Lattice>(per_->dual())),
      shape_(std::move(shape)),
      rows_(rows),
      cols_(cols) {
    if (int(shape_.size()) != per_->dim()) throw std::invalid_argument("GridFn: shape/lattice dim mismatch");
    nodes_ = 1;
    for (int s : shape_) {
        if (s <= 0) throw std::invalid_argument("GridFn: nonpositive shape");
        nodes_ *= s;
    }
    data_.assign(size_t(nodes_) * rows_ * cols_, Cx(0));
}

long GridFn::flat(const std::vector<int>& idx) const {
    long f = 0;
    for (int ax = dim() - 1; ax >= 0; --ax) {
        int s = shape_[size_t(ax)];
        int i = idx[size_t(ax)] % s;
        if (i < 0) i += s;
        f = f * s + i;
    }
    return f;
}

std::vector<int> GridFn::unflat(long f) const {
    std::vector<int> idx(size_t(dim()));
    for (int ax = 0; ax < dim(); ++ax) {
        int s = shape_[size_t(ax)];
        idx[size_t(ax)] = int(f % s);
        f /= s;
    }
    return idx;
}

Eigen::Map<Eigen::MatrixXcd> GridFn::at(long f) {
    return {data_.data() + size_t(f) * rows_ * cols_, rows_, cols_};
}

Eigen::Map<const Eigen::MatrixXcd> GridFn::at(long f) const {
    return {data_.data() + size_t(f) * rows_ * cols_, rows_, cols_};
}

RatVector GridFn::node_exact(const std::vector<int>& idx) const {
    RatVector t(size_t(dim()));
    for (int ax = 0; ax < dim(); ++ax) t[size_t(ax)] = Rational(idx[size_t(ax)], shape_[size_t(ax)]);
    return dual_->basis() * t;
}

std::vector<int> GridFn::offset_of(const RatVector& w) const {
    RatVector t = dual_->basis_inv() * w;
    std::vector<int> o(size_t(dim()));
    for (int ax = 0; ax < dim(); ++ax) {
        Rational c = t[size_t(ax)] * Rational(shape_[size_t(ax)]);
        if (!c.is_integer()) throw std::domain_error("GridFn: offset not commensurate with the grid");
        o[size_t(ax)] = int(c.num() % BigInt(shape_[size_t(ax)]));
        if (o[size_t(ax)] < 0) o[size_t(ax)] += shape_[size_t(ax)];
    }
    return o;
}

double GridFn::mean_sq_norm() const {
    double s = 0;
    for (long f = 0; f < nodes_; ++f) s += at(f).squaredNorm();
    return s / double(nodes_);
}

TrigPoly GridFn::to_trig(double rel_tol) const {
    TrigPoly poly(per_->basis(), rows_, cols_);
    const int n = dim();
    // frequency window centered at zero
    std::vector<int> zlo(size_t(n)), zhi(size_t(n));
    for (int ax = 0; ax < n; ++ax) {
        zlo[size_t(ax)] = -(shape_[size_t(ax)] / 2);
        zhi[size_t(ax)] = shape_[size_t(ax)] - 1 + zlo[size_t(ax)];
    }
    std::vector<std::pair<std::vector<int>, Eigen::MatrixXcd>> raw;
    double maxnorm = 0;
    std::vector<int> z = zlo;
    while (true) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows_, cols_);
        for (long f = 0; f < nodes_; ++f) {
            std::vector<int> idx = unflat(f);
            double phase = 0;
            for (int ax = 0; ax < n; ++ax)
                phase += double(z[size_t(ax)]) * double(idx[size_t(ax)]) / double(shape_[size_t(ax)]);
            a += at(f) * std::polar(1.0 / double(nodes_), -kTwoPi * phase);
        }
        double nrm = a.cwiseAbs().maxCoeff();
        maxnorm = std::max(maxnorm, nrm);
        raw.emplace_back(z, std::move(a));
        int ax = 0;
        while (ax < n) {
            if (++z[size_t(ax)] <= zhi[size_t(ax)]) break;
            z[size_t(ax)] = zlo[size_t(ax)];
            ++ax;
        }
        if (ax == n) break;
    }
    for (auto& [zz, a] : raw)
        if (a.cwiseAbs().maxCoeff() > rel_tol * maxnorm) poly.add_term(zz, std::move(a));
    return poly;
}

TrigPoly::TrigPoly(RatMatrix gen_basis, int rows, int cols)
    : gen_basis_(std::move(gen_basis)), gen_basis_d_(gen_basis_.to_eigen()), rows_(rows), cols_(cols) {}

void TrigPoly::add_term(std::vector<int> z, Eigen::MatrixXcd coef) {
    terms_.emplace_back(std::move(z), std::move(coef));
}

Eigen::MatrixXcd TrigPoly::eval(const Eigen::VectorXd& xi) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows_, cols_);
    const int n = int(gen_basis_d_.rows());
    Eigen::VectorXd gtxi = gen_basis_d_.transpose() * xi;
    for (const auto& [z, a] : terms_) {
        double phase = 0;
        for (int ax = 0; ax < n; ++ax) phase += double(z[size_t(ax)]) * gtxi[ax];
        out += a * std::polar(1.0, kTwoPi * phase);
    }
    return out;
}

std::vector<int> commensurate_shape(int dim, int requested, const std::vector<RatVector>& offset_coords) {
    BigInt need = 1;
    for (const auto& t : offset_coords)
        for (const auto& c : t) need = lcm(need, c.den());
    long step = long(need);
    long s = ((requested + step - 1) / step) * step;
    if (s <= 0) s = step;
    return std::vector<int>(size_t(dim), int(s));
}

void GridFn::save(const std::filesystem::path& file) const {
    nlohmann::json hdr;
    hdr["shape"] = shape_;
    hdr["rows"] = rows_;
    hdr["cols"] = cols_;
    hdr["lattice"] = per_->basis().to_json();
    if (fine_per_) hdr["fine_periodicity"] = fine_per_->basis().to_json();
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("GridFn::save: cannot open " + file.string());
    out << hdr.dump() << "\n";
    // little-endian complex64 payload (re, im as float32)
    std::vector<float> buf;
    buf.reserve(data_.size() * 2);
    for (const Cx& v : data_) {
        buf.push_back(float(v.real()));
        buf.push_back(float(v.imag()));
    }
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size() * sizeof(float)));
}

GridFn GridFn::load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("GridFn::load: cannot open " + file.string());
    std::string line;
    std::getline(in, line);
    nlohmann::json hdr = nlohmann::json::parse(line);
    GridFn g(Lattice(RatMatrix::from_json(hdr["lattice"])), hdr["shape"].get<std::vector<int>>(),
             hdr["rows"].get<int>(), hdr["cols"].get<int>());
    if (hdr.contains("fine_periodicity"))
        g.set_fine_periodicity(Lattice(RatMatrix::from_json(hdr["fine_periodicity"])));
    std::vector<float> buf(g.data_.size() * 2);
    in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size() * sizeof(float)));
    if (!in) throw std::runtime_error("GridFn::load: truncated payload in " + file.string());
    for (size_t i = 0; i < g.data_.size(); ++i) g.data_[i] = Cx(buf[2 * i], buf[2 * i + 1]);
    return g;
}

nlohmann::json GridFn::to_json() const {
    nlohmann::json j;
    j["shape"] = shape_;
    j["rows"] = rows_;
    j["cols"] = cols_;
    j["lattice"] = per_->basis().to_json();
    nlohmann::json vals = nlohmann::json::array();
    char buf[64];
    for (const Cx& v : data_) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
        std::string re = buf;
        std::snprintf(buf, sizeof buf, "%.17g", v.imag());
        vals.push_back(nlohmann::json::array({re, std::string(buf)}));
    }
    j["values"] = std::move(vals);
    return j;
}

} // namespace ratmeyer
