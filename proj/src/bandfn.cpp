#include "ratmeyer/bandfn.hpp"

#include "ratmeyer/phase.hpp"

namespace ratmeyer {

int SupportSet::dim() const {
    if (parts.empty()) return 0;
    return parts.front().frame.rows();
}

bool SupportSet::contains(const RatVector& x) const {
    for (const auto& p : parts)
        if (p.contains(x)) return true;
    return false;
}

Box SupportSet::bounding() const {
    if (parts.empty()) throw std::domain_error("SupportSet: empty");
    int n = dim();
    Box out;
    bool first = true;
    for (const auto& p : parts)
        for (const auto& b : p.boxes.boxes) {
            // frame image of every corner
            for (long mask = 0; mask < (1L << n); ++mask) {
                RatVector corner(size_t(n));
                for (int i = 0; i < n; ++i) corner[size_t(i)] = (mask >> i) & 1 ? b.hi[size_t(i)] : b.lo[size_t(i)];
                RatVector y = p.frame * corner;
                if (first) {
                    out.lo = y;
                    out.hi = y;
                    first = false;
                } else {
                    for (int i = 0; i < n; ++i) {
                        if (y[size_t(i)] < out.lo[size_t(i)]) out.lo[size_t(i)] = y[size_t(i)];
                        if (out.hi[size_t(i)] < y[size_t(i)]) out.hi[size_t(i)] = y[size_t(i)];
                    }
                }
            }
        }
    return out;
}

SupportSet SupportSet::transformed(const RatMatrix& T) const {
    SupportSet s;
    RatMatrix Tinv = T.inverse();
    for (const auto& p : parts)
        s.parts.push_back(FramedBoxes{T * p.frame, p.frame_inv * Tinv, p.boxes});
    return s;
}

SupportSet SupportSet::from_boxes(BoxUnion u) {
    int n = u.dim();
    SupportSet s;
    s.parts.push_back(FramedBoxes{RatMatrix::identity(n), RatMatrix::identity(n), std::move(u)});
    return s;
}

SupportSet SupportSet::framed(const RatMatrix& frame, BoxUnion u) {
    SupportSet s;
    s.parts.push_back(FramedBoxes{frame, frame.inverse(), std::move(u)});
    return s;
}

BandFn shifted(const BandFn& f, const RatVector& d) {
    BandFn g;
    Eigen::VectorXd dd = rat_to_eigen(d);
    auto inner = f.eval;
    g.eval = [inner, dd](const Eigen::VectorXd& xi) {
        return std::polar(1.0, -6.28318530717958647692 * dd.dot(xi)) * inner(xi);
    };
    g.support = f.support;
    nlohmann::json desc;
    desc["type"] = "shifted";
    nlohmann::json dj = nlohmann::json::array();
    for (const auto& c : d) dj.push_back(c.str());
    desc["d"] = std::move(dj);
    desc["inner"] = f.descriptor;
    g.descriptor = std::move(desc);
    return g;
}

ScalingVector::ScalingVector(Lattice gamma, std::vector<BandFn> gens)
    : gamma_(std::make_shared<Lattice>(std::move(gamma))), gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("ScalingVector: no generators");
    bool first = true;
    for (const auto& g : gens_) {
        Box b = g.support.bounding();
        if (first) {
            fiber_box_ = b;
            first = false;
        } else {
            for (size_t i = 0; i < fiber_box_.lo.size(); ++i) {
                if (b.lo[i] < fiber_box_.lo[i]) fiber_box_.lo[i] = b.lo[i];
                if (fiber_box_.hi[i] < b.hi[i]) fiber_box_.hi[i] = b.hi[i];
            }
        }
    }
}

std::vector<RatVector> ScalingVector::fiber_shifts(const RatVector& xi) const {
    RatVector lo = rat_sub(fiber_box_.lo, xi);
    RatVector hi = rat_sub(fiber_box_.hi, xi);
    return gamma_->dual().points_in_box(lo, hi);
}

Eigen::VectorXcd ScalingVector::values(const Eigen::VectorXd& xi) const {
    Eigen::VectorXcd v(long(gens_.size()));
    for (size_t i = 0; i < gens_.size(); ++i) v[long(i)] = gens_[i].eval(xi);
    return v;
}

nlohmann::json ScalingVector::to_json() const {
    nlohmann::json j;
    j["lattice"] = gamma_->basis().to_json();
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : gens_) gens.push_back(g.descriptor);
    j["generators"] = std::move(gens);
    return j;
}

} // namespace ratmeyer
