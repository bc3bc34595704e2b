#pragma once

#include <functional>
#include <memory>
#include <nlohmann/json.hpp>

#include "ratmeyer/boxes.hpp"
#include "ratmeyer/lattice.hpp"

namespace ratmeyer {

using Cx = std::complex<double>;

// A set of the form frame(boxes) with exact rational frame and corners.
struct FramedBoxes {
    RatMatrix frame;      // invertible
    RatMatrix frame_inv;  // cached
    BoxUnion boxes;

    bool contains(const RatVector& x) const { return boxes.contains(frame_inv * x); }
};

struct SupportSet {
    std::vector<FramedBoxes> parts;

    int dim() const;
    bool contains(const RatVector& x) const;
    // axis-aligned rational bounding box over all parts (via frame images of
    // box corners)
    Box bounding() const;
    SupportSet transformed(const RatMatrix& T) const;  // T(set)

    static SupportSet from_boxes(BoxUnion u);
    static SupportSet framed(const RatMatrix& frame, BoxUnion u);
};

// Band-limited function given by a frequency-domain evaluator with an exact
// support certificate and a JSON descriptor sufficient to re-instantiate it.
struct BandFn {
    std::function<Cx(const Eigen::VectorXd&)> eval;
    SupportSet support;
    nlohmann::json descriptor;

    Cx operator()(const Eigen::VectorXd& xi) const { return eval(xi); }
};

// Phase shift: (T_d f)^ = e^{-2pi i <d, xi>} fhat, same support.
BandFn shifted(const BandFn& f, const RatVector& d);

// Generators of a shift-invariant system over Gamma, with the fiber
// machinery shared by the Gramian and low-pass computations.
class ScalingVector {
public:
    ScalingVector() = default;
    ScalingVector(Lattice gamma, std::vector<BandFn> gens);

    int dim() const { return gamma_->dim(); }
    long multiplicity() const { return long(gens_.size()); }
    const Lattice& gamma() const { return *gamma_; }
    const std::vector<BandFn>& generators() const { return gens_; }

    // Dual-lattice shifts k with xi + k possibly inside some generator
    // support (an exact superset; extra shifts only contribute zeros).
    std::vector<RatVector> fiber_shifts(const RatVector& xi) const;

    // Column vector (phihat^1(xi), ..., phihat^N(xi)).
    Eigen::VectorXcd values(const Eigen::VectorXd& xi) const;

    nlohmann::json to_json() const;

private:
    std::shared_ptr<Lattice> gamma_;  // Lattice has no default ctor
    std::vector<BandFn> gens_;
    Box fiber_box_;  // bounding box over all generator supports
};

} // namespace ratmeyer
