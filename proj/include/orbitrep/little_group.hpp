#pragma once

#include <Eigen/Dense>
#include <functional>

#include "orbitrep/minkowski.hpp"
#include "orbitrep/sl2c.hpp"

namespace orbitrep::little_group {

/**
The induced rotation D(Lambda, n) = B(Lambda n)^{-1} M_Lambda B(n),
where B is the spinor boost and M_Lambda the canonical SL(2,C) lift.
An element of SU(2); the lift leaves a tracked +- sign ambiguity, so
comparisons across compositions should use the SO(3) image or allow a
global sign.
*/
class WignerRotation {
public:
    WignerRotation(const sl2c::Matrix2c& d, const LorentzMatrix& lambda, const OrbitPoint& n);

    const sl2c::Matrix2c& matrix() const { return d_; }
    const LorentzMatrix& source_lambda() const { return lambda_; }
    const OrbitPoint& source_n() const { return n_; }

    /// SO(3) image (spin-1 adjoint action); sign-free.
    Eigen::Matrix3d so3_image() const;
    /// Rotation angle theta in [0, 2pi] with tr D = 2 cos(theta/2).
    double rotation_angle() const;

    double unitarity_residual() const;

private:
    sl2c::Matrix2c d_;
    LorentzMatrix lambda_;
    OrbitPoint n_;
};

/// The orbit action n -> Lambda n (cone branch preserved).
OrbitPoint orbit_act(const LorentzMatrix& lambda, const OrbitPoint& n);

WignerRotation wigner_rotation(const LorentzMatrix& lambda, const OrbitPoint& n);

/// A spinor-valued field sample over (n, x).
using SpinorField = std::function<Eigen::Vector2cd(const OrbitPoint&, const FourVector&)>;

/// The induced transformation law: the returned field evaluates to
/// D(Lambda, Lambda^{-1} n) psi(Lambda^{-1} n, Lambda^{-1} x), which
/// composes along Lambda2 Lambda1 up to the lift sign.
SpinorField induced_transform_field(const SpinorField& psi, const LorentzMatrix& lambda);

/// Single-point evaluation of the transformed sample.
Eigen::Vector2cd induced_transform(const SpinorField& psi, const LorentzMatrix& lambda,
                                   const OrbitPoint& n, const FourVector& x);

/// Axis and angle of a spatial rotation block (for reporting).
void so3_axis_angle(const Eigen::Matrix3d& r, Eigen::Vector3d& axis, double& angle);

}  // namespace orbitrep::little_group
