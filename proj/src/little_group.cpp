#include "orbitrep/little_group.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitrep::little_group {

WignerRotation::WignerRotation(const sl2c::Matrix2c& d, const LorentzMatrix& lambda, const OrbitPoint& n)
    : d_(d), lambda_(lambda), n_(n) {
    if (std::abs(d.determinant() - 1.0) > kGroupTol)
        throw std::invalid_argument("WignerRotation: det != 1");
    if ((d.adjoint() * d - sl2c::Matrix2c::Identity()).cwiseAbs().maxCoeff() > kGroupTol)
        throw std::invalid_argument("WignerRotation: not unitary");
}

Eigen::Matrix3d WignerRotation::so3_image() const {
    const LorentzMatrix full = sl2c::covering_map(sl2c::Sl2cElement::from_matrix(d_));
    return full.matrix().block<3, 3>(1, 1);
}

double WignerRotation::rotation_angle() const {
    double c = d_.trace().real() / 2.0;
    c = std::clamp(c, -1.0, 1.0);
    return 2.0 * std::acos(c);
}

double WignerRotation::unitarity_residual() const {
    return (d_.adjoint() * d_ - sl2c::Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

OrbitPoint orbit_act(const LorentzMatrix& lambda, const OrbitPoint& n) {
    return OrbitPoint::from_vector(lambda * n.vector());
}

WignerRotation wigner_rotation(const LorentzMatrix& lambda, const OrbitPoint& n) {
    const OrbitPoint ln = orbit_act(lambda, n);
    const sl2c::Sl2cElement d =
        sl2c::spin_boost(ln).inverse() * sl2c::lift_lorentz(lambda) * sl2c::spin_boost(n);
    return WignerRotation(d.matrix(), lambda, n);
}

SpinorField induced_transform_field(const SpinorField& psi, const LorentzMatrix& lambda) {
    return [psi, lambda](const OrbitPoint& n, const FourVector& x) -> Eigen::Vector2cd {
        const LorentzMatrix inv = lambda.inverse();
        const OrbitPoint n_src = orbit_act(inv, n);
        const WignerRotation d = wigner_rotation(lambda, n_src);
        return d.matrix() * psi(n_src, inv * x);
    };
}

Eigen::Vector2cd induced_transform(const SpinorField& psi, const LorentzMatrix& lambda,
                                   const OrbitPoint& n, const FourVector& x) {
    return induced_transform_field(psi, lambda)(n, x);
}

void so3_axis_angle(const Eigen::Matrix3d& r, Eigen::Vector3d& axis, double& angle) {
    const Eigen::AngleAxisd aa(r);
    axis = aa.axis();
    angle = aa.angle();
}

}  // namespace orbitrep::little_group
