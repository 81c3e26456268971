#include "orbitrep/sl2c.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitrep::sl2c {

namespace {
const std::complex<double> kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

const std::array<Matrix2c, 3>& pauli() {
    static const std::array<Matrix2c, 3> s = [] {
        std::array<Matrix2c, 3> a;
        a[0] << 0, 1, 1, 0;
        a[1] << 0, -kI, kI, 0;
        a[2] << 1, 0, 0, -1;
        return a;
    }();
    return s;
}

const std::array<Matrix2c, 4>& pauli_four() {
    static const std::array<Matrix2c, 4> s = [] {
        std::array<Matrix2c, 4> a;
        a[0] = Matrix2c::Identity();
        for (int k = 0; k < 3; ++k) a[k + 1] = pauli()[k];
        return a;
    }();
    return s;
}

const std::array<Matrix2c, 4>& pauli_bar_four() {
    static const std::array<Matrix2c, 4> s = [] {
        std::array<Matrix2c, 4> a;
        a[0] = -Matrix2c::Identity();
        for (int k = 0; k < 3; ++k) a[k + 1] = pauli()[k];
        return a;
    }();
    return s;
}

const std::array<Matrix2c, 3>& pauli_vecmap() {
    static const std::array<Matrix2c, 3> s = [] {
        std::array<Matrix2c, 3> a = pauli();
        a[1] = -a[1];
        return a;
    }();
    return s;
}

Sl2cElement Sl2cElement::from_matrix(const Matrix2c& m) {
    if (!m.allFinite()) throw std::invalid_argument("Sl2cElement: non-finite entry");
    if (std::abs(m.determinant() - 1.0) > kGroupTol)
        throw std::invalid_argument("Sl2cElement: det != 1");
    return Sl2cElement(m, unchecked_tag{});
}

Sl2cElement Sl2cElement::operator*(const Sl2cElement& o) const {
    return Sl2cElement(Matrix2c(m_ * o.m_), unchecked_tag{});
}

Sl2cElement Sl2cElement::inverse() const {
    // det = 1: adjugate is the inverse.
    Matrix2c inv;
    inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return Sl2cElement(inv, unchecked_tag{});
}

Sl2cElement Sl2cElement::adjoint() const { return Sl2cElement(Matrix2c(m_.adjoint()), unchecked_tag{}); }

Matrix2c vector_to_matrix(const FourVector& a) {
    Matrix2c m;
    m << a[0] + a[3], a[1] + kI * a[2], a[1] - kI * a[2], a[0] - a[3];
    return m / kSqrt2;
}

FourVector matrix_to_vector(const Matrix2c& A) {
    if ((A - A.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("matrix_to_vector: matrix is not Hermitian");
    return FourVector(((A(0, 0) + A(1, 1)) / kSqrt2).real(), ((A(0, 1) + A(1, 0)) / kSqrt2).real(),
                      ((-kI * (A(0, 1) - A(1, 0))) / kSqrt2).real(), ((A(0, 0) - A(1, 1)) / kSqrt2).real());
}

Sl2cElement spin_boost(const OrbitPoint& n) {
    if (n.cone_sign() < 0)
        throw std::invalid_argument("spin_boost: n must be on the positive cone");
    Matrix2c b = (1.0 + n[0]) * Matrix2c::Identity();
    const auto& sv = pauli_vecmap();
    for (int k = 0; k < 3; ++k) b += n[k + 1] * sv[k];
    return Sl2cElement::from_matrix(Matrix2c(b / std::sqrt(2.0 * (1.0 + n[0]))));
}

LorentzMatrix covering_map(const Sl2cElement& M) {
    Eigen::Matrix4d L;
    for (int nu = 0; nu < 4; ++nu) {
        Eigen::Vector4d e = Eigen::Vector4d::Zero();
        e(nu) = 1.0;
        const Matrix2c img = M.matrix() * vector_to_matrix(FourVector(e)) * M.matrix().adjoint();
        L.col(nu) = matrix_to_vector(img).components();
    }
    return LorentzMatrix::from_matrix(L);
}

Sl2cElement lift_rotation(const LorentzMatrix& R) {
    const Eigen::Matrix4d& m = R.matrix();
    if (std::abs(m(0, 0) - 1.0) > 1e-9)
        throw std::invalid_argument("lift_rotation: matrix does not fix n0");
    const Eigen::Matrix3d q3 = m.block<3, 3>(1, 1);
    Eigen::Quaterniond q(q3);
    if (q.w() < 0.0) q.coeffs() = -q.coeffs();
    // With the transposed quaternion layout the SU(2) element for
    // quaternion (w, x, y, z) is w + i (x s1 - y s2 + z s3).
    const auto& s = pauli();
    Matrix2c u = q.w() * Matrix2c::Identity() + kI * (q.x() * s[0] - q.y() * s[1] + q.z() * s[2]);
    return Sl2cElement::from_matrix(u);
}

Sl2cElement lift_lorentz(const LorentzMatrix& lambda) {
    const OrbitPoint m = OrbitPoint::from_vector(lambda * FourVector(1, 0, 0, 0));
    const LorentzMatrix rot = boost_matrix(m).inverse() * lambda;
    return spin_boost(m) * lift_rotation(rot);
}

}  // namespace orbitrep::sl2c
