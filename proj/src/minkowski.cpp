#include "orbitrep/minkowski.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <stdexcept>

namespace orbitrep {

const Eigen::Matrix4d& minkowski_metric() {
    static const Eigen::Matrix4d eta = [] {
        Eigen::Matrix4d e = Eigen::Matrix4d::Identity();
        e(0, 0) = -1.0;
        return e;
    }();
    return eta;
}

FourVector::FourVector(double t, double x, double y, double z) : v_(t, x, y, z) {
    if (!v_.allFinite()) throw std::invalid_argument("FourVector: non-finite component");
}

FourVector::FourVector(const Eigen::Vector4d& c) : v_(c) {
    if (!v_.allFinite()) throw std::invalid_argument("FourVector: non-finite component");
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    const auto& u = a.components();
    const auto& w = b.components();
    return -u(0) * w(0) + u(1) * w(1) + u(2) * w(2) + u(3) * w(3);
}

Eigen::Vector4d lower_index(const FourVector& a) {
    Eigen::Vector4d l = a.components();
    l(0) = -l(0);
    return l;
}

LorentzMatrix LorentzMatrix::from_matrix(const Eigen::Matrix4d& m) {
    if (!m.allFinite()) throw std::invalid_argument("LorentzMatrix: non-finite entry");
    const Eigen::Matrix4d& eta = minkowski_metric();
    const Eigen::Matrix4d res = m.transpose() * eta * m - eta;
    if (res.cwiseAbs().maxCoeff() > kGroupTol)
        throw std::invalid_argument("LorentzMatrix: Lambda^T eta Lambda != eta");
    if (std::abs(m.determinant() - 1.0) > 1e-10)
        throw std::invalid_argument("LorentzMatrix: det != +1");
    if (m(0, 0) < 1.0 - kGroupTol)
        throw std::invalid_argument("LorentzMatrix: not orthochronous");
    return LorentzMatrix(m, unchecked_tag{});
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    return LorentzMatrix(Eigen::Matrix4d(m_ * o.m_), unchecked_tag{});
}

LorentzMatrix LorentzMatrix::inverse() const {
    const Eigen::Matrix4d& eta = minkowski_metric();
    return LorentzMatrix(Eigen::Matrix4d(eta * m_.transpose() * eta), unchecked_tag{});
}

OrbitPoint OrbitPoint::from_vector(const FourVector& n) {
    const double norm = minkowski_dot(n, n);
    if (std::abs(norm + 1.0) > kGroupTol)
        throw std::invalid_argument("OrbitPoint: n.n != -1");
    if (n[0] == 0.0) throw std::invalid_argument("OrbitPoint: n^0 = 0");
    return OrbitPoint(n, n[0] > 0 ? +1 : -1);
}

OrbitPoint OrbitPoint::rest() { return OrbitPoint(FourVector(1, 0, 0, 0), +1); }

OrbitPoint OrbitPoint::from_spatial(const Eigen::Vector3d& b, int cone_sign) {
    const double g = std::sqrt(1.0 + b.squaredNorm());
    const double s = cone_sign >= 0 ? 1.0 : -1.0;
    return OrbitPoint(FourVector(s * g, b(0), b(1), b(2)), cone_sign >= 0 ? +1 : -1);
}

ProjectorH::ProjectorH(const OrbitPoint& n) {
    // eta^{mu nu} has the same entries as eta_{mu nu}.
    h_ = minkowski_metric() + n.vector().components() * n.vector().components().transpose();
}

int LeviCivita::lower(int mu, int nu, int ka, int la) {
    const int i[4] = {mu, nu, ka, la};
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (i[a] == i[b]) return 0;
            if (i[a] > i[b]) sign = -sign;
        }
    return sign;
}

int LeviCivita::upper(int mu, int nu, int ka, int la) { return -lower(mu, nu, ka, la); }

LorentzMatrix boost_matrix(const OrbitPoint& n) {
    if (n.cone_sign() < 0)
        throw std::invalid_argument("boost_matrix: n must be on the positive cone");
    const double g = n[0];
    const Eigen::Vector3d b = n.vector().spatial();
    Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
    L(0, 0) = g;
    for (int i = 0; i < 3; ++i) {
        L(0, i + 1) = L(i + 1, 0) = b(i);
        for (int j = 0; j < 3; ++j) L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + b(i) * b(j) / (1.0 + g);
    }
    return LorentzMatrix::from_matrix(L);
}

LorentzMatrix rotation_matrix(const Eigen::Vector3d& axis, double angle) {
    if (axis.norm() == 0.0) throw std::invalid_argument("rotation_matrix: zero axis");
    Eigen::Matrix4d R = Eigen::Matrix4d::Identity();
    R.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
    return LorentzMatrix::from_matrix(R);
}

LorentzMatrix random_lorentz(std::uint64_t seed, double scale) {
    if (scale < 0.0) throw std::invalid_argument("random_lorentz: scale must be >= 0");
    std::mt19937_64 rng(seed);
    double w[6];
    for (double& x : w) x = scale * (2.0 * uniform01(rng()) - 1.0);
    // omega_{mu nu} antisymmetric: w[0..2] boosts (0i), w[3..5] rotations (ij).
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = w[0];
    omega(0, 2) = w[1];
    omega(0, 3) = w[2];
    omega(1, 2) = w[3];
    omega(1, 3) = w[4];
    omega(2, 3) = w[5];
    omega -= Eigen::Matrix4d(omega.transpose());
    // Mixed-index generator eta^{-1} omega; its exponential preserves eta.
    const Eigen::Matrix4d gen = minkowski_metric() * omega;
    return LorentzMatrix::from_matrix(gen.exp());
}

OrbitPoint random_orbit_point(std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Eigen::Vector3d b;
    for (int i = 0; i < 3; ++i) b(i) = scale * (2.0 * uniform01(rng()) - 1.0);
    return OrbitPoint::from_spatial(b);
}

}  // namespace orbitrep
