#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "orbitrep/config.hpp"

namespace orbitrep {

/// Minkowski metric, signature (-,+,+,+), index 0 timelike.
const Eigen::Matrix4d& minkowski_metric();

/**
A real 4-vector with components indexed mu = 0..3 (0 timelike).
Constructors reject non-finite components.
*/
class FourVector {
public:
    FourVector() : v_(Eigen::Vector4d::Zero()) {}
    FourVector(double t, double x, double y, double z);
    explicit FourVector(const Eigen::Vector4d& c);

    double operator[](int mu) const { return v_(mu); }
    const Eigen::Vector4d& components() const { return v_; }
    Eigen::Vector3d spatial() const { return v_.tail<3>(); }

    FourVector operator+(const FourVector& o) const { return FourVector(Eigen::Vector4d(v_ + o.v_)); }
    FourVector operator-(const FourVector& o) const { return FourVector(Eigen::Vector4d(v_ - o.v_)); }
    FourVector operator*(double s) const { return FourVector(Eigen::Vector4d(s * v_)); }
    FourVector operator-() const { return FourVector(Eigen::Vector4d(-v_)); }

private:
    Eigen::Vector4d v_;
};

double minkowski_dot(const FourVector& a, const FourVector& b);

/// Lowered components a_mu = eta_{mu nu} a^nu.
Eigen::Vector4d lower_index(const FourVector& a);

/**
A proper orthochronous Lorentz transformation Lambda^mu_nu.
from_matrix() enforces Lambda^T eta Lambda = eta (1e-12 entrywise),
det = +1 and Lambda^0_0 >= 1.
*/
class LorentzMatrix {
public:
    LorentzMatrix() : m_(Eigen::Matrix4d::Identity()) {}
    static LorentzMatrix identity() { return LorentzMatrix(); }
    static LorentzMatrix from_matrix(const Eigen::Matrix4d& m);

    const Eigen::Matrix4d& matrix() const { return m_; }
    double operator()(int mu, int nu) const { return m_(mu, nu); }

    FourVector operator*(const FourVector& a) const { return FourVector(Eigen::Vector4d(m_ * a.components())); }
    LorentzMatrix operator*(const LorentzMatrix& o) const;

    /// Group inverse eta Lambda^T eta (exact up to rounding, no solve).
    LorentzMatrix inverse() const;

private:
    struct unchecked_tag {};
    LorentzMatrix(const Eigen::Matrix4d& m, unchecked_tag) : m_(m) {}
    Eigen::Matrix4d m_;
};

/**
A point on the unit timelike orbit: the stability vector n with
n.n = -1, together with the sign of n^0 (light-cone branch).
*/
class OrbitPoint {
public:
    static OrbitPoint from_vector(const FourVector& n);
    /// The rest point n0 = (1,0,0,0).
    static OrbitPoint rest();
    /// Unit timelike vector with the given spatial velocity-like part.
    static OrbitPoint from_spatial(const Eigen::Vector3d& b, int cone_sign = +1);

    const FourVector& vector() const { return n_; }
    double operator[](int mu) const { return n_[mu]; }
    int cone_sign() const { return cone_sign_; }

private:
    OrbitPoint(const FourVector& n, int cone) : n_(n), cone_sign_(cone) {}
    FourVector n_;
    int cone_sign_;
};

/// h^{lambda mu} = eta^{lambda mu} + n^lambda n^mu: projector onto the
/// spacelike hyperplane orthogonal to n. Satisfies h (eta n) = 0 and
/// h eta h = h.
class ProjectorH {
public:
    explicit ProjectorH(const OrbitPoint& n);
    const Eigen::Matrix4d& matrix() const { return h_; }
    double operator()(int mu, int nu) const { return h_(mu, nu); }

private:
    Eigen::Matrix4d h_;
};

/**
Totally antisymmetric Levi-Civita symbol with eps_{0123} = +1.
Indices are raised with eta, so eps^{0123} = -1 and the full
contraction eps_{mnkl} eps^{mnkl} equals -24.
*/
struct LeviCivita {
    /// eps_{mu nu ka la} (all indices down).
    static int lower(int mu, int nu, int ka, int la);
    /// eps^{mu nu ka la} = -lower under signature (-,+,+,+).
    static int upper(int mu, int nu, int ka, int la);
};

/// The unique symmetric pure boost L(n) with L(n) n0 = n.
/// Requires n on the positive cone.
LorentzMatrix boost_matrix(const OrbitPoint& n);

/// Spatial rotation about `axis` (right-handed) by `angle`, embedded as a
/// Lorentz matrix fixing n0.
LorentzMatrix rotation_matrix(const Eigen::Vector3d& axis, double angle);

/// Deterministic pseudo-random proper orthochronous transformation:
/// the exponential of a generator with the six boost/rotation parameters
/// drawn uniformly from [-scale, scale]. scale = 0 gives the identity.
LorentzMatrix random_lorentz(std::uint64_t seed, double scale);

/// Deterministic random unit timelike vector on the positive cone with
/// spatial components of magnitude up to `scale`.
OrbitPoint random_orbit_point(std::uint64_t seed, double scale);

/// Portable uniform double in [0, 1) from a 64-bit generator state.
inline double uniform01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace orbitrep
