#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "orbitrep/minkowski.hpp"

namespace orbitrep::sl2c {

using Matrix2c = Eigen::Matrix2cd;

/// Standard Pauli matrices sigma_1..3.
const std::array<Matrix2c, 3>& pauli();
/// sigma_mu = (+1, sigma_vec).
const std::array<Matrix2c, 4>& pauli_four();
/// sigmabar_mu = (-1, sigma_vec).
const std::array<Matrix2c, 4>& pauli_bar_four();

/**
The Pauli triple adapted to the quaternionic vector map below:
(sigma_1, -sigma_2, sigma_3). The vector map places a^1 + i a^2 in the
upper-right entry, which transposes the usual quaternion basis; this
triple is the one that multiplies the spatial components there.
*/
const std::array<Matrix2c, 3>& pauli_vecmap();

/// A member of SL(2,C): 2x2 complex with det = 1 (checked at 1e-12).
class Sl2cElement {
public:
    Sl2cElement() : m_(Matrix2c::Identity()) {}
    static Sl2cElement from_matrix(const Matrix2c& m);

    const Matrix2c& matrix() const { return m_; }
    Sl2cElement operator*(const Sl2cElement& o) const;
    Sl2cElement inverse() const;
    Sl2cElement adjoint() const;

private:
    struct unchecked_tag {};
    Sl2cElement(const Matrix2c& m, unchecked_tag) : m_(m) {}
    Matrix2c m_;
};

/// A = (1/sqrt2) [[a0+a3, a1+i a2], [a1-i a2, a0-a3]].
/// det(A) = -1/2 a.a for any real a.
Matrix2c vector_to_matrix(const FourVector& a);

/// Inverse of vector_to_matrix. Requires A Hermitian within 1e-10.
FourVector matrix_to_vector(const Matrix2c& A);

/// Positive Hermitian det-1 boost in the spinor representation, with
/// covering_map(spin_boost(n)) = boost_matrix(n). Closed form
/// (1 + n^0 + n.sigma_vecmap) / sqrt(2 (1 + n^0)).
Sl2cElement spin_boost(const OrbitPoint& n);

/// The two-to-one covering homomorphism, defined through
/// M A(a) M^dagger = A(Lambda a) for every real a.
LorentzMatrix covering_map(const Sl2cElement& M);

/// SU(2) lift of a rotation (a Lorentz matrix fixing n0), with
/// covering_map(lift_rotation(R)) = R. Sign fixed by a nonnegative
/// quaternion scalar part.
Sl2cElement lift_rotation(const LorentzMatrix& R);

/// Canonical SL(2,C) lift of a proper orthochronous Lambda via the
/// boost-rotation (polar) factorization Lambda = L(Lambda n0) R.
Sl2cElement lift_lorentz(const LorentzMatrix& lambda);

}  // namespace orbitrep::sl2c
