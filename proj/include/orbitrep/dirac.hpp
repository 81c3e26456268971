#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "orbitrep/angular.hpp"
#include "orbitrep/minkowski.hpp"

namespace orbitrep::dirac {

using angular::ExactMatrix;

/**
Dirac matrices in the chiral basis with the Clifford sign
{gamma_mu, gamma_nu} = -2 eta_{mu nu}, so (gamma.n)^2 = +1 for unit
timelike n. gamma5 = i gamma0 gamma1 gamma2 gamma3 is diagonal.
The stored family carries the lower index; gamma.v always means
gamma_mu v^mu.
*/
class GammaSet {
public:
    static const GammaSet& instance();

    const Eigen::Matrix4cd& gamma(int mu) const { return g_[mu]; }
    const Eigen::Matrix4cd& gamma_upper(int mu) const { return gu_[mu]; }
    const Eigen::Matrix4cd& gamma5() const { return g5_; }
    const ExactMatrix& gamma_exact(int mu) const { return ge_[mu]; }
    const ExactMatrix& gamma_upper_exact(int mu) const { return gue_[mu]; }
    const ExactMatrix& gamma5_exact() const { return g5e_; }

private:
    GammaSet();
    std::array<Eigen::Matrix4cd, 4> g_, gu_;
    Eigen::Matrix4cd g5_;
    std::array<ExactMatrix, 4> ge_, gue_;
    ExactMatrix g5e_;
};

/// gamma.v = gamma_mu v^mu.
Eigen::Matrix4cd gamma_dot(const FourVector& v);

/// Sigma^{mu nu} = (i/4) [gamma^mu, gamma^nu].
Eigen::Matrix4cd sigma_upper(int mu, int nu);

/// K^mu = Sigma^{mu nu} n_nu.
std::array<Eigen::Matrix4cd, 4> k_vector(const OrbitPoint& n);

struct KOperators {
    Eigen::Matrix4cd k_l, k_t;
};

/// Longitudinal/transverse split of the Dirac operator:
/// K_L = -(p.n)(gamma.n), K_T = -2i gamma5 (p.K)(gamma.n);
/// K_L^2 = (p.n)^2 and K_T^2 = p^2 + (p.n)^2.
KOperators k_operators(const FourVector& p, const OrbitPoint& n);

/// Exact-arithmetic variant over rational inputs (n.n = -1 required).
struct ExactKOperators {
    ExactMatrix k_l, k_t;
    Rational pn;   // p.n
    Rational pp;   // p.p
};
ExactKOperators k_operators_exact(const std::array<Rational, 4>& p, const std::array<Rational, 4>& n);

/// (K_T^2 - K_L^2) / 2M.
Eigen::Matrix4cd free_hamiltonian(const FourVector& p, const OrbitPoint& n, double mass);

struct ProjectedAlgebra {
    OrbitPoint n = OrbitPoint::rest();
    std::array<Eigen::Matrix4cd, 4> gamma_n;              // gamma_n^mu = gamma_lambda h^{lambda mu}
    std::array<std::array<Eigen::Matrix4cd, 4>, 4> sigma_n;  // (i/4)[gamma_n^mu, gamma_n^nu]
    std::array<Eigen::Matrix4cd, 4> k;                    // K^mu
    Eigen::Matrix4d h;                                    // projector metric
};

ProjectedAlgebra projected_algebra(const OrbitPoint& n);

/// Max-norm residual of the full commutator table
///   [K^m, K^n] = -i Sigma_n^{mn}
///   [Sigma_n^{mn}, K^l] = -i (h^{nl} K^m - h^{ml} K^n)
///   [Sigma_n^{mn}, Sigma_n^{lr}] =
///       -i (h^{nl} Sigma_n^{mr} + h^{mr} Sigma_n^{nl}
///           - h^{ml} Sigma_n^{nr} - h^{nr} Sigma_n^{ml})
/// together with K.n = 0, Sigma_n n = 0 and the equality of the two
/// constructions of Sigma_n.
double projected_algebra_residual(const ProjectedAlgebra& alg);

/// Spin term coupling Sigma_n^{mu nu} f_{mu nu}.
Eigen::Matrix4cd spin_coupling(const OrbitPoint& n, const Eigen::Matrix4d& f_lower);

/// (p^2/2M) 1 + e_over_2mc Sigma_n^{mu nu} f_{mu nu} at numeric momentum
/// (constant field; the gauge potential is folded into p).
Eigen::Matrix4cd em_hamiltonian(const FourVector& p, const OrbitPoint& n,
                                const Eigen::Matrix4d& f_lower, double e_over_2mc, double mass = 1.0);

struct Projectors {
    Eigen::Matrix4cd parity_plus, parity_minus;      // 1/2 (1 -+ gamma.n)
    Eigen::Matrix4cd energy_plus, energy_minus;      // 1/2 (1 -+ (p.n)/|p.n|)
    Eigen::Matrix4cd helicity_plus, helicity_minus;  // 1/2 (1 -+ 2i g5 (p.K)/sqrt(p^2+(p.n)^2))
};

/// Throws std::domain_error when p.n = 0 (energy pair) or
/// p^2 + (p.n)^2 <= 0 (helicity pair).
Projectors projectors(const FourVector& p, const OrbitPoint& n);

/**
A 4-spinor sample carrying its orbit label, in the basis produced by the
(1/sqrt2) [[1,1],[-1,1]] block mixing of the two boosted 2-spinors.
*/
struct DiracSpinorSample {
    Eigen::Vector4cd components;
    OrbitPoint n = OrbitPoint::rest();
};

/// psi = T (B(n) phi, B(n)^{-1} chi) with the first/second-kind boosts of
/// the gamma sector and T the fixed block mixing.
DiracSpinorSample assemble_spinor(const Eigen::Vector2cd& phi, const Eigen::Vector2cd& chi,
                                  const OrbitPoint& n);

/// The n-weighted sesquilinear form; on assembled spinors it equals
/// |phi|^2 + |chi|^2 on either cone branch. Antilinear in the first slot.
std::complex<double> indefinite_form(const DiracSpinorSample& psi1, const DiracSpinorSample& psi2);

/// The form metric sign(n^0) T gamma_0 (gamma.n) T^t in the sample basis.
Eigen::Matrix4cd form_metric(const OrbitPoint& n);

/// Finite Lorentz spinor transformation S(Lambda) in the sample basis;
/// assembled samples satisfy psi'(n) = S psi(Lambda^{-1} n) with the form
/// invariant.
Eigen::Matrix4cd spinor_transformation(const LorentzMatrix& lambda);

/// A wave-function sample over (x; n; tau).
using DiracField = std::function<Eigen::Vector4cd(const FourVector& x, const OrbitPoint& n, double tau)>;

enum class DiscreteKind { C, P, T, CP, CPT };

/// The discrete symmetry table: matrix factor, complex conjugation where
/// it applies, and the argument reflections in (t, x, n0, nvec, tau).
DiracField discrete_symmetry(DiscreteKind kind, const DiracField& psi);

/// JSON dump of the gamma family and the projected algebra at n
/// (row-major, complex entries as [re, im]).
std::string matrix_families_json(const OrbitPoint& n);

}  // namespace orbitrep::dirac
