#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "orbitrep/minkowski.hpp"
#include "orbitrep/operator_expr.hpp"

namespace orbitrep::poincare {

/**
The symbolic generator families:
  M^{mu nu}  = x^mu p^nu - x^nu p^mu - i (n^mu dn^nu - n^nu dn^mu)
  K^mu       = M^{mu nu} n_nu
  M_n^{mu nu} = M^{mu nu} + K^mu n^nu - K^nu n^mu
Antisymmetry of the index pair is enforced on access.
*/
class GeneratorSet {
public:
    GeneratorSet();
    const OperatorExpr& m(int mu, int nu) const;
    const OperatorExpr& k(int mu) const { return k_[mu]; }
    const OperatorExpr& m_n(int mu, int nu) const;
    static OperatorExpr h(int mu, int nu);  // eta^{mu nu} + n^mu n^nu as an expression

private:
    std::array<std::array<OperatorExpr, 4>, 4> m_, mn_;
    std::array<OperatorExpr, 4> k_;
};

GeneratorSet build_generators();

/// Generators with n frozen at a rational point of the unit shell; the
/// spatial rotation block at the rest point is derivative-free and obeys
/// the ordinary angular-momentum algebra.
struct NumericGenerators {
    std::array<Rational, 4> n_value;
    std::array<std::array<OperatorExpr, 4>, 4> m_n;
};
NumericGenerators build_generators_numeric(const std::array<Rational, 4>& n_value);

struct ClosureEntry {
    std::string relation;        // "[Mn,Mn]", "[Mn,x]", "Mn.n", "K.n", ...
    std::array<int, 4> indices;  // unused slots carry -1
    bool closed = false;
    std::string coefficient_note;  // the recorded sign/pattern
    int residual_terms = 0;
};

struct OrbitAlgebraReport {
    std::vector<ClosureEntry> entries;
    bool all_closed = true;
    std::string to_json() const;
};

/**
Verifies, in exact arithmetic modulo the shell ideal (n.n + 1):
  - [M_n^{mu nu}, M_n^{ka la}] closes on the h-contracted M_n pattern
    with coefficient +i and h-factors standing left of M_n;
  - [M_n^{mu nu}, x^la] closes on i h x - i h x + i (h n - h n)(x.n)
    with the recorded relative sign of the last term;
  - M_n^{mu nu} n_nu and K^mu n_mu vanish on the shell;
  - M^{mu nu} is self-adjoint under the declared adjoint rules with the
    measure term tracked.
*/
OrbitAlgebraReport verify_orbit_algebra();

struct PauliLubanskiSymbolic {
    std::array<OperatorExpr, 4> w;  // W_mu = 1/2 eps_{mu nu ka la} M_n^{nu ka} p^la
    OperatorExpr casimir;           // C_n = W.W
    bool epsilon_reorder_vanishes = false;  // eps [M_n, p] = 0
    bool w_commutes_with_p = false;
    bool casimir_commutes_with_p2 = false;
};
PauliLubanskiSymbolic pauli_lubanski_symbolic();

struct PauliLubanskiNumeric {
    std::array<Eigen::Matrix4cd, 4> w;
    Eigen::Matrix4cd casimir;
};
/// Spin realization with M_n -> Sigma_n of the gamma sector.
PauliLubanskiNumeric pauli_lubanski_numeric(const FourVector& p, const OrbitPoint& n);

/// d n^mu / d p^nu for n(p) = p / sqrt(-p.p), upper-upper form
/// (1/m)(eta^{mu nu} + p^mu p^nu / m^2). Rejects non-timelike p.
Eigen::Matrix4d n_of_p_jacobian(const FourVector& p);

/// Central-difference oracle for the jacobian (mixed form, second index
/// lowered internally for the comparison).
Eigen::Matrix4d n_of_p_jacobian_fd(const FourVector& p, double step_scale = 1e-6);

}  // namespace orbitrep::poincare
