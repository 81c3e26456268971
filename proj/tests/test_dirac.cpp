#include "doctest.h"
#include "orbitrep/dirac.hpp"

#include <cmath>
#include <random>

#include "orbitrep/little_group.hpp"
#include "orbitrep/sl2c.hpp"

using namespace orbitrep;
using namespace orbitrep::dirac;
using cd = std::complex<double>;

namespace {
const cd I(0, 1);

// rational points on the unit hyperboloid for exact checks
const std::array<Rational, 4> kRationalN1 = {Rational(5, 4), Rational(3, 4), Rational(0), Rational(0)};
const std::array<Rational, 4> kRationalN2 = {Rational(9, 8), Rational(1, 2), Rational(1, 8),
                                             Rational(0)};
}  // namespace

TEST_CASE("gamma matrices satisfy the clifford algebra exactly") {
    const auto& g = GammaSet::instance();
    const auto& eta = minkowski_metric();
    for (int m = 0; m < 4; ++m)
        for (int v = 0; v < 4; ++v) {
            const ExactMatrix anti = g.gamma_exact(m) * g.gamma_exact(v) +
                                     g.gamma_exact(v) * g.gamma_exact(m) +
                                     ExactMatrix::identity(4).scaled(CRational(Rational(2 * int(eta(m, v)))));
            CHECK(anti.is_zero());
        }
    // gamma5: square one, anticommutes with the vector matrices
    const ExactMatrix g5sq = g.gamma5_exact() * g.gamma5_exact() - ExactMatrix::identity(4);
    CHECK(g5sq.is_zero());
    for (int m = 0; m < 4; ++m) {
        const ExactMatrix anti =
            g.gamma5_exact() * g.gamma_exact(m) + g.gamma_exact(m) * g.gamma5_exact();
        CHECK(anti.is_zero());
    }
    // (gamma.n)^2 = +1 for unit timelike n
    const auto n = random_orbit_point(3, 1.0);
    const Eigen::Matrix4cd gn = gamma_dot(n.vector());
    CHECK((gn * gn - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("K operator identities") {
    SUBCASE("exact: K_L^2 = (p.n)^2 and K_T^2 = p^2 + (p.n)^2 on rational inputs") {
        const std::array<Rational, 4> p = {Rational(7, 3), Rational(-1, 2), Rational(2, 5),
                                           Rational(1)};
        for (const auto& n : {kRationalN1, kRationalN2}) {
            const auto k = k_operators_exact(p, n);
            const ExactMatrix kl2 =
                k.k_l * k.k_l - ExactMatrix::identity(4).scaled(CRational(k.pn * k.pn));
            CHECK(kl2.is_zero());
            const ExactMatrix kt2 =
                k.k_t * k.k_t - ExactMatrix::identity(4).scaled(CRational(k.pp + k.pn * k.pn));
            CHECK(kt2.is_zero());
        }
    }
    SUBCASE("p parallel to n kills K_T^2") {
        const double m = 1.7;
        const auto n = random_orbit_point(8, 1.1);
        const FourVector p = n.vector() * m;
        const auto k = k_operators(p, n);
        CHECK((k.k_t * k.k_t).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((k.k_l * k.k_l - m * m * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("free hamiltonian is p^2/2M") {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 20; ++trial) {
            const FourVector p(2 * uniform01(rng()) - 1, 2 * uniform01(rng()) - 1,
                               2 * uniform01(rng()) - 1, 2 * uniform01(rng()) - 1);
            const auto n = random_orbit_point(trial, 1.3);
            const double mass = 0.5 + uniform01(rng());
            const Eigen::Matrix4cd h = free_hamiltonian(p, n, mass);
            const double expect = minkowski_dot(p, p) / (2.0 * mass);
            CHECK((h - expect * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("the two printed forms of K_T agree") {
        const auto n = random_orbit_point(12, 1.0);
        const FourVector p(0.9, 0.3, -0.5, 0.2);
        const auto& g = GammaSet::instance();
        const Eigen::Matrix4cd gn = gamma_dot(n.vector());
        const Eigen::Matrix4cd gp = gamma_dot(p);
        const Eigen::Matrix4cd kt_split = 0.5 * g.gamma5() * (gp - gn * gp * gn);
        CHECK((k_operators(p, n).k_t - kt_split).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("projected algebra") {
    SUBCASE("rest point: Sigma_n0^{ij} = (1/2) eps^{ijk} sigma_k blocks, Sigma_n0^{0i} = 0") {
        const auto alg = projected_algebra(OrbitPoint::rest());
        const auto& s = sl2c::pauli();
        static const int eps_cyclic[3][3] = {{0, 3, 2}, {3, 0, 1}, {2, 1, 0}};  // k index + 1
        for (int i = 1; i < 4; ++i) {
            CHECK(alg.sigma_n[0][i].cwiseAbs().maxCoeff() == 0.0);
            for (int j = 1; j < 4; ++j) {
                Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
                if (i != j) {
                    const int k = eps_cyclic[i - 1][j - 1] - 1;
                    const double sign = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
                    expect.block<2, 2>(0, 0) = 0.5 * sign * s[k];
                    expect.block<2, 2>(2, 2) = 0.5 * sign * s[k];
                }
                CHECK((alg.sigma_n[i][j] - expect).cwiseAbs().maxCoeff() == 0.0);
            }
        }
        // gamma_n^0 vanishes because h^{00}(n0) = 0
        CHECK(alg.gamma_n[0].cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("full commutator table closes at random n") {
        double worst = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto alg = projected_algebra(random_orbit_point(seed, 1.2));
            worst = std::max(worst, projected_algebra_residual(alg));
        }
        CHECK(worst <= 1e-12);
    }
    SUBCASE("exactly 3 independent K and Sigma_n components") {
        const auto alg = projected_algebra(random_orbit_point(5, 1.0));
        Eigen::MatrixXcd kflat(16, 4);
        for (int m = 0; m < 4; ++m)
            kflat.col(m) = Eigen::Map<const Eigen::VectorXcd>(alg.k[m].data(), 16);
        Eigen::MatrixXcd sflat(16, 6);
        int col = 0;
        for (int m = 0; m < 4; ++m)
            for (int v = m + 1; v < 4; ++v)
                sflat.col(col++) = Eigen::Map<const Eigen::VectorXcd>(alg.sigma_n[m][v].data(), 16);
        CHECK(kflat.fullPivLu().rank() == 3);
        CHECK(sflat.fullPivLu().rank() == 3);
    }
    SUBCASE("Sigma_n is Hermitian with respect to the invariant form") {
        // G O = O^dag G with G = gamma_0 (gamma.n) in the chiral frame
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto n = random_orbit_point(seed + 60, 1.0);
            const auto alg = projected_algebra(n);
            const auto& g = GammaSet::instance();
            const Eigen::Matrix4cd metric = g.gamma(0) * gamma_dot(n.vector());
            for (int m = 0; m < 4; ++m)
                for (int v = 0; v < 4; ++v) {
                    const Eigen::Matrix4cd lhs = metric * alg.sigma_n[m][v];
                    const Eigen::Matrix4cd rhs = alg.sigma_n[m][v].adjoint() * metric;
                    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
                }
        }
    }
}

TEST_CASE("electromagnetic hamiltonian") {
    const auto n0 = OrbitPoint::rest();
    SUBCASE("zero field gives the free hamiltonian") {
        const FourVector p(1.2, 0.1, -0.4, 0.7);
        const auto h = em_hamiltonian(p, n0, Eigen::Matrix4d::Zero(), 0.05, 2.0);
        CHECK((h - (minkowski_dot(p, p) / 4.0) * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
              1e-14);
    }
    SUBCASE("pure electric field decouples at the rest point") {
        Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
        f(0, 1) = 0.3;
        f(0, 2) = -0.8;
        f(0, 3) = 0.5;
        f -= Eigen::Matrix4d(f.transpose()).eval();
        CHECK(spin_coupling(n0, f).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("uniform magnetic field couples through sigma3 blocks with moment 2") {
        const double B = 0.9;
        Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
        f(1, 2) = B;
        f(2, 1) = -B;
        const Eigen::Matrix4cd coupling = spin_coupling(n0, f);
        // Sigma_n0^{12} f_{12} + Sigma_n0^{21} f_{21} = 2 B (1/2 sigma3 blocks) = B sigma3 blocks:
        // with the spin operator S3 = sigma3/2 this is 2 B S3, the moment-2 normalization
        Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
        expect.block<2, 2>(0, 0) = B * sl2c::pauli()[2];
        expect.block<2, 2>(2, 2) = B * sl2c::pauli()[2];
        CHECK((coupling - expect).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("non-antisymmetric field tensors are rejected") {
        Eigen::Matrix4d f = Eigen::Matrix4d::Identity();
        CHECK_THROWS_AS(em_hamiltonian(FourVector(1, 0, 0, 0), n0, f, 0.1), std::invalid_argument);
    }
}

TEST_CASE("projectors") {
    SUBCASE("rest point forms") {
        const auto& g = GammaSet::instance();
        const FourVector p(0.9, 0.3, -0.5, 0.2);
        const auto pr = projectors(p, OrbitPoint::rest());
        // P_+- = (1 -+ gamma^0)/2 with gamma.n|n0 = gamma_0
        CHECK((pr.parity_plus - 0.5 * (Eigen::Matrix4cd::Identity() - g.gamma(0))).cwiseAbs().maxCoeff() ==
              0.0);
        // helicity pair reduces to (1 -+ sigma.p/|p|)/2 in diagonal blocks
        const Eigen::Vector3d pv = p.components().tail<3>();
        Eigen::Matrix2cd sp = Eigen::Matrix2cd::Zero();
        for (int k = 0; k < 3; ++k) sp += pv(k) * sl2c::pauli()[k];
        sp /= pv.norm();
        Eigen::Matrix4cd hel = Eigen::Matrix4cd::Zero();
        hel.block<2, 2>(0, 0) = sp;
        hel.block<2, 2>(2, 2) = sp;
        CHECK((pr.helicity_plus - 0.5 * (Eigen::Matrix4cd::Identity() - hel)).cwiseAbs().maxCoeff() <
              1e-13);
        // energy pair: p.n = -E < 0 at n0 for E > 0, so sgn = -1
        CHECK((pr.energy_plus - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(pr.energy_minus.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("idempotence, orthogonality, completeness at random inputs") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 40; ++trial) {
            const auto n = random_orbit_point(trial + 100, 1.1);
            const FourVector p(2 + uniform01(rng()), 2 * uniform01(rng()) - 1, 2 * uniform01(rng()) - 1,
                               2 * uniform01(rng()) - 1);
            const auto pr = projectors(p, n);
            auto check_pair = [&](const Eigen::Matrix4cd& plus, const Eigen::Matrix4cd& minus) {
                CHECK((plus * plus - plus).cwiseAbs().maxCoeff() < 1e-12);
                CHECK((minus * minus - minus).cwiseAbs().maxCoeff() < 1e-12);
                CHECK((plus * minus).cwiseAbs().maxCoeff() < 1e-12);
                CHECK((plus + minus - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
            };
            check_pair(pr.parity_plus, pr.parity_minus);
            check_pair(pr.energy_plus, pr.energy_minus);
            check_pair(pr.helicity_plus, pr.helicity_minus);
        }
    }
    SUBCASE("degenerate denominators are rejected") {
        // p orthogonal to n: p.n = 0
        CHECK_THROWS_AS(projectors(FourVector(0, 1, 0, 0), OrbitPoint::rest()), std::domain_error);
        // p parallel to n: p^2 + (p.n)^2 = 0
        CHECK_THROWS_AS(projectors(FourVector(2, 0, 0, 0), OrbitPoint::rest()), std::domain_error);
    }
}

TEST_CASE("spinor assembly and the invariant form") {
    const Eigen::Vector2cd phi(cd(0.4, -0.2), cd(0.7, 0.1));
    const Eigen::Vector2cd chi(cd(-0.3, 0.6), cd(0.2, 0.5));

    SUBCASE("rest point with phi = chi stacks into the upper block") {
        const auto psi = assemble_spinor(phi, phi, OrbitPoint::rest());
        CHECK((psi.components.head<2>() - std::sqrt(2.0) * phi).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(psi.components.tail<2>().cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("form equals |phi|^2 + |chi|^2 at any n") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto n = random_orbit_point(seed, 1.4);
            const auto psi = assemble_spinor(phi, chi, n);
            const cd norm = indefinite_form(psi, psi);
            CHECK(std::abs(norm - cd(phi.squaredNorm() + chi.squaredNorm(), 0)) < 1e-12);
        }
    }
    SUBCASE("sesquilinearity") {
        const auto n = random_orbit_point(3, 1.0);
        const auto psi1 = assemble_spinor(phi, chi, n);
        const auto psi2 = assemble_spinor(chi, phi, n);
        const cd a(0.6, -1.1);
        DiracSpinorSample scaled{a * psi1.components, n};
        CHECK(std::abs(indefinite_form(scaled, psi2) - std::conj(a) * indefinite_form(psi1, psi2)) <
              1e-13);
        CHECK_THROWS_AS(indefinite_form(psi1, DiracSpinorSample{psi2.components, random_orbit_point(9, 1.0)}),
                        std::invalid_argument);
    }
    SUBCASE("covariance: psi -> S(Lambda) psi with n -> Lambda n preserves the form") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto n = random_orbit_point(seed + 7, 1.0);
            const auto lam = random_lorentz(seed, 1.2);
            const auto psi1 = assemble_spinor(phi, chi, n);
            const auto psi2 = assemble_spinor(chi, phi, n);
            const Eigen::Matrix4cd s = spinor_transformation(lam);
            const auto ln = little_group::orbit_act(lam, n);
            const DiracSpinorSample t1{s * psi1.components, ln};
            const DiracSpinorSample t2{s * psi2.components, ln};
            CHECK(std::abs(indefinite_form(t1, t2) - indefinite_form(psi1, psi2)) < 1e-12);
        }
    }
}

namespace {

DiracField plane_wave_field(const Eigen::Vector4cd& u, const FourVector& k, double omega_tau) {
    return [=](const FourVector& x, const OrbitPoint& n, double tau) -> Eigen::Vector4cd {
        const cd phase = std::exp(I * (minkowski_dot(k, x) - omega_tau * tau));
        return (u + 0.05 * n[1] * Eigen::Vector4cd::Ones()) * phase;
    };
}

}  // namespace

TEST_CASE("discrete symmetries") {
    const Eigen::Vector4cd u(cd(0.1, 0.7), cd(-0.4, 0.2), cd(0.9, -0.3), cd(0.5, 0.6));
    const FourVector k(1.1, 0.4, -0.2, 0.8);
    const DiracField psi = plane_wave_field(u, k, 0.6);
    const FourVector x(0.3, -0.9, 0.5, 1.2);
    const auto n = random_orbit_point(20, 0.8);
    const double tau = 0.37;

    SUBCASE("charge conjugation applied twice is the identity up to a phase") {
        const DiracField once = discrete_symmetry(DiscreteKind::C, psi);
        const DiracField twice = discrete_symmetry(DiscreteKind::C, once);
        const Eigen::Vector4cd a = twice(x, n, tau);
        const Eigen::Vector4cd b = psi(x, n, tau);
        // ratio must be a constant unit phase
        const cd ratio = a(0) / b(0);
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
        CHECK((a - ratio * b).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("CPT reflects space-time and the orbit label but keeps tau") {
        const auto probe = [](const FourVector& xx, const OrbitPoint& nn, double tt) -> Eigen::Vector4cd {
            return Eigen::Vector4cd(cd(xx[0], xx[1]), cd(xx[2], xx[3]), cd(nn[0], nn[1]), cd(tt, 0));
        };
        const DiracField out = discrete_symmetry(DiscreteKind::CPT, probe);
        // the evaluated arguments must be (-t, -x, -n, +tau)
        const auto& g5s = out(x, n, tau);
        Eigen::Vector4cd expected_args(cd(-x[0], -x[1]), cd(-x[2], -x[3]), cd(-n[0], -n[1]), cd(tau, 0));
        // strip the matrix factor: factor = i gamma5 in the sample basis
        const auto& g = GammaSet::instance();
        Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
        const double r = 1.0 / std::sqrt(2.0);
        t.block<2, 2>(0, 0) = r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(0, 2) = r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(2, 0) = -r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(2, 2) = r * Eigen::Matrix2cd::Identity();
        const Eigen::Matrix4cd factor = I * t * g.gamma5() * t.transpose();
        const Eigen::Vector4cd stripped = factor.inverse() * g5s;
        CHECK((stripped - expected_args.conjugate()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("parity flips the spatial momentum of a plane wave") {
        const DiracField out = discrete_symmetry(DiscreteKind::P, psi);
        // compare against the wave with reflected momentum, same frequency
        const FourVector k_flip(k[0], -k[1], -k[2], -k[3]);
        const auto n_flip = OrbitPoint::from_vector(FourVector(n[0], -n[1], -n[2], -n[3]));
        const DiracField expect = plane_wave_field(u, k_flip, 0.6);
        const Eigen::Vector4cd lhs = out(x, n, tau);
        // strip gamma0 factor and the orbit-label dependence of the amplitude
        const Eigen::Vector4cd rhs_raw = expect(x, n_flip, tau);
        const auto& g = GammaSet::instance();
        Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
        const double r = 1.0 / std::sqrt(2.0);
        t.block<2, 2>(0, 0) = r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(0, 2) = r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(2, 0) = -r * Eigen::Matrix2cd::Identity();
        t.block<2, 2>(2, 2) = r * Eigen::Matrix2cd::Identity();
        const Eigen::Matrix4cd g0 = t * g.gamma(0) * t.transpose();
        CHECK((lhs - g0 * rhs_raw).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("unknown kinds are rejected") {
        CHECK_THROWS_AS(discrete_symmetry(static_cast<DiscreteKind>(99), psi), std::invalid_argument);
    }
}

TEST_CASE("matrix family JSON dump is stable and well formed") {
    const std::string a = matrix_families_json(OrbitPoint::rest());
    const std::string b = matrix_families_json(OrbitPoint::rest());
    CHECK(a == b);
    CHECK(a.find("\"gamma\"") != std::string::npos);
    CHECK(a.find("\"sigma_n\"") != std::string::npos);
}
