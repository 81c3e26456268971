#include "doctest.h"
#include "orbitrep/little_group.hpp"

#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

using namespace orbitrep;
using namespace orbitrep::little_group;
using cd = std::complex<double>;

namespace {
const cd I(0, 1);
}

TEST_CASE("orbit action") {
    const auto n = random_orbit_point(3, 1.0);
    SUBCASE("identity fixes n") {
        const auto out = orbit_act(LorentzMatrix::identity(), n);
        CHECK((out.vector() - n.vector()).components().cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("boost of rest point lands on the boost vector") {
        const auto m = random_orbit_point(11, 1.3);
        const auto out = orbit_act(boost_matrix(m), OrbitPoint::rest());
        CHECK((out.vector() - m.vector()).components().cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("norm and cone preserved on random pairs") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto lam = random_lorentz(seed, 1.5);
            const auto p = random_orbit_point(seed + 7, 1.5);
            const auto out = orbit_act(lam, p);
            CHECK(std::abs(minkowski_dot(out.vector(), out.vector()) + 1.0) < 1e-12);
            CHECK(out.cone_sign() == p.cone_sign());
        }
    }
}

TEST_CASE("wigner rotation basics") {
    SUBCASE("identity transformation gives the identity rotation") {
        const auto d = wigner_rotation(LorentzMatrix::identity(), random_orbit_point(2, 1.0));
        CHECK((d.matrix() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("pure rotation at the rest point is its own spinor representative") {
        Eigen::Vector3d ax(0.1, 0.5, -0.8);
        ax.normalize();
        const double th = 0.9;
        const auto R = rotation_matrix(ax, th);
        const auto d = wigner_rotation(R, OrbitPoint::rest());
        // The chain collapses to the canonical SU(2) lift of R.
        const auto lift = sl2c::lift_rotation(R);
        CHECK((d.matrix() - lift.matrix()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(doctest::Approx(d.rotation_angle()).epsilon(1e-10) == th);
        // and covers R itself
        CHECK((sl2c::covering_map(sl2c::Sl2cElement::from_matrix(d.matrix())).matrix() - R.matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
    SUBCASE("boost along n at the rest point collapses to the identity") {
        const auto n = random_orbit_point(9, 1.2);
        const auto d = wigner_rotation(boost_matrix(n), OrbitPoint::rest());
        const double offset =
            std::min((d.matrix() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(),
                     (d.matrix() + Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
        CHECK(offset < 1e-12);
    }
}

TEST_CASE("wigner rotations are unitary with unit determinant") {
    double worst_unitarity = 0, worst_det = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto lam = random_lorentz(seed, 1.2);
        const auto n = random_orbit_point(seed ^ 0xabcdef, 1.2);
        const auto d = wigner_rotation(lam, n);
        worst_unitarity = std::max(worst_unitarity, d.unitarity_residual());
        worst_det = std::max(worst_det, std::abs(d.matrix().determinant() - 1.0));
    }
    CHECK(worst_unitarity <= 1e-12);
    CHECK(worst_det <= 1e-12);
}

TEST_CASE("cocycle identity at the SO(3) level") {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto l1 = random_lorentz(seed, 1.0);
        const auto l2 = random_lorentz(seed + 10000, 1.0);
        const auto n = random_orbit_point(seed + 3, 1.0);
        const auto lhs = wigner_rotation(l2 * l1, n).so3_image();
        const auto rhs = wigner_rotation(l2, orbit_act(l1, n)).so3_image() *
                         wigner_rotation(l1, n).so3_image();
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        // spinor level: equality up to the lift sign
        const auto dl = wigner_rotation(l2 * l1, n).matrix();
        const auto dr = wigner_rotation(l2, orbit_act(l1, n)).matrix() * wigner_rotation(l1, n).matrix();
        const double sgn = std::min((dl - dr).cwiseAbs().maxCoeff(), (dl + dr).cwiseAbs().maxCoeff());
        CHECK(sgn < 1e-10);
    }
    CHECK(worst <= 1e-10);
}

namespace {

SpinorField plane_wave_sample(const Eigen::Vector2cd& u, const FourVector& k) {
    return [u, k](const OrbitPoint& n, const FourVector& x) -> Eigen::Vector2cd {
        // mild n dependence keeps the sample sensitive to the orbit label
        const double phase = minkowski_dot(k, x);
        return (u + Eigen::Vector2cd(cd(0.1, 0) * n[1], cd(0, 0.2) * n[2])) * std::exp(I * phase);
    };
}

}  // namespace

TEST_CASE("induced transform") {
    const Eigen::Vector2cd u(cd(0.3, 0.1), cd(-0.7, 0.4));
    const FourVector k(1.0, 0.2, -0.3, 0.5);
    const SpinorField psi = plane_wave_sample(u, k);

    SUBCASE("identity leaves the sample unchanged") {
        const auto n = random_orbit_point(4, 1.0);
        const FourVector x(0.3, -1.0, 0.25, 2.0);
        const auto out = induced_transform(psi, LorentzMatrix::identity(), n, x);
        CHECK((out - psi(n, x)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("composition matches the product transformation up to lift sign") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto l1 = random_lorentz(seed, 0.8);
            const auto l2 = random_lorentz(seed + 99, 0.8);
            const auto n = random_orbit_point(seed + 5, 1.0);
            const FourVector x(0.2, 0.4, -0.6, 1.1);
            const auto once = induced_transform(psi, l2 * l1, n, x);
            const SpinorField step1 = induced_transform_field(psi, l1);
            const auto twice = induced_transform(step1, l2, n, x);
            const double residual =
                std::min((once - twice).cwiseAbs().maxCoeff(), (once + twice).cwiseAbs().maxCoeff());
            CHECK(residual < 1e-10);
        }
    }
    SUBCASE("norm density is invariant at corresponding points") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto lam = random_lorentz(seed, 1.0);
            const auto n = random_orbit_point(seed + 21, 1.0);
            const FourVector x(0.9, -0.1, 0.7, -0.4);
            const auto out = induced_transform(psi, lam, n, x);
            const auto inv = lam.inverse();
            const auto src = psi(orbit_act(inv, n), inv * x);
            CHECK(doctest::Approx(out.squaredNorm()).epsilon(1e-11) == src.squaredNorm());
        }
    }
}
