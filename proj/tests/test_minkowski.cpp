#include "doctest.h"
#include "orbitrep/minkowski.hpp"

#include <cmath>

using namespace orbitrep;

TEST_CASE("minkowski dot follows the (-,+,+,+) signature") {
    CHECK(minkowski_dot(FourVector(1, 0, 0, 0), FourVector(1, 0, 0, 0)) == -1.0);
    CHECK(minkowski_dot(FourVector(0, 1, 0, 0), FourVector(0, 1, 0, 0)) == 1.0);
    CHECK(minkowski_dot(FourVector(2, 1, 0, 0), FourVector(1, 2, 0, 0)) == 0.0);
}

TEST_CASE("four-vector constructors reject non-finite components") {
    CHECK_THROWS_AS(FourVector(std::nan(""), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(FourVector(0, INFINITY, 0, 0), std::invalid_argument);
}

TEST_CASE("boost matrix takes the rest point to n") {
    SUBCASE("identity at the rest point") {
        const auto L = boost_matrix(OrbitPoint::rest());
        CHECK((L.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("x-boost with rapidity") {
        const double xi = 0.83;
        const auto n = OrbitPoint::from_vector(FourVector(std::cosh(xi), std::sinh(xi), 0, 0));
        const auto L = boost_matrix(n);
        const FourVector image = L * FourVector(1, 0, 0, 0);
        CHECK((image - n.vector()).components().cwiseAbs().maxCoeff() < 1e-15);
        CHECK(doctest::Approx(L(0, 1)).epsilon(1e-14) == std::sinh(xi));
    }
    SUBCASE("random n: group membership, symmetry, L n0 = n") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto n = random_orbit_point(seed, 1.5);
            const auto L = boost_matrix(n);
            const auto& eta = minkowski_metric();
            CHECK((L.matrix().transpose() * eta * L.matrix() - eta).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((L.matrix() - L.matrix().transpose()).cwiseAbs().maxCoeff() < 1e-13);
            CHECK((L * FourVector(1, 0, 0, 0) - n.vector()).components().cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("rejects spacelike and non-unit input") {
        CHECK_THROWS_AS(OrbitPoint::from_vector(FourVector(0.3, 1, 0, 0)), std::invalid_argument);
        CHECK_THROWS_AS(OrbitPoint::from_vector(FourVector(2, 0, 0, 0)), std::invalid_argument);
    }
}

TEST_CASE("random_lorentz produces proper orthochronous matrices") {
    SUBCASE("zero scale gives the identity") {
        const auto L = random_lorentz(7, 0.0);
        CHECK((L.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("metric preservation and closure") {
        const auto& eta = minkowski_metric();
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto a = random_lorentz(seed, 1.0);
            const auto b = random_lorentz(seed + 1000, 0.7);
            CHECK((a.matrix().transpose() * eta * a.matrix() - eta).cwiseAbs().maxCoeff() < 1e-12);
            const auto c = a * b;  // closure: still a valid group element
            CHECK_NOTHROW(LorentzMatrix::from_matrix(c.matrix()));
        }
    }
    SUBCASE("deterministic per seed") {
        CHECK((random_lorentz(42, 1.0).matrix() - random_lorentz(42, 1.0).matrix()).cwiseAbs().maxCoeff() ==
              0.0);
    }
}

TEST_CASE("projector h") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto n = random_orbit_point(seed, 2.0);
        const ProjectorH h(n);
        const auto& eta = minkowski_metric();
        // annihilates its defining n (index lowered)
        CHECK((h.matrix() * lower_index(n.vector())).cwiseAbs().maxCoeff() < 1e-14);
        // h eta h = h
        CHECK((h.matrix() * eta * h.matrix() - h.matrix()).cwiseAbs().maxCoeff() < 1e-12);
        // eigenvalues {0, 1, 1, 1} of the mixed-index form h^mu_nu
        const Eigen::Matrix4d mixed = h.matrix() * eta;
        Eigen::EigenSolver<Eigen::Matrix4d> es(mixed);
        Eigen::Vector4d evm = es.eigenvalues().real();
        std::sort(evm.data(), evm.data() + 4);
        CHECK(std::abs(evm(0)) < 1e-10);
        for (int i = 1; i < 4; ++i) CHECK(std::abs(evm(i) - 1.0) < 1e-10);
        CHECK(es.eigenvalues().imag().cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("levi-civita symbol") {
    CHECK(LeviCivita::lower(0, 1, 2, 3) == 1);
    CHECK(LeviCivita::lower(1, 0, 2, 3) == -1);
    CHECK(LeviCivita::lower(0, 0, 2, 3) == 0);
    CHECK(LeviCivita::upper(0, 1, 2, 3) == -1);

    SUBCASE("antisymmetry under any transposition") {
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) {
                        CHECK(LeviCivita::lower(m, n, k, l) == -LeviCivita::lower(n, m, k, l));
                        CHECK(LeviCivita::lower(m, n, k, l) == -LeviCivita::lower(m, n, l, k));
                        CHECK(LeviCivita::lower(m, n, k, l) == -LeviCivita::lower(m, k, n, l));
                    }
    }
    SUBCASE("full contraction equals -24") {
        int total = 0;
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l)
                        total += LeviCivita::lower(m, n, k, l) * LeviCivita::upper(m, n, k, l);
        CHECK(total == -24);
    }
}

TEST_CASE("lorentz matrix validation") {
    Eigen::Matrix4d bad = Eigen::Matrix4d::Identity();
    bad(1, 1) = 2.0;
    CHECK_THROWS_AS(LorentzMatrix::from_matrix(bad), std::invalid_argument);
    Eigen::Matrix4d timeflip = -Eigen::Matrix4d::Identity();  // det +1 but antichronous
    CHECK_THROWS_AS(LorentzMatrix::from_matrix(timeflip), std::invalid_argument);
}
