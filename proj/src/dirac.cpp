#include "orbitrep/dirac.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "orbitrep/sl2c.hpp"

namespace orbitrep::dirac {

namespace {
const std::complex<double> kI(0, 1);

ExactMatrix to_exact(const Eigen::Matrix4cd& m) {
    ExactMatrix e(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // gamma entries are 0, +-1, +-i
            e(i, j) = CRational(Rational(std::lround(m(i, j).real())),
                                Rational(std::lround(m(i, j).imag())));
        }
    return e;
}

}  // namespace

GammaSet::GammaSet() {
    const auto& s = sl2c::pauli();
    auto blk = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, const Eigen::Matrix2cd& c,
                  const Eigen::Matrix2cd& d) {
        Eigen::Matrix4cd m;
        m.block<2, 2>(0, 0) = a;
        m.block<2, 2>(0, 2) = b;
        m.block<2, 2>(2, 0) = c;
        m.block<2, 2>(2, 2) = d;
        return m;
    };
    const Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero(), id = Eigen::Matrix2cd::Identity();
    g_[0] = blk(z, id, id, z);
    for (int k = 0; k < 3; ++k) g_[k + 1] = blk(z, s[k], -s[k], z);
    gu_[0] = -g_[0];
    for (int k = 1; k < 4; ++k) gu_[k] = g_[k];
    g5_ = kI * g_[0] * g_[1] * g_[2] * g_[3];
    for (int mu = 0; mu < 4; ++mu) {
        ge_[mu] = to_exact(g_[mu]);
        gue_[mu] = to_exact(gu_[mu]);
    }
    g5e_ = to_exact(g5_);
}

const GammaSet& GammaSet::instance() {
    static const GammaSet set;
    return set;
}

Eigen::Matrix4cd gamma_dot(const FourVector& v) {
    const auto& g = GammaSet::instance();
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int mu = 0; mu < 4; ++mu) out += g.gamma(mu) * v[mu];
    return out;
}

Eigen::Matrix4cd sigma_upper(int mu, int nu) {
    const auto& g = GammaSet::instance();
    return (kI / 4.0) * (g.gamma_upper(mu) * g.gamma_upper(nu) - g.gamma_upper(nu) * g.gamma_upper(mu));
}

std::array<Eigen::Matrix4cd, 4> k_vector(const OrbitPoint& n) {
    const Eigen::Vector4d nl = lower_index(n.vector());
    std::array<Eigen::Matrix4cd, 4> k;
    for (int mu = 0; mu < 4; ++mu) {
        k[mu] = Eigen::Matrix4cd::Zero();
        for (int nu = 0; nu < 4; ++nu) k[mu] += sigma_upper(mu, nu) * nl(nu);
    }
    return k;
}

KOperators k_operators(const FourVector& p, const OrbitPoint& n) {
    const auto& g = GammaSet::instance();
    const double pn = minkowski_dot(p, n.vector());
    const Eigen::Matrix4cd gn = gamma_dot(n.vector());
    const auto k = k_vector(n);
    const Eigen::Vector4d pl = lower_index(p);
    Eigen::Matrix4cd pk = Eigen::Matrix4cd::Zero();
    for (int mu = 0; mu < 4; ++mu) pk += pl(mu) * k[mu];
    KOperators out;
    out.k_l = -pn * gn;
    out.k_t = -2.0 * kI * g.gamma5() * pk * gn;
    return out;
}

ExactKOperators k_operators_exact(const std::array<Rational, 4>& p, const std::array<Rational, 4>& n) {
    const Rational nn = -n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3];
    if (nn != -1) throw std::invalid_argument("k_operators_exact: n.n != -1");
    const auto& g = GammaSet::instance();

    const std::array<Rational, 4> nl = {-n[0], n[1], n[2], n[3]};
    const std::array<Rational, 4> pl = {-p[0], p[1], p[2], p[3]};

    ExactMatrix gn(4, 4);
    for (int mu = 0; mu < 4; ++mu) gn = gn + g.gamma_exact(mu).scaled(CRational(n[mu]));

    // Sigma^{mu nu} = (i/4)[g^mu, g^nu]; K^mu = Sigma^{mu nu} n_nu; p.K = p_mu K^mu
    ExactMatrix pk(4, 4);
    const CRational quarter_i(Rational(0), Rational(1, 4));
    for (int mu = 0; mu < 4; ++mu) {
        ExactMatrix kmu(4, 4);
        for (int nu = 0; nu < 4; ++nu) {
            const ExactMatrix comm = g.gamma_upper_exact(mu) * g.gamma_upper_exact(nu) -
                                     g.gamma_upper_exact(nu) * g.gamma_upper_exact(mu);
            kmu = kmu + comm.scaled(quarter_i * CRational(nl[nu]));
        }
        pk = pk + kmu.scaled(CRational(pl[mu]));
    }

    ExactKOperators out;
    out.pn = -p[0] * n[0] + p[1] * n[1] + p[2] * n[2] + p[3] * n[3];
    out.pp = -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    out.k_l = gn.scaled(CRational(-out.pn));
    const CRational minus_two_i(Rational(0), Rational(-2));
    out.k_t = (g.gamma5_exact() * pk * gn).scaled(minus_two_i);
    return out;
}

Eigen::Matrix4cd free_hamiltonian(const FourVector& p, const OrbitPoint& n, double mass) {
    const auto k = k_operators(p, n);
    return (k.k_t * k.k_t - k.k_l * k.k_l) / (2.0 * mass);
}

ProjectedAlgebra projected_algebra(const OrbitPoint& n) {
    ProjectedAlgebra alg;
    alg.n = n;
    alg.h = ProjectorH(n).matrix();
    const auto& g = GammaSet::instance();
    for (int mu = 0; mu < 4; ++mu) {
        alg.gamma_n[mu] = Eigen::Matrix4cd::Zero();
        for (int la = 0; la < 4; ++la) alg.gamma_n[mu] += g.gamma(la) * alg.h(la, mu);
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            alg.sigma_n[mu][nu] =
                (kI / 4.0) * (alg.gamma_n[mu] * alg.gamma_n[nu] - alg.gamma_n[nu] * alg.gamma_n[mu]);
    alg.k = k_vector(n);
    return alg;
}

double projected_algebra_residual(const ProjectedAlgebra& alg) {
    double worst = 0;
    auto bump = [&](const Eigen::Matrix4cd& m) { worst = std::max(worst, m.cwiseAbs().maxCoeff()); };
    auto comm = [](const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
        return Eigen::Matrix4cd(a * b - b * a);
    };
    const Eigen::Vector4d nl = lower_index(alg.n.vector());
    const Eigen::Vector4d nup = alg.n.vector().components();

    // the two constructions of Sigma_n agree
    for (int m = 0; m < 4; ++m)
        for (int v = 0; v < 4; ++v) {
            const Eigen::Matrix4cd alt = sigma_upper(m, v) + alg.k[m] * nup(v) - nup(m) * alg.k[v];
            bump(alg.sigma_n[m][v] - alt);
        }

    // K.n = 0 and Sigma_n n = 0
    Eigen::Matrix4cd kn = Eigen::Matrix4cd::Zero();
    for (int m = 0; m < 4; ++m) kn += alg.k[m] * nl(m);
    bump(kn);
    for (int m = 0; m < 4; ++m) {
        Eigen::Matrix4cd sn = Eigen::Matrix4cd::Zero();
        for (int v = 0; v < 4; ++v) sn += alg.sigma_n[m][v] * nl(v);
        bump(sn);
    }

    // the commutator table
    for (int m = 0; m < 4; ++m)
        for (int v = 0; v < 4; ++v) {
            bump(comm(alg.k[m], alg.k[v]) + kI * alg.sigma_n[m][v]);
            for (int l = 0; l < 4; ++l) {
                bump(comm(alg.sigma_n[m][v], alg.k[l]) +
                     kI * (alg.h(v, l) * alg.k[m] - alg.h(m, l) * alg.k[v]));
                for (int r = 0; r < 4; ++r)
                    bump(comm(alg.sigma_n[m][v], alg.sigma_n[l][r]) +
                         kI * (alg.h(v, l) * alg.sigma_n[m][r] + alg.h(m, r) * alg.sigma_n[v][l] -
                               alg.h(m, l) * alg.sigma_n[v][r] - alg.h(v, r) * alg.sigma_n[m][l]));
            }
        }
    return worst;
}

Eigen::Matrix4cd spin_coupling(const OrbitPoint& n, const Eigen::Matrix4d& f_lower) {
    if ((f_lower + f_lower.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("spin_coupling: field tensor must be antisymmetric");
    const auto alg = projected_algebra(n);
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int m = 0; m < 4; ++m)
        for (int v = 0; v < 4; ++v) out += alg.sigma_n[m][v] * f_lower(m, v);
    return out;
}

Eigen::Matrix4cd em_hamiltonian(const FourVector& p, const OrbitPoint& n,
                                const Eigen::Matrix4d& f_lower, double e_over_2mc, double mass) {
    const double p2 = minkowski_dot(p, p);
    return (p2 / (2.0 * mass)) * Eigen::Matrix4cd::Identity() + e_over_2mc * spin_coupling(n, f_lower);
}

Projectors projectors(const FourVector& p, const OrbitPoint& n) {
    const auto& g = GammaSet::instance();
    const Eigen::Matrix4cd one = Eigen::Matrix4cd::Identity();
    const double pn = minkowski_dot(p, n.vector());
    const double radical = minkowski_dot(p, p) + pn * pn;
    if (pn == 0.0) throw std::domain_error("projectors: p.n = 0 degenerates the energy pair");
    if (radical <= 0.0)
        throw std::domain_error("projectors: p^2 + (p.n)^2 <= 0 degenerates the helicity pair");

    Projectors out;
    const Eigen::Matrix4cd gn = gamma_dot(n.vector());
    out.parity_plus = 0.5 * (one - gn);
    out.parity_minus = 0.5 * (one + gn);
    const double sgn = pn / std::abs(pn);
    out.energy_plus = 0.5 * (1.0 - sgn) * one;
    out.energy_minus = 0.5 * (1.0 + sgn) * one;
    const auto k = k_vector(n);
    const Eigen::Vector4d pl = lower_index(p);
    Eigen::Matrix4cd pk = Eigen::Matrix4cd::Zero();
    for (int mu = 0; mu < 4; ++mu) pk += pl(mu) * k[mu];
    const Eigen::Matrix4cd hel = 2.0 * kI * g.gamma5() * pk / std::sqrt(radical);
    out.helicity_plus = 0.5 * (one - hel);
    out.helicity_minus = 0.5 * (one + hel);
    return out;
}

namespace {

// First-kind boost in the gamma sector's (standard) Pauli convention.
Eigen::Matrix2cd std_boost(const OrbitPoint& n) {
    if (n.cone_sign() < 0)
        throw std::invalid_argument("assemble_spinor: n must be on the positive cone");
    const auto& s = sl2c::pauli();
    Eigen::Matrix2cd b = (1.0 + n[0]) * Eigen::Matrix2cd::Identity();
    for (int k = 0; k < 3; ++k) b += n[k + 1] * s[k];
    return b / std::sqrt(2.0 * (1.0 + n[0]));
}

// Fixed block mixing (1/sqrt2) [[1, 1], [-1, 1]] (x) 1.
const Eigen::Matrix4cd& mixing() {
    static const Eigen::Matrix4cd t = [] {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        const double r = 1.0 / std::sqrt(2.0);
        m.block<2, 2>(0, 0) = r * Eigen::Matrix2cd::Identity();
        m.block<2, 2>(0, 2) = r * Eigen::Matrix2cd::Identity();
        m.block<2, 2>(2, 0) = -r * Eigen::Matrix2cd::Identity();
        m.block<2, 2>(2, 2) = r * Eigen::Matrix2cd::Identity();
        return m;
    }();
    return t;
}

// Standard-convention SL(2,C) lift (polar factorization).
Eigen::Matrix2cd std_lift(const LorentzMatrix& lambda) {
    const OrbitPoint m = OrbitPoint::from_vector(lambda * FourVector(1, 0, 0, 0));
    const LorentzMatrix rot = boost_matrix(m).inverse() * lambda;
    Eigen::Quaterniond q(Eigen::Matrix3d(rot.matrix().block<3, 3>(1, 1)));
    if (q.w() < 0.0) q.coeffs() = -q.coeffs();
    const auto& s = sl2c::pauli();
    const Eigen::Matrix2cd u =
        q.w() * Eigen::Matrix2cd::Identity() - kI * (q.x() * s[0] + q.y() * s[1] + q.z() * s[2]);
    return std_boost(m) * u;
}

}  // namespace

DiracSpinorSample assemble_spinor(const Eigen::Vector2cd& phi, const Eigen::Vector2cd& chi,
                                  const OrbitPoint& n) {
    const Eigen::Matrix2cd b = std_boost(n);
    Eigen::Vector4cd chiral;
    chiral.head<2>() = b * phi;
    chiral.tail<2>() = b.inverse() * chi;
    return DiracSpinorSample{mixing() * chiral, n};
}

Eigen::Matrix4cd form_metric(const OrbitPoint& n) {
    const auto& g = GammaSet::instance();
    const double sgn = n.cone_sign();
    return sgn * mixing() * g.gamma(0) * gamma_dot(n.vector()) * mixing().transpose();
}

std::complex<double> indefinite_form(const DiracSpinorSample& psi1, const DiracSpinorSample& psi2) {
    if ((psi1.n.vector() - psi2.n.vector()).components().cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("indefinite_form: samples carry different orbit labels");
    return (psi1.components.adjoint() * form_metric(psi1.n) * psi2.components)(0);
}

Eigen::Matrix4cd spinor_transformation(const LorentzMatrix& lambda) {
    const Eigen::Matrix2cd m = std_lift(lambda);
    Eigen::Matrix4cd chiral = Eigen::Matrix4cd::Zero();
    chiral.block<2, 2>(0, 0) = m;
    chiral.block<2, 2>(2, 2) = m.adjoint().inverse();
    return mixing() * chiral * mixing().transpose();
}

DiracField discrete_symmetry(DiscreteKind kind, const DiracField& psi) {
    const auto& g = GammaSet::instance();
    const Eigen::Matrix4cd& t = mixing();
    // matrix factors expressed in the sample basis
    const Eigen::Matrix4cd g0 = t * g.gamma(0) * t.transpose();
    const Eigen::Matrix4cd g1 = t * g.gamma(1) * t.transpose();
    const Eigen::Matrix4cd g2 = t * g.gamma(2) * t.transpose();
    const Eigen::Matrix4cd g3 = t * g.gamma(3) * t.transpose();
    const Eigen::Matrix4cd g5 = t * g.gamma5() * t.transpose();

    Eigen::Matrix4cd factor;
    bool conjugate = true;
    // argument reflections: signs on (t, x, n0, nvec, tau)
    double st = 1, sx = 1, sn0 = 1, snv = 1, stau = 1;
    switch (kind) {
        case DiscreteKind::C:
            factor = kI * g2;
            stau = -1;
            break;
        case DiscreteKind::P:
            // parity acts linearly; a conjugation here would cancel the
            // momentum flip produced by the argument reflection
            factor = g0;
            conjugate = false;
            sx = -1;
            snv = -1;
            break;
        case DiscreteKind::T:
            factor = kI * g1 * g3;
            st = -1;
            sn0 = -1;
            stau = -1;
            break;
        case DiscreteKind::CP:
            factor = kI * g2 * g0;
            sx = -1;
            snv = -1;
            stau = -1;
            break;
        case DiscreteKind::CPT:
            factor = kI * g5;
            st = -1;
            sx = -1;
            sn0 = -1;
            snv = -1;
            break;
        default:
            throw std::invalid_argument("discrete_symmetry: unknown kind");
    }
    return [=](const FourVector& x, const OrbitPoint& n, double tau) -> Eigen::Vector4cd {
        const FourVector xr(st * x[0], sx * x[1], sx * x[2], sx * x[3]);
        const OrbitPoint nr =
            OrbitPoint::from_vector(FourVector(sn0 * n[0], snv * n[1], snv * n[2], snv * n[3]));
        Eigen::Vector4cd value = psi(xr, nr, stau * tau);
        if (conjugate) value = value.conjugate();
        return factor * value;
    };
}

std::string matrix_families_json(const OrbitPoint& n) {
    const auto& g = GammaSet::instance();
    auto dump = [](const Eigen::Matrix4cd& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) rows.push_back({m(i, j).real(), m(i, j).imag()});
        return rows;
    };
    nlohmann::json out;
    for (int mu = 0; mu < 4; ++mu) out["gamma"].push_back(dump(g.gamma(mu)));
    out["gamma5"] = dump(g.gamma5());
    const auto alg = projected_algebra(n);
    for (int mu = 0; mu < 4; ++mu) {
        out["gamma_n"].push_back(dump(alg.gamma_n[mu]));
        out["k"].push_back(dump(alg.k[mu]));
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) out["sigma_n"].push_back(dump(alg.sigma_n[mu][nu]));
    out["n"] = {n[0], n[1], n[2], n[3]};
    return out.dump();
}

}  // namespace orbitrep::dirac
