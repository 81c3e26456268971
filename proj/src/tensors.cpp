#include "orbitrep/tensors.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "orbitrep/config.hpp"

namespace orbitrep::tensors {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

ProductRep::ProductRep(const little_group::WignerRotation& d, int n_factors)
    : d_(d), factor_(d.matrix()), n_factors_(n_factors) {
    if (n_factors < 1) throw std::invalid_argument("ProductRep: need at least one factor");
    long long dim = 1;
    for (int i = 0; i < n_factors; ++i) {
        dim *= 2;
        if (dim > dimension_cap())
            throw std::invalid_argument("ProductRep: 2^N exceeds the dimension cap");
    }
}

Eigen::MatrixXcd ProductRep::assembled() const {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < n_factors_; ++i) acc = kron(acc, factor_);
    return acc;
}

ProductRep product_rep(const LorentzMatrix& lambda, const OrbitPoint& n, int n_factors) {
    return ProductRep(little_group::wigner_rotation(lambda, n), n_factors);
}

ReducedRep reduce_rep(const ProductRep& rep) {
    const auto dec = angular::decompose_product(rep.n_factors());
    const Eigen::MatrixXcd assembled = rep.assembled();
    ReducedRep out;
    out.block_diagonal = dec.c.transpose() * assembled * dec.c;
    out.blocks = dec.blocks;
    int offset = 0;
    for (const auto& b : dec.blocks)
        for (int copy = 0; copy < b.multiplicity; ++copy) {
            out.block_ranges.emplace_back(offset, b.dimension);
            offset += b.dimension;
        }
    Eigen::MatrixXcd masked = out.block_diagonal;
    for (const auto& [off, dim] : out.block_ranges) masked.block(off, off, dim, dim).setZero();
    out.off_block_residual = masked.norm();
    return out;
}

double su2_character(int twice_s, double theta) {
    // Chebyshev recurrence chi_s = chi_{1/2} chi_{s-1/2} - chi_{s-1}.
    const double c = 2.0 * std::cos(theta / 2.0);
    double prev = 0.0;  // chi at 2s = -1
    double curr = 1.0;  // chi_0
    for (int t = 1; t <= twice_s; ++t) {
        const double next = c * curr - prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

OnOrbitTensor OnOrbitTensor::from_vector(const FourVector& a, const OrbitPoint& n) {
    return OnOrbitTensor{sl2c::vector_to_matrix(a), n};
}

OnOrbitTensor transform_on_orbit(const OnOrbitTensor& t, const LorentzMatrix& lambda) {
    const auto lift = sl2c::lift_lorentz(lambda);
    OnOrbitTensor out;
    out.matrix = lift.matrix() * t.matrix * lift.matrix().adjoint();
    out.n = little_group::orbit_act(lambda, t.n);
    return out;
}

Rank2Components rank2_components(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Rank2Components t;
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be)
            for (int ga = 0; ga < 2; ++ga)
                for (int de = 0; de < 2; ++de) t[al][be][ga][de] = a(al, be) * b(ga, de);
    return t;
}

namespace {

// The linear functionals inverting the vector map on one index pair.
std::complex<double> invert_slot(int mu, const std::complex<double>& m00,
                                 const std::complex<double>& m01, const std::complex<double>& m10,
                                 const std::complex<double>& m11) {
    static const double r2 = std::sqrt(2.0);
    static const std::complex<double> I(0, 1);
    switch (mu) {
        case 0: return (m00 + m11) / r2;
        case 1: return (m01 + m10) / r2;
        case 2: return -I * (m01 - m10) / r2;
        default: return (m00 - m11) / r2;
    }
}

const Eigen::Matrix2cd& epsilon_metric() {
    static const Eigen::Matrix2cd eps = [] {
        Eigen::Matrix2cd e;
        e << 0, 1, -1, 0;
        return e;
    }();
    return eps;
}

Eigen::VectorXcd flatten_pair(const Eigen::Matrix2cd& m) {
    Eigen::VectorXcd v(4);
    v << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return v;
}

}  // namespace

Eigen::Matrix4d extract_rank2(const Rank2Components& t) {
    Eigen::Matrix4d out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            std::complex<double> partial[2][2];
            for (int al = 0; al < 2; ++al)
                for (int be = 0; be < 2; ++be)
                    partial[al][be] = invert_slot(nu, t[al][be][0][0], t[al][be][0][1],
                                                  t[al][be][1][0], t[al][be][1][1]);
            out(mu, nu) =
                invert_slot(mu, partial[0][0], partial[0][1], partial[1][0], partial[1][1]).real();
        }
    return out;
}

HigherRankObject::HigherRankObject(const std::vector<FourVector>& vectors,
                                   const std::vector<Eigen::Vector2cd>& spinors, const OrbitPoint& n)
    : vector_slots_(static_cast<int>(vectors.size())),
      spinor_slots_(static_cast<int>(spinors.size())),
      n_(n),
      body_vectors_(vectors),
      body_spinors_(spinors) {
    const int factors = 2 * vector_slots_ + spinor_slots_;
    long long dim = 1;
    for (int i = 0; i < factors; ++i) {
        dim *= 2;
        if (dim > dimension_cap())
            throw std::invalid_argument("HigherRankObject: 2^(2m+n) exceeds the dimension cap");
    }
    rebuild();
}

void HigherRankObject::rebuild() {
    components_ = Eigen::VectorXcd::Ones(1);
    for (const FourVector& a : body_vectors_) {
        // epsilon twist: A eps transforms as D (x) D under the little group
        const Eigen::Matrix2cd twisted = sl2c::vector_to_matrix(a) * epsilon_metric();
        components_ = kron(components_, flatten_pair(twisted));
    }
    for (const Eigen::Vector2cd& s : body_spinors_) components_ = kron(components_, Eigen::MatrixXcd(s));
}

HigherRankObject HigherRankObject::transform(const LorentzMatrix& lambda) const {
    const auto d = little_group::wigner_rotation(lambda, n_);
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < factor_count(); ++i) full = kron(full, Eigen::MatrixXcd(d.matrix()));
    HigherRankObject out = *this;
    out.n_ = little_group::orbit_act(lambda, n_);
    out.components_ = full * components_;
    // body data no longer tracked exactly after a raw matrix action;
    // refresh it through the covering image so both fields stay in step
    const LorentzMatrix r = sl2c::covering_map(sl2c::Sl2cElement::from_matrix(d.matrix()));
    for (auto& v : out.body_vectors_) v = r * v;
    for (auto& s : out.body_spinors_) s = d.matrix() * s;
    return out;
}

HigherRankObject HigherRankObject::transform_via_covering(const LorentzMatrix& lambda) const {
    const auto d = little_group::wigner_rotation(lambda, n_);
    const LorentzMatrix r = sl2c::covering_map(sl2c::Sl2cElement::from_matrix(d.matrix()));
    std::vector<FourVector> vecs = body_vectors_;
    for (auto& v : vecs) v = r * v;
    std::vector<Eigen::Vector2cd> sps = body_spinors_;
    for (auto& s : sps) s = d.matrix() * s;
    return HigherRankObject(vecs, sps, little_group::orbit_act(lambda, n_));
}

std::vector<BlockSpec> HigherRankObject::reduction_blocks() const {
    return angular::decompose_product(factor_count()).blocks;
}

std::string block_spec_json(const std::vector<BlockSpec>& blocks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : blocks)
        arr.push_back(
            {{"two_s", b.twice_s}, {"multiplicity", b.multiplicity}, {"dimension", b.dimension}});
    return arr.dump();
}

}  // namespace orbitrep::tensors
