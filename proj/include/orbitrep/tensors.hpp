#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "orbitrep/angular.hpp"
#include "orbitrep/little_group.hpp"

namespace orbitrep::tensors {

using angular::BlockSpec;

/// Kronecker product, leaf order (first factor most significant).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/**
The N-fold product of one Wigner rotation with itself: every factor
shares the same (Lambda, n). The assembled matrix is built lazily and is
unitary within N * 1e-12.
*/
class ProductRep {
public:
    ProductRep(const little_group::WignerRotation& d, int n_factors);

    int n_factors() const { return n_factors_; }
    const Eigen::Matrix2cd& factor() const { return factor_; }
    const little_group::WignerRotation& wigner() const { return d_; }
    Eigen::MatrixXcd assembled() const;

private:
    little_group::WignerRotation d_;
    Eigen::Matrix2cd factor_;
    int n_factors_;
};

ProductRep product_rep(const LorentzMatrix& lambda, const OrbitPoint& n, int n_factors);

struct ReducedRep {
    Eigen::MatrixXcd block_diagonal;  // C^T (D tensor N) C
    std::vector<BlockSpec> blocks;    // descending s
    double off_block_residual = 0;    // Frobenius norm outside the blocks
    /// Offsets of each irreducible block (s-copy) along the diagonal.
    std::vector<std::pair<int, int>> block_ranges;  // (offset, dim), all copies
};

/// Conjugates the assembled product by the coupled basis of
/// decompose_product; off-block residual <= 1e-10 on valid inputs.
ReducedRep reduce_rep(const ProductRep& rep);

/// SO(3) character sin((2s+1) theta/2) / sin(theta/2), evaluated through
/// the Chebyshev recurrence (stable at theta -> 0).
double su2_character(int twice_s, double theta);

/// A 2x2 matrix image of a 4-vector carrying its orbit label.
struct OnOrbitTensor {
    Eigen::Matrix2cd matrix;
    OrbitPoint n = OrbitPoint::rest();

    static OnOrbitTensor from_vector(const FourVector& a, const OrbitPoint& n);
    /// Round trip for Hermitian content.
    FourVector to_vector() const { return sl2c::matrix_to_vector(matrix); }
};

/// Spinor congruence transport: matrix -> lift(Lambda) matrix lift(Lambda)^dag
/// with the orbit label advanced to Lambda n.
OnOrbitTensor transform_on_orbit(const OnOrbitTensor& t, const LorentzMatrix& lambda);

using Rank2Components = std::array<std::array<std::array<std::array<std::complex<double>, 2>, 2>, 2>, 2>;

/// Components T^{(alpha beta),(gamma delta)} of A (x) B.
Rank2Components rank2_components(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);

/// Applies the vector-map inversion on each 2-index slot; for
/// T = A(a) (x) A(b) the result is the outer product a^mu b^nu.
Eigen::Matrix4d extract_rank2(const Rank2Components& t);

/**
A mixed tensor-spinor on the orbit, stored as body components at the
rest point with every slot reduced to spin-1/2 factors: each vector slot
contributes an epsilon-twisted index pair (transforming as D (x) D under
the little group), each spinor slot a single index.
*/
class HigherRankObject {
public:
    /// vectors: body 4-vectors (at n0); spinors: body 2-spinors.
    HigherRankObject(const std::vector<FourVector>& vectors,
                     const std::vector<Eigen::Vector2cd>& spinors, const OrbitPoint& n);

    int vector_slots() const { return vector_slots_; }
    int spinor_slots() const { return spinor_slots_; }
    int factor_count() const { return 2 * vector_slots_ + spinor_slots_; }
    const OrbitPoint& orbit() const { return n_; }
    const Eigen::VectorXcd& components() const { return components_; }

    /// Little-group action: D(Lambda, n) on every spin-1/2 factor, orbit
    /// label advanced.
    HigherRankObject transform(const LorentzMatrix& lambda) const;

    /// Same transformation routed through the covering map: each vector
    /// slot transformed as a 4-vector by the Wigner rotation's SO(3,1)
    /// image, each spinor slot by D. Agrees with transform().
    HigherRankObject transform_via_covering(const LorentzMatrix& lambda) const;

    /// Block reduction of the underlying 2^(2m+n) product space.
    std::vector<BlockSpec> reduction_blocks() const;

private:
    void rebuild();
    int vector_slots_, spinor_slots_;
    OrbitPoint n_;
    std::vector<FourVector> body_vectors_;
    std::vector<Eigen::Vector2cd> body_spinors_;
    Eigen::VectorXcd components_;
};

/// JSON rendering of a block spec list: [{"two_s":..,"multiplicity":..,"dimension":..}].
std::string block_spec_json(const std::vector<BlockSpec>& blocks);

}  // namespace orbitrep::tensors
