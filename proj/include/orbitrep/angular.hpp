#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <vector>

#include "orbitrep/exact.hpp"
#include "orbitrep/halfint.hpp"

namespace orbitrep::angular {

/**
Clebsch-Gordan coefficient C(j1 m1; j2 m2 | j m) in the Condon-Shortley
phase convention, computed exactly through the standard finite sum.
Zero (exact) outside the triangle/projection selection rules; malformed
half-integer combinations are rejected.
*/
ExactReal clebsch_gordan(const HalfInt& j1, const HalfInt& j2, const HalfInt& j, const HalfInt& m1,
                         const HalfInt& m2, const HalfInt& m);

/// Wigner 3j symbol, (-1)^(j1-j2-m3) C(j1 m1; j2 m2 | j3 -m3)/sqrt(2 j3 + 1).
ExactReal wigner_3j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& m1,
                    const HalfInt& m2, const HalfInt& m3);

/// Racah W(a b c d; e f), exact single-sum evaluation. Zero when any of
/// the triads (abe), (cde), (acf), (bdf) fails the triangle rule.
ExactReal racah_w(const HalfInt& a, const HalfInt& b, const HalfInt& c, const HalfInt& d,
                  const HalfInt& e, const HalfInt& f);

/// 6j symbol {j1 j2 j3; j4 j5 j6} = (-1)^(j1+j2+j4+j5) W(j1 j2 j5 j4; j3 j6).
ExactReal six_j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& j4,
                const HalfInt& j5, const HalfInt& j6);

/// 9j symbol via the single sum over products of three 6j symbols.
ExactReal nine_j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& j4,
                 const HalfInt& j5, const HalfInt& j6, const HalfInt& j7, const HalfInt& j8,
                 const HalfInt& j9);

/// Exact dense matrix over complex rationals (spin operators and their
/// commutators are tested without rounding).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CRational& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const CRational& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const CRational& c) const;
    ExactMatrix kron(const ExactMatrix& o) const;
    bool is_zero() const;
    Eigen::MatrixXcd to_complex() const;

private:
    int rows_, cols_;
    std::vector<CRational> a_;
};

/// Total spin operators S_1, S_2, S_3 for N spin-1/2 factors (leaf order,
/// factor a acts on bit a counted from the most significant side).
/// Entries are exact halves; [S_i, S_j] = i eps_ijk S_k exactly.
std::array<ExactMatrix, 3> total_spin_operators_exact(int n_spins);
std::array<Eigen::MatrixXcd, 3> total_spin_operators(int n_spins);

struct BlockSpec {
    int twice_s = 0;
    int multiplicity = 0;
    int dimension = 0;  // 2s + 1
    bool operator==(const BlockSpec&) const = default;
};

/// Label of one coupled-basis column: the chain of intermediate spins of
/// the left-combed tree (((1 2) 3) ... N), ending at the total spin, plus
/// its projection. All entries as 2j.
struct ChainLabel {
    std::vector<int> twice_intermediate;  // k_2 .. k_{N-1}, s  (N-1 entries)
    int twice_s = 0;
    int twice_sigma = 0;
};

/**
Change of basis from the product basis to total-spin blocks, built from
Clebsch-Gordan products along the canonical left-combed coupling tree.
Columns are grouped by descending s, then construction order of the
multiplicity copies, then descending sigma. C is orthogonal with exact
entries; `c` is the floating-point embedding.
*/
struct Decomposition {
    int n_spins = 0;
    std::vector<BlockSpec> blocks;  // descending s
    std::vector<ChainLabel> columns;
    Eigen::MatrixXd c;
    std::vector<std::map<int, ExactReal>> exact_columns;  // basis index -> entry
};

Decomposition decompose_product(int n_spins);

/// Multiplicity of total spin s in the N-fold product of spin-1/2,
/// binom(N, N/2 - s) - binom(N, N/2 - s - 1).
Integer spin_multiplicity(int n_spins, const HalfInt& s);

/// One eigenvector of the democratic coupling for three spin-1/2:
/// simultaneous eigenbasis of {K = (A x B).C, S^2, S_3}.
struct DemocraticVector {
    ExactReal k;  // 0 on the quadruplet, +-sqrt(3)/4 on the doublets
    int twice_s = 0;
    int twice_sigma = 0;
    Eigen::VectorXcd vec;  // dimension 8, orthonormal set
};

struct DemocraticBasis {
    std::vector<DemocraticVector> vectors;  // 8 entries
    Eigen::MatrixXcd k_matrix;              // the 8x8 operator K
};

DemocraticBasis democratic_coupling();

/// (a_N, c_N, d_N): Catalan bracketings, permuted bracketings, and
/// inequivalent (fixed intermediate-label) schemes (2N-3)!!.
struct CouplingCounts {
    Integer a, c, d;
};
CouplingCounts coupling_counts(int n_spins);

}  // namespace orbitrep::angular
