#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbitrep/angular.hpp"

namespace orbitrep::angular {

/**
A binary coupling scheme for N spins. Leaves carry particle indices and
spin magnitudes; internal nodes carry intermediate spins (2k), the root
the total. Child order matters: node (left right) couples by
C(j_left m_left; j_right m_right | k m).
*/
class CouplingTree {
public:
    struct Node {
        int left = -1, right = -1;  // node indices; -1 for leaves
        int leaf = -1;              // particle index at a leaf
        int twice_j = -1;           // spin at this node (leaf spin or intermediate)
    };

    static CouplingTree leaf(int particle, int twice_j);
    static CouplingTree couple(const CouplingTree& a, const CouplingTree& b, int twice_j);
    /// Same shape and leaves with all internal spins unassigned (-1).
    CouplingTree shape_only() const;

    int root() const { return root_; }
    const Node& node(int i) const { return nodes_[i]; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const;
    int twice_total() const { return nodes_[root_].twice_j; }

    /// Particle index -> leaf spin (2j), for leaf-set comparisons.
    std::map<int, int> leaf_spins() const;

    /// Bracketing such as ((0 1)_2 2)_1, spins as 2j subscripts.
    std::string str() const;

    /// Canonical string invariant under sibling swaps (scheme identity).
    std::string unordered_key() const;

    /// All assignments of internal spins consistent with the triangle
    /// rules and the given total (2j); each returned tree is fully labeled.
    std::vector<CouplingTree> labelings(int twice_total) const;

    /// Expansion over product states: map from per-particle projections
    /// (2m, indexed by particle) to exact amplitudes.
    std::map<std::vector<int>, ExactReal> expand(int twice_sigma) const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;
    int attach(const CouplingTree& t, std::vector<Node>& arena) const;
};

/// All tree shapes on particles 0..N-1 in left-to-right order (a_N shapes).
std::vector<CouplingTree> enumerate_tree_shapes(int n_leaves, int twice_leaf_spin = 1);

/// Shapes with all leaf permutations (c_N trees).
std::vector<CouplingTree> enumerate_labeled_trees(int n_leaves, int twice_leaf_spin = 1);

/// Explicit enumeration of the inequivalent schemes (labeled trees modulo
/// sibling swaps), built by leaf insertion; size (2N-3)!!.
std::vector<CouplingTree> enumerate_inequivalent_schemes(int n_leaves, int twice_leaf_spin = 1);

/**
Exact overlap of two fully labeled coupling schemes over the same
particles with the same total (j, sigma). Independent of sigma.
*/
ExactReal recoupling_amplitude(const CouplingTree& a, const CouplingTree& b, const HalfInt& j,
                               const HalfInt& sigma);

}  // namespace orbitrep::angular
