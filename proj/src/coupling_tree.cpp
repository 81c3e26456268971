#include "orbitrep/coupling_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace orbitrep::angular {

CouplingTree CouplingTree::leaf(int particle, int twice_j) {
    CouplingTree t;
    Node n;
    n.leaf = particle;
    n.twice_j = twice_j;
    t.nodes_.push_back(n);
    t.root_ = 0;
    return t;
}

int CouplingTree::attach(const CouplingTree& t, std::vector<Node>& arena) const {
    const int base = static_cast<int>(arena.size());
    for (Node n : t.nodes_) {
        if (n.left >= 0) n.left += base;
        if (n.right >= 0) n.right += base;
        arena.push_back(n);
    }
    return base + t.root_;
}

CouplingTree CouplingTree::couple(const CouplingTree& a, const CouplingTree& b, int twice_j) {
    CouplingTree t;
    const int ra = t.attach(a, t.nodes_);
    const int rb = t.attach(b, t.nodes_);
    Node root;
    root.left = ra;
    root.right = rb;
    root.twice_j = twice_j;
    t.nodes_.push_back(root);
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
}

CouplingTree CouplingTree::shape_only() const {
    CouplingTree t = *this;
    for (Node& n : t.nodes_)
        if (n.leaf < 0) n.twice_j = -1;
    return t;
}

int CouplingTree::leaf_count() const {
    int c = 0;
    for (const Node& n : nodes_)
        if (n.leaf >= 0) ++c;
    return c;
}

std::map<int, int> CouplingTree::leaf_spins() const {
    std::map<int, int> m;
    for (const Node& n : nodes_)
        if (n.leaf >= 0) m[n.leaf] = n.twice_j;
    return m;
}

std::string CouplingTree::str() const {
    std::function<std::string(int)> rec = [&](int i) -> std::string {
        const Node& n = nodes_[i];
        if (n.leaf >= 0) return std::to_string(n.leaf);
        std::string s = "(" + rec(n.left) + " " + rec(n.right) + ")";
        if (n.twice_j >= 0) s += "_" + HalfInt(n.twice_j).str();
        return s;
    };
    return rec(root_);
}

std::string CouplingTree::unordered_key() const {
    std::function<std::string(int)> rec = [&](int i) -> std::string {
        const Node& n = nodes_[i];
        if (n.leaf >= 0) return std::to_string(n.leaf);
        std::string a = rec(n.left), b = rec(n.right);
        if (b < a) std::swap(a, b);
        return "(" + a + " " + b + ")";
    };
    return rec(root_);
}

std::vector<CouplingTree> CouplingTree::labelings(int twice_total) const {
    // Assign internal spins bottom-up; keep assignments whose root matches.
    std::vector<CouplingTree> out;
    CouplingTree work = *this;
    // Nodes in child-before-parent order.
    std::vector<int> order;
    std::function<void(int)> visit = [&](int i) {
        const Node& n = nodes_[i];
        if (n.left >= 0) {
            visit(n.left);
            visit(n.right);
        }
        if (n.leaf < 0) order.push_back(i);
    };
    visit(root_);

    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == order.size()) {
            if (work.nodes_[root_].twice_j == twice_total) out.push_back(work);
            return;
        }
        const int i = order[pos];
        const int ja = work.nodes_[work.nodes_[i].left].twice_j;
        const int jb = work.nodes_[work.nodes_[i].right].twice_j;
        for (int jc = std::abs(ja - jb); jc <= ja + jb; jc += 2) {
            work.nodes_[i].twice_j = jc;
            assign(pos + 1);
        }
        work.nodes_[i].twice_j = -1;
    };
    assign(0);
    return out;
}

std::map<std::vector<int>, ExactReal> CouplingTree::expand(int twice_sigma) const {
    const auto spins = leaf_spins();
    std::vector<int> particles;
    for (const auto& [p, j] : spins) particles.push_back(p);

    // Per subtree: map from m (2m at the subtree spin) to expansions over
    // the subtree's own particles.
    struct SubState {
        std::map<int, std::map<std::vector<int>, ExactReal>> by_m;  // keyed by 2m
        std::vector<int> particles;                                 // sorted
        int twice_j;
    };
    std::function<SubState(int)> rec = [&](int i) -> SubState {
        const Node& n = nodes_[i];
        SubState st;
        st.twice_j = n.twice_j;
        if (n.twice_j < 0) throw std::invalid_argument("CouplingTree: unlabeled internal spin");
        if (n.leaf >= 0) {
            st.particles = {n.leaf};
            for (int tm = n.twice_j; tm >= -n.twice_j; tm -= 2) st.by_m[tm][{tm}] = ExactReal(1);
            return st;
        }
        SubState L = rec(n.left), R = rec(n.right);
        st.particles = L.particles;
        st.particles.insert(st.particles.end(), R.particles.begin(), R.particles.end());
        const HalfInt ja(L.twice_j), jb(R.twice_j), jc(n.twice_j);
        for (int tm = n.twice_j; tm >= -n.twice_j; tm -= 2) {
            auto& target = st.by_m[tm];
            for (const auto& [tma, lexp] : L.by_m) {
                const int tmb = tm - tma;
                auto rit = R.by_m.find(tmb);
                if (rit == R.by_m.end()) continue;
                const ExactReal cg = clebsch_gordan(ja, jb, jc, HalfInt(tma), HalfInt(tmb), HalfInt(tm));
                if (cg.is_zero()) continue;
                for (const auto& [lm, lamp] : lexp)
                    for (const auto& [rm, ramp] : rit->second) {
                        std::vector<int> key = lm;
                        key.insert(key.end(), rm.begin(), rm.end());
                        const ExactReal term = lamp * ramp * cg;
                        auto it = target.find(key);
                        if (it == target.end())
                            target.emplace(std::move(key), term);
                        else
                            it->second = it->second + term;
                    }
            }
        }
        return st;
    };

    SubState root_state = rec(root_);
    auto it = root_state.by_m.find(twice_sigma);
    if (it == root_state.by_m.end())
        throw std::invalid_argument("CouplingTree::expand: projection out of range");

    // Re-key projections into sorted particle order.
    std::vector<int> perm(root_state.particles.size());
    for (std::size_t a = 0; a < perm.size(); ++a) {
        auto pos = std::find(particles.begin(), particles.end(), root_state.particles[a]);
        perm[a] = static_cast<int>(pos - particles.begin());
    }
    std::map<std::vector<int>, ExactReal> out;
    for (const auto& [key, amp] : it->second) {
        std::vector<int> sorted_key(key.size());
        for (std::size_t a = 0; a < key.size(); ++a) sorted_key[perm[a]] = key[a];
        out.emplace(std::move(sorted_key), amp);
    }
    return out;
}

namespace {

// All shapes over the contiguous particle range [lo, hi).
std::vector<CouplingTree> shapes_over(const std::vector<int>& particles, int lo, int hi,
                                      int twice_leaf_spin) {
    std::vector<CouplingTree> out;
    if (hi - lo == 1) {
        out.push_back(CouplingTree::leaf(particles[lo], twice_leaf_spin));
        return out;
    }
    for (int mid = lo + 1; mid < hi; ++mid) {
        const auto lefts = shapes_over(particles, lo, mid, twice_leaf_spin);
        const auto rights = shapes_over(particles, mid, hi, twice_leaf_spin);
        for (const auto& L : lefts)
            for (const auto& R : rights) out.push_back(CouplingTree::couple(L, R, -1));
    }
    return out;
}

}  // namespace

std::vector<CouplingTree> enumerate_tree_shapes(int n_leaves, int twice_leaf_spin) {
    if (n_leaves < 1) throw std::invalid_argument("enumerate_tree_shapes: empty");
    if (n_leaves > 16) throw std::invalid_argument("enumerate_tree_shapes: too many leaves");
    std::vector<int> particles(n_leaves);
    for (int i = 0; i < n_leaves; ++i) particles[i] = i;
    return shapes_over(particles, 0, n_leaves, twice_leaf_spin);
}

std::vector<CouplingTree> enumerate_labeled_trees(int n_leaves, int twice_leaf_spin) {
    std::vector<int> particles(n_leaves);
    for (int i = 0; i < n_leaves; ++i) particles[i] = i;
    std::vector<CouplingTree> out;
    std::sort(particles.begin(), particles.end());
    do {
        auto shapes = shapes_over(particles, 0, n_leaves, twice_leaf_spin);
        out.insert(out.end(), shapes.begin(), shapes.end());
    } while (std::next_permutation(particles.begin(), particles.end()));
    return out;
}

std::vector<CouplingTree> enumerate_inequivalent_schemes(int n_leaves, int twice_leaf_spin) {
    if (n_leaves < 2) throw std::invalid_argument("enumerate_inequivalent_schemes: need two leaves");
    // Insert leaf k into every edge (including above the root) of every
    // scheme on k leaves: (2k-1) growth factor gives (2N-3)!!.
    std::vector<CouplingTree> trees{CouplingTree::couple(CouplingTree::leaf(0, twice_leaf_spin),
                                                         CouplingTree::leaf(1, twice_leaf_spin), -1)};
    for (int k = 2; k < n_leaves; ++k) {
        std::vector<CouplingTree> grown;
        for (const CouplingTree& t : trees) {
            for (int edge_child = 0; edge_child < t.node_count() + 1; ++edge_child) {
                // edge_child == node_count(): insert above the root.
                CouplingTree nt = t;
                const CouplingTree lf = CouplingTree::leaf(k, twice_leaf_spin);
                if (edge_child == t.node_count()) {
                    grown.push_back(CouplingTree::couple(nt, lf, -1));
                    continue;
                }
                if (edge_child == t.root()) continue;  // covered by the case above
                // Rebuild with a new internal node replacing child `edge_child`.
                std::function<CouplingTree(int)> rebuild = [&](int i) -> CouplingTree {
                    const auto& n = t.node(i);
                    CouplingTree sub = (n.leaf >= 0)
                                           ? CouplingTree::leaf(n.leaf, n.twice_j)
                                           : CouplingTree::couple(rebuild(n.left), rebuild(n.right), -1);
                    if (i == edge_child) sub = CouplingTree::couple(sub, lf, -1);
                    return sub;
                };
                grown.push_back(rebuild(t.root()));
            }
        }
        trees = std::move(grown);
    }
    return trees;
}

ExactReal recoupling_amplitude(const CouplingTree& a, const CouplingTree& b, const HalfInt& j,
                               const HalfInt& sigma) {
    if (a.leaf_spins() != b.leaf_spins())
        throw std::invalid_argument("recoupling_amplitude: different particle content");
    if (a.twice_total() != j.twice() || b.twice_total() != j.twice())
        throw std::invalid_argument("recoupling_amplitude: trees do not carry the requested total spin");
    if (!projection_valid(j, sigma))
        throw std::invalid_argument("recoupling_amplitude: invalid projection");
    const auto ea = a.expand(sigma.twice());
    const auto eb = b.expand(sigma.twice());
    RadicalSum sum;
    for (const auto& [key, amp] : ea) {
        auto it = eb.find(key);
        if (it != eb.end()) sum += amp * it->second;
    }
    return sum.is_zero() ? ExactReal() : sum.as_exact_real();
}

}  // namespace orbitrep::angular
