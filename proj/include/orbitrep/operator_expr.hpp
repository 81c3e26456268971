#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitrep/exact.hpp"

namespace orbitrep::poincare {

/**
Generator symbols of the on-orbit operator algebra. Canonical normal
order is x before p before n before dn before w, indices ascending
within a species. Nontrivial exchange rules:

    [x^mu, p^nu]  = i eta^{mu nu}
    [dn^mu, n^nu] = eta^{mu nu}

(dn^mu is the metric-raised n-derivative). All other pairs commute.
The symbol w is an opaque bookkeeping mark for the integration-measure
weight appearing in the adjoint of dn; it commutes with everything and
is never rewritten.
*/
enum class Species : std::uint8_t { X = 0, P = 1, N = 2, Dn = 3, W = 4 };

/// Packed generator code: species * 4 + index (w has no index).
using GenCode = std::uint8_t;

constexpr GenCode gen_code(Species s, int mu = 0) {
    return static_cast<GenCode>(static_cast<int>(s) * 4 + mu);
}
constexpr Species gen_species(GenCode g) { return static_cast<Species>(g / 4); }
constexpr int gen_index(GenCode g) { return g % 4; }

using Word = std::vector<GenCode>;

/**
A normal-ordered noncommutative polynomial with exact complex-rational
coefficients. Equal canonical forms compare equal; all operations keep
the canonical form.
*/
class OperatorExpr {
public:
    OperatorExpr() = default;
    static OperatorExpr zero() { return {}; }
    static OperatorExpr constant(const CRational& c);
    static OperatorExpr generator(Species s, int mu = 0);
    /// x^mu, p^mu, n^mu, dn^mu shorthands.
    static OperatorExpr x(int mu) { return generator(Species::X, mu); }
    static OperatorExpr p(int mu) { return generator(Species::P, mu); }
    static OperatorExpr n(int mu) { return generator(Species::N, mu); }
    static OperatorExpr dn(int mu) { return generator(Species::Dn, mu); }

    OperatorExpr operator+(const OperatorExpr& o) const;
    OperatorExpr operator-(const OperatorExpr& o) const;
    OperatorExpr operator*(const OperatorExpr& o) const;
    OperatorExpr operator-() const;
    OperatorExpr scaled(const CRational& c) const;
    bool operator==(const OperatorExpr& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool contains(Species s) const;

    /// Formal adjoint: words reversed, coefficients conjugated; x, p, n, w
    /// self-adjoint, dn^mu -> -dn^mu - n^mu w (the measure term).
    OperatorExpr adjoint() const;

    /// Reduction modulo the two-sided ideal of (n.n + 1): rewrites every
    /// n^0 n^0 factor into 1 + n^1 n^1 + n^2 n^2 + n^3 n^3.
    OperatorExpr reduce_shell() const;

    /// Replace the n generators by rational values (coefficients absorb
    /// them). The result is only a faithful operator when the dn content
    /// vanishes or is handled by the caller.
    OperatorExpr substitute_n(const std::array<Rational, 4>& n_value) const;

    /// The constant part (coefficient of the empty word).
    CRational constant_part() const;
    /// True when the only term is the empty word (or zero).
    bool is_constant() const;

    std::string str() const;
    const std::map<Word, CRational>& terms() const { return terms_; }

private:
    void add_term(Word w, const CRational& c);
    std::map<Word, CRational> terms_;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

}  // namespace orbitrep::poincare
