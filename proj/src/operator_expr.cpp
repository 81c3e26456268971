#include "orbitrep/operator_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitrep::poincare {

namespace {

// eta^{mu mu} entries for the exchange rules.
Rational eta_diag(int mu) { return mu == 0 ? Rational(-1) : Rational(1); }

}  // namespace

void OperatorExpr::add_term(Word w, const CRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorExpr OperatorExpr::constant(const CRational& c) {
    OperatorExpr e;
    e.add_term({}, c);
    return e;
}

OperatorExpr OperatorExpr::generator(Species s, int mu) {
    if (mu < 0 || mu > 3) throw std::invalid_argument("OperatorExpr: index out of range");
    OperatorExpr e;
    e.add_term({gen_code(s, mu)}, CRational(1));
    return e;
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
    OperatorExpr out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const { return *this + (-o); }

OperatorExpr OperatorExpr::operator-() const {
    OperatorExpr out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

OperatorExpr OperatorExpr::scaled(const CRational& c) const {
    OperatorExpr out;
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
    return out;
}

OperatorExpr OperatorExpr::operator*(const OperatorExpr& o) const {
    OperatorExpr out;
    // Normal ordering by a worklist: find the first adjacent out-of-order
    // pair, exchange it, and keep the contraction term the exchange rule
    // produces. Words with no such pair are canonical.
    std::vector<std::pair<Word, CRational>> work;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            work.emplace_back(std::move(w), ca * cb);
        }
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        bool canonical = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const GenCode a = w[i], b = w[i + 1];
            if (a <= b) continue;
            canonical = false;
            const Species sa = gen_species(a), sb = gen_species(b);
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            if (sa == Species::P && sb == Species::X && gen_index(a) == gen_index(b)) {
                // p x = x p - i eta
                Word contracted = w;
                contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
                work.emplace_back(std::move(contracted),
                                  c * CRational(Rational(0), -eta_diag(gen_index(a))));
            } else if (sa == Species::Dn && sb == Species::N && gen_index(a) == gen_index(b)) {
                // dn n = n dn + eta
                Word contracted = w;
                contracted.erase(contracted.begin() + i, contracted.begin() + i + 2);
                work.emplace_back(std::move(contracted), c * CRational(eta_diag(gen_index(a))));
            }
            work.emplace_back(std::move(swapped), c);
            break;
        }
        if (canonical) out.add_term(std::move(w), c);
    }
    return out;
}

bool OperatorExpr::contains(Species s) const {
    for (const auto& [w, c] : terms_)
        for (GenCode g : w)
            if (gen_species(g) == s) return true;
    return false;
}

OperatorExpr OperatorExpr::adjoint() const {
    OperatorExpr out;
    for (const auto& [w, c] : terms_) {
        OperatorExpr term = OperatorExpr::constant(c.conj());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Species s = gen_species(*it);
            const int mu = gen_index(*it);
            if (s == Species::Dn) {
                // (dn^mu)^dag = -dn^mu - n^mu w
                OperatorExpr adj = (-OperatorExpr::dn(mu)) -
                                   OperatorExpr::n(mu) * OperatorExpr::generator(Species::W);
                term = term * adj;
            } else {
                term = term * OperatorExpr::generator(s, mu);
            }
        }
        out = out + term;
    }
    return out;
}

OperatorExpr OperatorExpr::reduce_shell() const {
    OperatorExpr out;
    std::vector<std::pair<Word, CRational>> work(terms_.begin(), terms_.end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        // count n^0 factors (code 8)
        const auto first = std::find(w.begin(), w.end(), gen_code(Species::N, 0));
        if (first != w.end() && std::next(first) != w.end() && *std::next(first) == gen_code(Species::N, 0)) {
            // n0 n0 -> 1 + n1 n1 + n2 n2 + n3 n3
            Word base = w;
            base.erase(std::find(base.begin(), base.end(), gen_code(Species::N, 0)));
            base.erase(std::find(base.begin(), base.end(), gen_code(Species::N, 0)));
            work.emplace_back(base, c);
            for (int k = 1; k <= 3; ++k) {
                Word ext = base;
                ext.push_back(gen_code(Species::N, k));
                ext.push_back(gen_code(Species::N, k));
                std::sort(ext.begin(), ext.end());
                work.emplace_back(std::move(ext), c);
            }
        } else {
            out.add_term(std::move(w), c);
        }
    }
    return out;
}

OperatorExpr OperatorExpr::substitute_n(const std::array<Rational, 4>& n_value) const {
    OperatorExpr out;
    for (const auto& [w, c] : terms_) {
        CRational coeff = c;
        Word rest;
        for (GenCode g : w) {
            if (gen_species(g) == Species::N)
                coeff = coeff * CRational(n_value[gen_index(g)]);
            else
                rest.push_back(g);
        }
        out.add_term(std::move(rest), coeff);
    }
    return out;
}

CRational OperatorExpr::constant_part() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? CRational() : it->second;
}

bool OperatorExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::string OperatorExpr::str() const {
    if (terms_.empty()) return "0";
    static const char* names[5] = {"x", "p", "n", "dn", "w"};
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (GenCode g : w) {
            out += " ";
            out += names[static_cast<int>(gen_species(g))];
            if (gen_species(g) != Species::W) out += std::to_string(gen_index(g));
        }
    }
    return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

}  // namespace orbitrep::poincare
