#include "orbitrep/exact.hpp"

#include <cmath>
#include <vector>

namespace orbitrep {

namespace {

// Primes for squarefree extraction. Every integer this library produces
// is a product of factorials of small arguments, so its prime factors
// are small; the fallback below covers anything else.
const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        std::vector<int> p;
        std::vector<bool> sieve(100000, true);
        for (int i = 2; i < 100000; ++i) {
            if (!sieve[i]) continue;
            p.push_back(i);
            for (int j = 2 * i; j < 100000; j += i) sieve[j] = false;
        }
        return p;
    }();
    return primes;
}

}  // namespace

void squarefree_split(const Integer& n, Integer& s, Integer& d) {
    if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
    Integer rest = n;
    s = 1;
    d = 1;
    for (int p : small_primes()) {
        if (rest == 1) break;
        Integer pp(p);
        if (pp * pp > rest && rest > 1) break;
        int e = 0;
        while (rest % pp == 0) {
            rest /= pp;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= pp;
        if (e % 2) d *= pp;
    }
    if (rest > 1) {
        // Either prime, a perfect square, or treated as squarefree.
        Integer r = boost::multiprecision::sqrt(rest);
        if (r * r == rest)
            s *= r;
        else
            d *= rest;
    }
}

Integer factorial_int(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    static std::vector<Integer> cache{1};
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * Integer(cache.size()));
    return cache[n];
}

Integer binomial_int(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial_int(n) / (factorial_int(k) * factorial_int(n - k));
}

Integer double_factorial_int(int n) {
    if (n < -1) throw std::domain_error("double factorial of integer < -1");
    Integer r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

ExactReal ExactReal::sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("ExactReal::sqrt_of negative rational");
    if (r == 0) return ExactReal();
    // sqrt(p/q) = sqrt(p q) / q
    const Integer p = boost::multiprecision::numerator(r);
    const Integer q = boost::multiprecision::denominator(r);
    Integer s, d;
    squarefree_split(p * q, s, d);
    return ExactReal(Rational(s, q), d);
}

ExactReal ExactReal::signed_sqrt(int sign, const Rational& radicand) {
    ExactReal v = sqrt_of(radicand);
    if (sign < 0) v.coeff_ = -v.coeff_;
    if (sign == 0) return ExactReal();
    return v;
}

int ExactReal::sign() const {
    if (coeff_ == 0) return 0;
    return coeff_ > 0 ? 1 : -1;
}

Rational ExactReal::radicand() const { return coeff_ * coeff_ * Rational(root_); }

Rational ExactReal::rational_value() const {
    if (!is_rational()) throw std::domain_error("ExactReal: value is irrational");
    return coeff_;
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
    if (coeff_ == 0 || o.coeff_ == 0) return ExactReal();
    // sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)) with g = gcd(d1, d2);
    // the cofactors are coprime and squarefree, so no factorization is needed.
    const Integer g = boost::multiprecision::gcd(root_, o.root_);
    return ExactReal(coeff_ * o.coeff_ * Rational(g), (root_ / g) * (o.root_ / g));
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
    if (o.coeff_ == 0) throw std::domain_error("ExactReal: division by zero");
    // 1/sqrt(d) = sqrt(d)/d
    const ExactReal inv(Rational(1) / (o.coeff_ * Rational(o.root_)), o.root_);
    return *this * inv;
}

ExactReal ExactReal::operator-() const { return ExactReal(-coeff_, root_); }

ExactReal ExactReal::operator+(const ExactReal& o) const {
    if (coeff_ == 0) return o;
    if (o.coeff_ == 0) return *this;
    if (root_ != o.root_)
        throw std::domain_error("ExactReal: addition across radical classes (use RadicalSum)");
    const Rational c = coeff_ + o.coeff_;
    if (c == 0) return ExactReal();
    return ExactReal(c, root_);
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

double ExactReal::to_double() const {
    return static_cast<double>(coeff_) * std::sqrt(static_cast<double>(root_));
}

std::string ExactReal::str() const {
    if (coeff_ == 0) return "0";
    if (root_ == 1) return coeff_.str();
    return coeff_.str() + "*sqrt(" + root_.str() + ")";
}

void RadicalSum::add(const ExactReal& x) {
    if (x.is_zero()) return;
    auto it = terms_.find(x.root());
    if (it == terms_.end()) {
        terms_.emplace(x.root(), x.coefficient());
    } else {
        it->second += x.coefficient();
        if (it->second == 0) terms_.erase(it);
    }
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    for (const auto& [root, c] : o.terms_) {
        auto it = terms_.find(root);
        if (it == terms_.end()) {
            terms_.emplace(root, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactReal RadicalSum::as_exact_real() const {
    if (terms_.empty()) return ExactReal();
    if (terms_.size() > 1)
        throw std::domain_error("RadicalSum: value spans several radical classes");
    const auto& [root, c] = *terms_.begin();
    int sgn = c > 0 ? 1 : -1;
    return ExactReal::signed_sqrt(sgn, c * c * Rational(root));
}

double RadicalSum::to_double() const {
    double s = 0;
    for (const auto& [root, c] : terms_)
        s += static_cast<double>(c) * std::sqrt(static_cast<double>(root));
    return s;
}

std::string CRational::str() const {
    std::string s = re.str();
    if (im != 0) s += (im > 0 ? "+" : "") + im.str() + "i";
    return s;
}

}  // namespace orbitrep
