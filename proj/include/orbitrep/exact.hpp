#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace orbitrep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n = s^2 * d with d squarefree, n > 0.
void squarefree_split(const Integer& n, Integer& s, Integer& d);

Integer factorial_int(int n);
Integer binomial_int(int n, int k);
Integer double_factorial_int(int n);

/**
An exact value of the form sign * sqrt(p/q), stored canonically as a
rational coefficient times the square root of a squarefree positive
integer. Closed under multiplication and division; addition is exact
only between values sharing a radical class (use RadicalSum otherwise).
*/
class ExactReal {
public:
    ExactReal() : coeff_(0), root_(1) {}
    ExactReal(const Rational& r) : coeff_(r), root_(1) {}
    ExactReal(long long n) : coeff_(n), root_(1) {}

    /// sqrt of a nonnegative rational.
    static ExactReal sqrt_of(const Rational& r);
    /// sign * sqrt(p/q), p, q >= 0.
    static ExactReal signed_sqrt(int sign, const Rational& radicand);

    int sign() const;
    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return root_ == 1 || coeff_ == 0; }
    /// p/q with value = sign * sqrt(p/q).
    Rational radicand() const;
    const Rational& coefficient() const { return coeff_; }
    const Integer& root() const { return root_; }
    Rational rational_value() const;

    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal operator-() const;
    /// Exact addition; throws std::domain_error if the radical classes differ.
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    bool operator==(const ExactReal& o) const { return coeff_ == o.coeff_ && root_ == o.root_; }
    bool operator!=(const ExactReal& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;

private:
    ExactReal(const Rational& c, const Integer& d) : coeff_(c), root_(d) {}
    Rational coeff_;  // carries the sign
    Integer root_;    // squarefree positive integer; 1 when coeff_ == 0
};

/// Multiply by (-1)^k for an integer exponent.
inline ExactReal phase(long long k) { return ExactReal((k % 2 == 0) ? 1 : -1); }

/**
An exact finite sum of ExactReal values, grouped by squarefree radical
class. Sums of distinct classes vanish only term-by-term, so is_zero()
and comparisons are exact.
*/
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const ExactReal& x) { add(x); }

    void add(const ExactReal& x);
    RadicalSum& operator+=(const ExactReal& x) {
        add(x);
        return *this;
    }
    RadicalSum& operator+=(const RadicalSum& o);

    bool is_zero() const { return terms_.empty(); }
    bool is_single_class() const { return terms_.size() <= 1; }
    /// Converts when the sum is a single radical class; throws otherwise.
    ExactReal as_exact_real() const;
    bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }

    double to_double() const;
    std::size_t class_count() const { return terms_.size(); }

private:
    std::map<Integer, Rational> terms_;  // squarefree root -> coefficient
};

/// Exact complex rational (engine coefficients, exact matrix entries).
struct CRational {
    Rational re, im;
    CRational() : re(0), im(0) {}
    CRational(long long r) : re(r), im(0) {}
    CRational(const Rational& r) : re(r), im(0) {}
    CRational(const Rational& r, const Rational& i) : re(r), im(i) {}
    static CRational i() { return CRational(Rational(0), Rational(1)); }

    CRational operator+(const CRational& o) const { return {re + o.re, im + o.im}; }
    CRational operator-(const CRational& o) const { return {re - o.re, im - o.im}; }
    CRational operator*(const CRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRational operator-() const { return {-re, -im}; }
    CRational conj() const { return {re, -im}; }
    bool operator==(const CRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const CRational& o) const { return !(*this == o); }
    bool is_zero() const { return re == 0 && im == 0; }
    double real_double() const { return static_cast<double>(re); }
    double imag_double() const { return static_cast<double>(im); }
    std::string str() const;
};

}  // namespace orbitrep
