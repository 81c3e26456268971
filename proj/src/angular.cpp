#include "orbitrep/angular.hpp"

#include "orbitrep/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitrep {

std::string HalfInt::str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool projection_valid(const HalfInt& j, const HalfInt& m) {
    return std::abs(m.twice()) <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

bool triangle_ok(const HalfInt& a, const HalfInt& b, const HalfInt& c) {
    if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
    return c.twice() >= std::abs(a.twice() - b.twice()) && c.twice() <= a.twice() + b.twice();
}

void require_magnitude(const HalfInt& j, const char* what) {
    if (j.twice() < 0) throw std::invalid_argument(std::string(what) + ": negative spin magnitude");
}

namespace angular {

namespace {

// (x)! for a value stored as 2x; throws if 2x is odd.
Integer fact2(int twice_x) {
    if (twice_x % 2 != 0) throw std::invalid_argument("factorial of a half-odd value");
    return factorial_int(twice_x / 2);
}

}  // namespace

ExactReal clebsch_gordan(const HalfInt& j1, const HalfInt& j2, const HalfInt& j, const HalfInt& m1,
                         const HalfInt& m2, const HalfInt& m) {
    require_magnitude(j1, "clebsch_gordan");
    require_magnitude(j2, "clebsch_gordan");
    require_magnitude(j, "clebsch_gordan");
    if (!projection_valid(j1, m1) || !projection_valid(j2, m2) || !projection_valid(j, m))
        throw std::invalid_argument("clebsch_gordan: invalid projection");
    if (m.twice() != m1.twice() + m2.twice()) return ExactReal();
    if (!triangle_ok(j1, j2, j)) return ExactReal();

    const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
    const int tm1 = m1.twice(), tm2 = m2.twice(), tm = m.twice();

    const Rational pref =
        Rational(tj + 1) * Rational(fact2(tj1 + tj2 - tj) * fact2(tj1 - tj2 + tj) * fact2(-tj1 + tj2 + tj),
                                    fact2(tj1 + tj2 + tj + 2)) *
        Rational(fact2(tj1 + tm1) * fact2(tj1 - tm1) * fact2(tj2 + tm2) * fact2(tj2 - tm2) *
                 fact2(tj + tm) * fact2(tj - tm));

    // Sum over k (an integer); bounds from nonnegative factorial arguments.
    const int k_min = std::max({0, (tj2 - tj - tm1) / 2, (tj1 - tj + tm2) / 2});
    const int k_max =
        std::min({(tj1 + tj2 - tj) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    Rational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        const Integer den = factorial_int(k) * fact2(tj1 + tj2 - tj - 2 * k) * fact2(tj1 - tm1 - 2 * k) *
                            fact2(tj2 + tm2 - 2 * k) * fact2(tj - tj2 + tm1 + 2 * k) *
                            fact2(tj - tj1 - tm2 + 2 * k);
        sum += Rational((k % 2 == 0) ? 1 : -1, den);
    }
    return ExactReal(sum) * ExactReal::sqrt_of(pref);
}

ExactReal wigner_3j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& m1,
                    const HalfInt& m2, const HalfInt& m3) {
    if (m1.twice() + m2.twice() + m3.twice() != 0) return ExactReal();
    if (!triangle_ok(j1, j2, j3)) return ExactReal();
    // (-1)^(j1 - j2 - m3): the exponent is an integer on the support.
    const int twice_e = j1.twice() - j2.twice() - m3.twice();
    if (twice_e % 2 != 0) return ExactReal();
    const ExactReal cg = clebsch_gordan(j1, j2, j3, m1, m2, -m3);
    return phase(twice_e / 2) * cg / ExactReal::sqrt_of(Rational(j3.twice() + 1));
}

namespace {

// Triangle factor Delta(abc) as the rational under the square root.
Rational triangle_rational(const HalfInt& a, const HalfInt& b, const HalfInt& c) {
    return Rational(fact2(a.twice() + b.twice() - c.twice()) * fact2(a.twice() - b.twice() + c.twice()) *
                        fact2(-a.twice() + b.twice() + c.twice()),
                    fact2(a.twice() + b.twice() + c.twice() + 2));
}

}  // namespace

ExactReal six_j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& j4,
                const HalfInt& j5, const HalfInt& j6) {
    for (const HalfInt* j : {&j1, &j2, &j3, &j4, &j5, &j6}) require_magnitude(*j, "six_j");
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) || !triangle_ok(j4, j2, j6) ||
        !triangle_ok(j4, j5, j3))
        return ExactReal();

    const Rational pref = triangle_rational(j1, j2, j3) * triangle_rational(j1, j5, j6) *
                          triangle_rational(j4, j2, j6) * triangle_rational(j4, j5, j3);

    const int t1 = (j1.twice() + j2.twice() + j3.twice()) / 2;
    const int t2 = (j1.twice() + j5.twice() + j6.twice()) / 2;
    const int t3 = (j4.twice() + j2.twice() + j6.twice()) / 2;
    const int t4 = (j4.twice() + j5.twice() + j3.twice()) / 2;
    const int q1 = (j1.twice() + j2.twice() + j4.twice() + j5.twice()) / 2;
    const int q2 = (j2.twice() + j3.twice() + j5.twice() + j6.twice()) / 2;
    const int q3 = (j3.twice() + j1.twice() + j6.twice() + j4.twice()) / 2;

    Rational sum = 0;
    for (int t = std::max({t1, t2, t3, t4}); t <= std::min({q1, q2, q3}); ++t) {
        const Integer den = factorial_int(t - t1) * factorial_int(t - t2) * factorial_int(t - t3) *
                            factorial_int(t - t4) * factorial_int(q1 - t) * factorial_int(q2 - t) *
                            factorial_int(q3 - t);
        const Rational term(factorial_int(t + 1), den);
        sum += (t % 2 == 0) ? term : -term;
    }
    return ExactReal(sum) * ExactReal::sqrt_of(pref);
}

ExactReal racah_w(const HalfInt& a, const HalfInt& b, const HalfInt& c, const HalfInt& d,
                  const HalfInt& e, const HalfInt& f) {
    for (const HalfInt* j : {&a, &b, &c, &d, &e, &f}) require_magnitude(*j, "racah_w");
    if (!triangle_ok(a, b, e) || !triangle_ok(c, d, e) || !triangle_ok(a, c, f) || !triangle_ok(b, d, f))
        return ExactReal();
    // W(abcd; ef) = (-1)^(a+b+c+d) {a b e; d c f}
    const int twice_sum = a.twice() + b.twice() + c.twice() + d.twice();
    return phase(twice_sum / 2) * six_j(a, b, e, d, c, f);
}

ExactReal nine_j(const HalfInt& j1, const HalfInt& j2, const HalfInt& j3, const HalfInt& j4,
                 const HalfInt& j5, const HalfInt& j6, const HalfInt& j7, const HalfInt& j8,
                 const HalfInt& j9) {
    for (const HalfInt* j : {&j1, &j2, &j3, &j4, &j5, &j6, &j7, &j8, &j9})
        require_magnitude(*j, "nine_j");
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j4, j5, j6) || !triangle_ok(j7, j8, j9) ||
        !triangle_ok(j1, j4, j7) || !triangle_ok(j2, j5, j8) || !triangle_ok(j3, j6, j9))
        return ExactReal();
    const int lo = std::max(std::abs(j1.twice() - j9.twice()), std::abs(j2.twice() - j6.twice()));
    const int hi = std::min(j1.twice() + j9.twice(), j2.twice() + j6.twice());
    RadicalSum sum;
    for (int tx = lo; tx <= hi; ++tx) {
        const HalfInt x(tx);
        const ExactReal term = six_j(j1, j2, j3, j6, j9, x) * six_j(j4, j5, j6, j2, x, j8) *
                               six_j(j7, j8, j9, x, j1, j4);
        if (term.is_zero()) continue;
        // (-1)^(2x) (2x+1)
        ExactReal weighted = ExactReal(Rational(tx + 1)) * term;
        if (tx % 2 != 0) weighted = -weighted;
        sum += weighted;
    }
    return sum.is_zero() ? ExactReal() : sum.as_exact_real();
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CRational(1);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CRational& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CRational& bkj = o(k, j);
                if (!bkj.is_zero()) r(i, j) = r(i, j) + aik * bkj;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::scaled(const CRational& c) const {
    ExactMatrix r(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) r.a_[i] = a_[i] * c;
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    ExactMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if ((*this)(i, j).is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q)
                    r(i * o.rows_ + p, j * o.cols_ + q) = (*this)(i, j) * o(p, q);
        }
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m(i, j) = std::complex<double>((*this)(i, j).real_double(), (*this)(i, j).imag_double());
    return m;
}

namespace {

std::array<ExactMatrix, 3> pauli_exact() {
    std::array<ExactMatrix, 3> s{ExactMatrix(2, 2), ExactMatrix(2, 2), ExactMatrix(2, 2)};
    s[0](0, 1) = CRational(1);
    s[0](1, 0) = CRational(1);
    s[1](0, 1) = -CRational::i();
    s[1](1, 0) = CRational::i();
    s[2](0, 0) = CRational(1);
    s[2](1, 1) = -CRational(1);
    return s;
}

void check_cap(int n_spins, const char* what) {
    if (n_spins < 1) throw std::invalid_argument(std::string(what) + ": need at least one spin");
    long long dim = 1;
    for (int i = 0; i < n_spins; ++i) {
        dim *= 2;
        if (dim > dimension_cap())
            throw std::invalid_argument(std::string(what) + ": 2^N exceeds the dimension cap");
    }
}

}  // namespace

std::array<ExactMatrix, 3> total_spin_operators_exact(int n_spins) {
    check_cap(n_spins, "total_spin_operators");
    const auto s = pauli_exact();
    const int dim = 1 << n_spins;
    std::array<ExactMatrix, 3> total{ExactMatrix(dim, dim), ExactMatrix(dim, dim), ExactMatrix(dim, dim)};
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a < n_spins; ++a) {
            ExactMatrix term = ExactMatrix::identity(1);
            for (int b = 0; b < n_spins; ++b)
                term = term.kron(b == a ? s[i].scaled(CRational(Rational(1, 2))) : ExactMatrix::identity(2));
            total[i] = total[i] + term;
        }
    }
    return total;
}

std::array<Eigen::MatrixXcd, 3> total_spin_operators(int n_spins) {
    const auto exact = total_spin_operators_exact(n_spins);
    return {exact[0].to_complex(), exact[1].to_complex(), exact[2].to_complex()};
}

Integer spin_multiplicity(int n_spins, const HalfInt& s) {
    if ((n_spins - s.twice()) % 2 != 0 || s.twice() < 0 || s.twice() > n_spins) return 0;
    const int k = (n_spins - s.twice()) / 2;
    return binomial_int(n_spins, k) - binomial_int(n_spins, k - 1);
}

Decomposition decompose_product(int n_spins) {
    check_cap(n_spins, "decompose_product");

    // One multiplet: the chain of intermediate spins and, for every
    // projection m (descending), the exact expansion over product states.
    struct Multiplet {
        std::vector<int> chain;  // twice-spin after each coupling step
        int twice_k;
        std::vector<std::map<int, ExactReal>> states;  // indexed by (k - m)
    };

    std::vector<Multiplet> mults;
    {
        Multiplet seed;
        seed.twice_k = 1;
        seed.states.resize(2);
        seed.states[0][0] = ExactReal(1);  // m = +1/2 is bit 0
        seed.states[1][1] = ExactReal(1);
        mults.push_back(std::move(seed));
    }

    const HalfInt half(1);
    for (int t = 2; t <= n_spins; ++t) {
        std::vector<Multiplet> next;
        for (const Multiplet& mu : mults) {
            const HalfInt k(mu.twice_k);
            for (int tk_new : {mu.twice_k + 1, mu.twice_k - 1}) {
                if (tk_new < 0) continue;
                Multiplet out;
                out.chain = mu.chain;
                out.chain.push_back(tk_new);
                out.twice_k = tk_new;
                const HalfInt kn(tk_new);
                out.states.resize(tk_new + 1);
                for (int tm_new = tk_new; tm_new >= -tk_new; tm_new -= 2) {
                    std::map<int, ExactReal>& target = out.states[(tk_new - tm_new) / 2];
                    for (int ts = -1; ts <= 1; ts += 2) {
                        const int tm_old = tm_new - ts;
                        if (std::abs(tm_old) > mu.twice_k) continue;
                        const ExactReal cg =
                            clebsch_gordan(k, half, kn, HalfInt(tm_old), HalfInt(ts), HalfInt(tm_new));
                        if (cg.is_zero()) continue;
                        const int bit = (ts > 0) ? 0 : 1;
                        const auto& src = mu.states[(mu.twice_k - tm_old) / 2];
                        for (const auto& [idx, amp] : src) {
                            const int nidx = (idx << 1) | bit;
                            auto it = target.find(nidx);
                            if (it == target.end())
                                target.emplace(nidx, amp * cg);
                            else
                                it->second = it->second + amp * cg;
                        }
                    }
                }
                next.push_back(std::move(out));
            }
        }
        mults = std::move(next);
    }

    Decomposition dec;
    dec.n_spins = n_spins;
    const int dim = 1 << n_spins;
    dec.c = Eigen::MatrixXd::Zero(dim, dim);
    dec.exact_columns.resize(dim);

    // Blocks in descending s; multiplicity copies in construction order.
    int col = 0;
    for (int ts = n_spins; ts >= 0; ts -= 2) {
        int multiplicity = 0;
        for (const Multiplet& mu : mults) {
            if (mu.twice_k != ts) continue;
            ++multiplicity;
            for (int tm = ts; tm >= -ts; tm -= 2) {
                ChainLabel label;
                label.twice_intermediate = mu.chain;
                label.twice_s = ts;
                label.twice_sigma = tm;
                dec.columns.push_back(label);
                const auto& expansion = mu.states[(ts - tm) / 2];
                dec.exact_columns[col] = expansion;
                for (const auto& [idx, amp] : expansion) dec.c(idx, col) = amp.to_double();
                ++col;
            }
        }
        if (multiplicity > 0) dec.blocks.push_back(BlockSpec{ts, multiplicity, ts + 1});
    }
    return dec;
}

DemocraticBasis democratic_coupling() {
    const auto s = pauli_exact();
    const ExactMatrix id2 = ExactMatrix::identity(2);
    std::array<ExactMatrix, 3> A, B, C;
    for (int i = 0; i < 3; ++i) {
        const ExactMatrix half_s = s[i].scaled(CRational(Rational(1, 2)));
        A[i] = half_s.kron(id2).kron(id2);
        B[i] = id2.kron(half_s).kron(id2);
        C[i] = id2.kron(id2).kron(half_s);
    }
    ExactMatrix K(8, 8);
    static const int eps[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int i = 0; i < 3; ++i) {
        K = K + A[eps[i][0]] * B[eps[i][1]] * C[i] - A[eps[i][1]] * B[eps[i][0]] * C[i];
    }

    const auto spin = total_spin_operators(3);
    Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(8, 8);
    for (int i = 0; i < 3; ++i) s2 += spin[i] * spin[i];
    const Eigen::MatrixXcd kc = K.to_complex();

    // Distinct (k, s, sigma) triples separate under this combination.
    const Eigen::MatrixXcd combo = kc + s2 + spin[2] / 7.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(combo);

    DemocraticBasis basis;
    basis.k_matrix = kc;
    const ExactReal kappa = ExactReal::sqrt_of(Rational(3, 16));
    for (int i = 0; i < 8; ++i) {
        DemocraticVector dv;
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        // Deterministic phase: largest component positive real.
        int imax = 0;
        for (int r = 1; r < 8; ++r)
            if (std::abs(v(r)) > std::abs(v(imax))) imax = r;
        v *= std::abs(v(imax)) / v(imax);
        dv.vec = v;
        const double kv = (v.adjoint() * kc * v)(0).real();
        const double s2v = (v.adjoint() * s2 * v)(0).real();
        const double s3v = (v.adjoint() * spin[2] * v)(0).real();
        if (std::abs(kv) < 1e-9)
            dv.k = ExactReal();
        else
            dv.k = kv > 0 ? kappa : -kappa;
        dv.twice_s = static_cast<int>(std::lround(std::sqrt(4.0 * s2v + 1.0) - 1.0));
        dv.twice_sigma = static_cast<int>(std::lround(2.0 * s3v));
        basis.vectors.push_back(std::move(dv));
    }
    // Order: descending s, then descending k, then descending sigma.
    std::sort(basis.vectors.begin(), basis.vectors.end(), [](const auto& a, const auto& b) {
        if (a.twice_s != b.twice_s) return a.twice_s > b.twice_s;
        if (a.k.to_double() != b.k.to_double()) return a.k.to_double() > b.k.to_double();
        return a.twice_sigma > b.twice_sigma;
    });
    return basis;
}

CouplingCounts coupling_counts(int n_spins) {
    if (n_spins < 2) throw std::invalid_argument("coupling_counts: need at least two spins");
    CouplingCounts counts;
    counts.a = binomial_int(2 * n_spins - 2, n_spins - 1) / n_spins;
    counts.c = factorial_int(n_spins) * counts.a;
    counts.d = double_factorial_int(2 * n_spins - 3);
    return counts;
}

}  // namespace angular
}  // namespace orbitrep
