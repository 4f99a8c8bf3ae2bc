#include "quintic/pentops.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "quintic/eisenstein.hpp"
#include "quintic/quintic_theta.hpp"

namespace quintic {

namespace {

Rational ceil_rat(const Rational& x) {
    Int q;
    Rational t = x;
    mpz_cdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return Rational(q);
}

using Comp5 = std::array<long, 5>;

// all ordered nonnegative 5-part compositions of n
std::vector<Comp5> compositions5(long n) {
    std::vector<Comp5> out;
    for (long a = 0; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b)
            for (long c = 0; a + b + c <= n; ++c)
                for (long d = 0; a + b + c + d <= n; ++d)
                    out.push_back({a, b, c, d, n - a - b - c - d});
    return out;
}

long f_of(const Comp5& n) { return 5 * n[0] + 4 * n[1] + 3 * n[2] + 2 * n[3] + n[4]; }
long g_of(const Comp5& n) { return n[1] + 2 * n[2] + 3 * n[3] + 4 * n[4]; }

Int multinomial(long n, const Comp5& parts) {
    Int result = 1, binom;
    long rem = n;
    for (int i = 0; i < 5; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(rem),
                     static_cast<unsigned long>(parts[i]));
        result *= binom;
        rem -= parts[i];
    }
    return result;
}

}  // namespace

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(rows, o.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (cols != static_cast<long>(v.size()))
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    std::vector<Int> out(static_cast<size_t>(rows));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

IntMatrix IntMatrix::pow(long e) const {
    if (rows != cols) throw std::invalid_argument("IntMatrix::pow: not square");
    if (e < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(rows), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Int IntMatrix::det() const {
    if (rows != cols) throw std::invalid_argument("IntMatrix::det: not square");
    long n = rows;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            long p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::vector<Rational> IntMatrix::solve(const std::vector<Rational>& v) const {
    if (rows != cols || rows != static_cast<long>(v.size()))
        throw std::invalid_argument("IntMatrix::solve: dimension mismatch");
    long n = rows;
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n + 1)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) m[i][j] = Rational(at(i, j));
        m[i][static_cast<size_t>(n)] = v[static_cast<size_t>(i)];
    }
    for (long k = 0; k < n; ++k) {
        long p = k;
        while (p < n && m[p][static_cast<size_t>(k)] == 0) ++p;
        if (p == n) throw std::domain_error("IntMatrix::solve: singular matrix");
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(p)]);
        Rational piv = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (long j = k; j <= n; ++j) m[static_cast<size_t>(k)][static_cast<size_t>(j)] /= piv;
        for (long i = 0; i < n; ++i) {
            if (i == k) continue;
            Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (f == 0) continue;
            for (long j = k; j <= n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    Rational(f * m[static_cast<size_t>(k)][static_cast<size_t>(j)]);
        }
    }
    std::vector<Rational> x(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) x[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(n)];
    return x;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix pent_array(long d) {
    if (d < 1) throw std::invalid_argument("pent_array: d >= 1 required");
    IntMatrix m(5 * d + 1, d + 1);
    for (long k = 0; k <= d; ++k) {
        auto js = compositions5(d - k);
        auto ks = compositions5(k);
        for (const Comp5& kv : ks) {
            Int kmult = multinomial(k, kv);
            int sign = ((kv[1] + kv[3]) % 2 == 0) ? 1 : -1;
            for (const Comp5& jv : js) {
                long r = g_of(jv) + f_of(kv);
                Int term = kmult * multinomial(d - k, jv);
                Int p;
                mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(jv[3] + kv[3]));
                term *= p;
                mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(jv[1] + kv[1]));
                term *= p;
                mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(jv[2] + kv[2]));
                term *= p;
                if (sign < 0) term = -term;
                m.at(r, k) += term;
            }
        }
    }
    return m;
}

IntMatrix hecke_matrix(long d) {
    IntMatrix b = pent_array(d);
    IntMatrix m(d + 1, d + 1);
    for (long i = 0; i <= d; ++i)
        for (long j = 0; j <= d; ++j) m.at(i, j) = b.at(5 * i, j);
    return m;
}

MixedPoly pentamidiate_poly(const HomPoly& p) {
    long d = p.degree();
    IntMatrix b = pent_array(d);
    MixedPoly out;
    out.b.assign(static_cast<size_t>(5 * d + 1), FieldElement(0));
    for (long r = 0; r <= 5 * d; ++r)
        for (long k = 0; k <= d; ++k) {
            const Int& e = b.at(r, k);
            if (e != 0)
                out.b[static_cast<size_t>(r)] += p.c[static_cast<size_t>(k)] * FieldElement(Rational(e));
        }
    return out;
}

MixedRestriction omega_poly(const HomPoly& p, long m) {
    if (m < 0 || m > 4) throw std::invalid_argument("omega_poly: m must be 0..4");
    MixedPoly mp = pentamidiate_poly(p);
    MixedRestriction out;
    out.m = m;
    for (long r = m; r <= mp.degree5(); r += 5) out.b.push_back(mp.b[static_cast<size_t>(r)]);
    return out;
}

namespace {

// sum_k coeff[k] * X^k * Y^(n-k) with two incremental power ladders
QSeries bihom_series(const std::vector<FieldElement>& coeff, const QSeries& X, const QSeries& Y,
                     const Rational& order, int grid) {
    long n = static_cast<long>(coeff.size()) - 1;
    Rational big = ceil_rat(order) + 2;
    long kb = Rational(big * grid).get_num().get_si();
    std::vector<QSeries> xp;
    QSeries xpow = QSeries::one(kb, grid);
    for (long k = 0; k <= n; ++k) {
        xp.push_back(xpow);
        if (k < n) xpow = (xpow * X).truncated(order);
    }
    QSeries acc = QSeries::zero(grid, kb);
    QSeries ypow = QSeries::one(kb, grid);
    for (long k = n; k >= 0; --k) {
        if (!(coeff[static_cast<size_t>(k)] == FieldElement(0)))
            acc = acc + xp[static_cast<size_t>(k)] * ypow * coeff[static_cast<size_t>(k)];
        if (k > 0) ypow = (ypow * Y).truncated(order);
    }
    return acc.truncated(order);
}

}  // namespace

QSeries hompoly_series(const HomPoly& p, const Rational& order) {
    return bihom_series(p.c, theta_A5(order), theta_B5(order), order, 1);
}

QSeries mixedpoly_series(const MixedPoly& p, const Rational& order) {
    return bihom_series(p.b, theta_A(order), theta_B(order), order, 5);
}

QSeries restriction_series(const MixedRestriction& p, long degree5, const Rational& order) {
    // embed the sparse coefficients into the full mixed array, then shift
    std::vector<FieldElement> full(static_cast<size_t>(degree5 + 1), FieldElement(0));
    for (size_t k = 0; k < p.b.size(); ++k) full[5 * k + static_cast<size_t>(p.m)] = p.b[k];
    QSeries s = bihom_series(full, theta_A(order + 1), theta_B(order + 1), order + 1, 5);
    long kb = Rational((ceil_rat(order) + 2) * 5).get_num().get_si();
    QSeries shift = QSeries::monomial(FieldElement(1), -p.m, 5, kb + p.m);  // q^(-m/5)
    return (s * shift).truncated(order);
}

IdentityReport pentamidiate_series_check(const HomPoly& p, const Rational& order) {
    // matrix route, substituted back to q -> q^5 so both sides live on the
    // integer grid: hompoly(q) must equal mixed(q^5) exactly
    MixedPoly mp = pentamidiate_poly(p);
    Rational m5 = ceil_rat(order / 5) + 1;
    QSeries direct = hompoly_series(p, order);
    QSeries matrix_route = mixedpoly_series(mp, m5).subst_power(5).truncated(order);
    return compare_series("pentamidiate-series-check",
                          "matrix route for q -> q^(1/5) equals the direct series route", direct,
                          matrix_route, order);
}

std::pair<QSeries, QSeries> penticate(const QSeries& A_ser, const QSeries& B_ser,
                                      const Rational& order) {
    FieldElement alpha = field_constant("alpha"), beta = field_constant("beta");
    QSeries a5 = A_ser.pow_int(5).truncated(order), b5 = B_ser.pow_int(5).truncated(order);
    QSeries X = (b5 - a5 * alpha.pow(5)).nth_root(5);
    QSeries Y = (b5 - a5 * beta.pow(5)).nth_root(5);
    FieldElement den = (beta - alpha).inverse();
    QSeries C = (X - Y) * den;
    QSeries D = (X * beta - Y * alpha) * den;
    return {C.truncated(order), D.truncated(order)};
}

std::pair<QSeries, QSeries> change_of_sign(long k, const Rational& order) {
    Rational m5 = ceil_rat(order / 5) + 1;
    QSeries a5 = theta_A(m5).subst_power(5);
    QSeries b5 = theta_B(m5).subst_power(5);
    FieldElement xi = zeta_pow((4 * ((k % 5 + 5) % 5)) % 20);
    QSeries C = (b5 - a5 * (field_constant("alpha") * xi)).truncated(order);
    QSeries D = (b5 - a5 * (field_constant("beta") * xi)).truncated(order);
    return {C, D};
}

}  // namespace quintic
