#include "quintic/qseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quintic {

namespace {

long ceil_div(long a, long k) {  // k > 0
    return a >= 0 ? (a + k - 1) / k : -((-a) / k);
}

// Smallest integer >= a*b (exclusive-bound helper: #{n : n < a/b} on grid).
long ceil_rational(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("QSeries: exponent bound too large");
    return q.get_si();
}

}  // namespace

void QSeries::trim() {
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k > 0) {
        v_ += static_cast<long>(k);
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    }
}

QSeries QSeries::zero(int grid, long known_numerators) {
    QSeries r;
    r.D_ = grid;
    r.v_ = known_numerators;  // zero through q^(known/grid), nothing stored
    return r;
}

QSeries QSeries::one(long order_terms, int grid) {
    return monomial(FieldElement(1), 0, grid, order_terms);
}

QSeries QSeries::monomial(const FieldElement& c, long num, int grid, long known_len) {
    QSeries r;
    r.D_ = grid;
    r.v_ = num;
    r.c_.assign(static_cast<size_t>(std::max(known_len, 1L)), FieldElement());
    r.c_[0] = c;
    r.trim();
    return r;
}

QSeries QSeries::make(int grid, long val, std::vector<FieldElement> coeffs) {
    QSeries r;
    r.D_ = grid;
    r.v_ = val;
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

bool QSeries::known_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Rational> QSeries::lowest_nonzero() const {
    for (long j = 0; j < size(); ++j)
        if (!c_[j].is_zero()) {
            Rational e(v_ + j, D_);
            e.canonicalize();
            return e;
        }
    return std::nullopt;
}

FieldElement QSeries::leading_coeff() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return x;
    throw std::domain_error("leading_coeff of a series with no known nonzero term");
}

FieldElement QSeries::coeff_at(const Rational& e) const {
    if (e >= known_order())
        throw std::out_of_range("coeff_at(" + rat_str(e) + "): known only below " +
                                rat_str(known_order()));
    Rational t = e * D_;
    if (t.get_den() != 1) return FieldElement();  // off-grid exponents vanish
    if (!t.get_num().fits_slong_p()) return FieldElement();
    long n = t.get_num().get_si();
    if (n < v_) return FieldElement();
    return c_[static_cast<size_t>(n - v_)];
}

QSeries QSeries::on_grid(int new_grid) const {
    if (new_grid == D_) return *this;
    if (new_grid % D_ != 0)
        throw std::invalid_argument("on_grid: " + std::to_string(new_grid) +
                                    " is not a multiple of " + std::to_string(D_));
    long m = new_grid / D_;
    QSeries r;
    r.D_ = new_grid;
    r.v_ = v_ * m;
    r.c_.assign(static_cast<size_t>(size() * m), FieldElement());
    for (long j = 0; j < size(); ++j) r.c_[static_cast<size_t>(j * m)] = c_[j];
    return r;
}

QSeries QSeries::coarsened() const {
    if (known_zero()) {
        QSeries r;
        r.D_ = 1;
        r.v_ = known_bound_num() / D_;  // floor: conservative known range
        return r;
    }
    long g = D_;
    for (long j = 0; j < size() && g > 1; ++j)
        if (!c_[j].is_zero()) g = std::gcd(g, v_ + j);
    g = std::abs(g);
    if (g <= 1) return *this;
    QSeries r;
    r.D_ = static_cast<int>(D_ / g);
    r.v_ = v_ / g;
    long kb = known_bound_num() / g;  // floor
    r.c_.assign(static_cast<size_t>(kb - r.v_), FieldElement());
    for (long j = 0; j < size(); ++j) {
        long n = v_ + j;
        if (n % g != 0) continue;
        long idx = n / g - r.v_;
        if (idx < static_cast<long>(r.c_.size())) r.c_[static_cast<size_t>(idx)] = c_[j];
    }
    return r;
}

QSeries QSeries::pi_refine(int m) const {
    QSeries r = *this;
    r.D_ *= m;
    return r;
}

QSeries QSeries::subst_power(long k) const {
    if (k <= 0) throw std::invalid_argument("subst_power: k must be positive");
    QSeries r;
    r.D_ = D_;
    r.v_ = v_ * k;
    // Exponents between the stretched grid points are identically zero, so
    // knowledge extends through kb*k.
    r.c_.assign(static_cast<size_t>(known_bound_num() * k - r.v_), FieldElement());
    for (long j = 0; j < size(); ++j) r.c_[static_cast<size_t>(j * k)] = c_[j];
    return r.coarsened();
}

QSeries QSeries::truncated(const Rational& M) const {
    long n_excl = ceil_rational(M * D_);
    QSeries r = *this;
    if (n_excl <= v_) {
        r.c_.clear();
        r.v_ = n_excl;
        return r;
    }
    long keep = n_excl - v_;
    if (keep < size()) r.c_.resize(static_cast<size_t>(keep));
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    int D = std::lcm(D_, o.D_);
    QSeries a = on_grid(D), b = o.on_grid(D);
    QSeries r;
    r.D_ = D;
    r.v_ = std::min(a.v_, b.v_);
    long kb = std::min(a.known_bound_num(), b.known_bound_num());
    if (kb <= r.v_) {
        r.v_ = kb;
        return r;
    }
    r.c_.assign(static_cast<size_t>(kb - r.v_), FieldElement());
    for (long j = 0; j < a.size(); ++j) {
        long idx = a.v_ + j - r.v_;
        if (idx < static_cast<long>(r.c_.size())) r.c_[static_cast<size_t>(idx)] += a.c_[j];
    }
    for (long j = 0; j < b.size(); ++j) {
        long idx = b.v_ + j - r.v_;
        if (idx < static_cast<long>(r.c_.size())) r.c_[static_cast<size_t>(idx)] += b.c_[j];
    }
    r.trim();
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    int D = std::lcm(D_, o.D_);
    QSeries a = on_grid(D), b = o.on_grid(D);
    QSeries r;
    r.D_ = D;
    r.v_ = a.v_ + b.v_;
    // c_{n} needs every split n = i + j with both factors known:
    // safe exactly below min(v_a + kb_b, v_b + kb_a).
    long kb = std::min(a.v_ + b.known_bound_num(), b.v_ + a.known_bound_num());
    if (kb <= r.v_) {
        r.v_ = kb;
        return r;
    }
    long n = kb - r.v_;
    r.c_.assign(static_cast<size_t>(n), FieldElement());
    for (long i = 0; i < a.size() && i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        long jmax = std::min(b.size(), n - i);
        for (long j = 0; j < jmax; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

QSeries QSeries::operator*(const FieldElement& s) const {
    if (s.is_zero()) {
        QSeries r;
        r.D_ = D_;
        r.v_ = known_bound_num();
        return r;
    }
    QSeries r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

QSeries QSeries::inverted() const {
    if (known_zero()) throw std::domain_error("inverted: series has no known nonzero term");
    // trim() keeps c_[0] as the true leading coefficient.
    long n = size();
    QSeries r;
    r.D_ = D_;
    r.v_ = -v_;
    r.c_.assign(static_cast<size_t>(n), FieldElement());
    FieldElement inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (long j = 1; j < n; ++j) {
        FieldElement acc;
        for (long k = 1; k <= j; ++k) {
            if (c_[k].is_zero()) continue;
            acc += c_[k] * r.c_[static_cast<size_t>(j - k)];
        }
        r.c_[static_cast<size_t>(j)] = -(acc * inv0);
    }
    return r;
}

QSeries QSeries::pow_int(long e) const {
    if (e < 0) return inverted().pow_int(-e);
    if (e == 0) return one(std::max(size(), 1L), D_);
    QSeries r = one(std::max(size(), 1L), D_), b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

QSeries QSeries::pow_unit(const Rational& r) const {
    if (v_ != 0 || size() == 0 || c_[0] != FieldElement(1))
        throw std::domain_error("pow_unit: series must start with 1*q^0");
    long n = size();
    QSeries s;
    s.D_ = D_;
    s.v_ = 0;
    s.c_.assign(static_cast<size_t>(n), FieldElement());
    s.c_[0] = FieldElement(1);
    // Miller's recurrence: j*s_j = sum_{k=1}^{j} ((r+1)k - j) u_k s_{j-k}.
    for (long j = 1; j < n; ++j) {
        FieldElement acc;
        for (long k = 1; k <= j; ++k) {
            if (c_[k].is_zero()) continue;
            Rational w = (r + 1) * k - j;
            if (w == 0) continue;
            acc += FieldElement(w) * (c_[k] * s.c_[static_cast<size_t>(j - k)]);
        }
        s.c_[static_cast<size_t>(j)] = acc * FieldElement(Rational(1, j));
    }
    return s;
}

QSeries QSeries::nth_root(unsigned long n) const { return pow_rational(Rational(1, static_cast<long>(n))); }

QSeries QSeries::pow_rational(const Rational& r) const {
    if (r.get_den() == 1) {
        if (!r.get_num().fits_slong_p()) throw std::overflow_error("pow_rational: exponent too large");
        return pow_int(r.get_num().get_si());
    }
    if (known_zero()) throw std::domain_error("pow_rational: series has no known nonzero term");
    Rational ve = v_ * r;
    if (ve.get_den() != 1)
        throw std::domain_error("pow_rational: valuation " + rat_str(Rational(v_, D_)) +
                                " times exponent " + rat_str(r) + " leaves the grid");
    long new_v = ve.get_num().get_si();
    FieldElement lc = c_[0];
    FieldElement lc_num = lc.pow(r.get_num().get_si());
    auto root = nth_root_in_field(lc_num, r.get_den().get_ui());
    if (!root)
        throw std::domain_error("pow_rational: leading coefficient " + lc.str() +
                                " has no exponent-" + rat_str(r) + " power in the field");
    // Unit part u with f = lc * q^(v/D) * u.
    QSeries u;
    u.D_ = D_;
    u.v_ = 0;
    u.c_.assign(c_.size(), FieldElement());
    FieldElement inv_lc = lc.inverse();
    for (size_t j = 0; j < c_.size(); ++j) u.c_[j] = c_[j] * inv_lc;
    QSeries s = u.pow_unit(r);
    s.v_ = new_v;
    QSeries res = s * *root;
    res.trim();
    return res;
}

QSeries QSeries::theta_deriv() const {
    QSeries r = *this;
    for (long j = 0; j < r.size(); ++j) {
        Rational e(r.v_ + j, D_);
        e.canonicalize();  // mpq_class(num, den) does not reduce
        r.c_[static_cast<size_t>(j)] *= FieldElement(e);
    }
    r.trim();
    return r;
}

QSeries QSeries::multisect(long k, long m) const {
    if (k <= 0) throw std::invalid_argument("multisect: k must be positive");
    m %= k;
    if (m < 0) m += k;
    QSeries r;
    r.D_ = D_;
    long kb = ceil_div(known_bound_num() - m, k);
    long n0 = v_ + ((m - v_) % k + k) % k;  // first numerator >= v_ congruent to m
    long v0 = (n0 - m) / k;
    if (v0 >= kb) {
        r.v_ = kb;
        return r;
    }
    r.v_ = v0;
    r.c_.assign(static_cast<size_t>(kb - v0), FieldElement());
    for (long j = 0; j < static_cast<long>(r.c_.size()); ++j)
        r.c_[static_cast<size_t>(j)] = c_[static_cast<size_t>(n0 + j * k - v_)];
    r.trim();
    return r;
}

QSeries QSeries::twist(long j) const {
    if (D_ != 1) throw std::domain_error("twist: integer-grid series required");
    QSeries r = *this;
    for (long n = 0; n < r.size(); ++n)
        r.c_[static_cast<size_t>(n)] *= zeta_pow(4 * j * (v_ + n));
    r.trim();
    return r;
}

std::optional<Rational> QSeries::first_difference(const QSeries& a, const QSeries& b,
                                                  const Rational& M) {
    if (a.known_order() < M || b.known_order() < M)
        throw std::runtime_error("first_difference: series known only to " +
                                 rat_str(std::min(a.known_order(), b.known_order())) +
                                 ", comparison requested to " + rat_str(M));
    int D = std::lcm(a.D_, b.D_);
    QSeries x = a.on_grid(D), y = b.on_grid(D);
    long n_excl = ceil_rational(M * D);
    long n0 = std::min(x.v_, y.v_);
    for (long n = n0; n < n_excl; ++n) {
        FieldElement ca = (n >= x.v_ && n < x.known_bound_num())
                              ? x.c_[static_cast<size_t>(n - x.v_)]
                              : FieldElement();
        FieldElement cb = (n >= y.v_ && n < y.known_bound_num())
                              ? y.c_[static_cast<size_t>(n - y.v_)]
                              : FieldElement();
        if (ca != cb) {
            Rational e(n, D);
            e.canonicalize();
            return e;
        }
    }
    return std::nullopt;
}

std::string QSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    for (long j = 0; j < size() && shown < max_terms; ++j) {
        if (c_[j].is_zero()) continue;
        if (shown) os << " + ";
        long n = v_ + j;
        os << "(" << c_[j].str() << ")";
        if (n != 0) {
            os << "*q";
            if (n != D_ || D_ != 1) {
                os << "^";
                if (D_ == 1)
                    os << n;
                else
                    os << "(" << n << "/" << D_ << ")";
            }
        }
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^" << rat_str(known_order()) << ")";
    return os.str();
}

}  // namespace quintic
