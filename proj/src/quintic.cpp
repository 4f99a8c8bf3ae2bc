#include "quintic/quintic_theta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "quintic/products.hpp"

namespace quintic {

namespace {

Rational ceil_rat(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
}

// exact monomial q^(num/D), known well past M
QSeries mono(long num, int D, const Rational& M) {
    Rational kb = ceil_rat(M * D) + 1;
    return QSeries::monomial(FieldElement(1), num, D, kb.get_num().get_si() - num);
}

QSeries A_product(const Rational& M) {
    QSeries num = mono(1, 5, M) * eta_power(2, 5, 1, M);
    QSeries den = pochhammer_inf(2, 5, M) * pochhammer_inf(3, 5, M);
    return num * den.inverted();
}

QSeries B_product(const Rational& M) {
    QSeries den = pochhammer_inf(1, 5, M) * pochhammer_inf(4, 5, M);
    return eta_power(2, 5, 1, M) * den.inverted();
}

QSeries A_sum(const Rational& M) {
    QSeries f = ramanujan_f(FieldElement(-1), 1, FieldElement(-1), 4, M);
    return mono(1, 5, M) * f * eta_power(-3, 5, 1, M);
}

QSeries B_sum(const Rational& M) {
    return ramanujan_f(FieldElement(-1), 2, FieldElement(-1), 3, M) * eta_power(-3, 5, 1, M);
}

// C and D via the bilateral sums with phase e^(k pi i/5), k = 3 resp. 1.
QSeries CD_sum(int k, const Rational& M) {
    FieldElement ph = exp_pi_i(Rational(k, 5));
    QSeries f = ramanujan_f(ph, 0, ph.conj(), 1, M);
    FieldElement norm = (FieldElement(1) + ph).inverse();
    return f * eta_power(-3, 5, 5, M) * norm;
}

// C and D via products over (1 + 2cos(k pi/5) q^n + q^2n) factors.
QSeries CD_product(int k, const Rational& M) {
    FieldElement ph = exp_pi_i(Rational(k, 5));
    QSeries p = pochhammer_inf({-ph, 1, 1}, M) * pochhammer_inf({-ph.conj(), 1, 1}, M) *
                pochhammer_inf(1, 1, M);
    return p * eta_power(-3, 5, 5, M);
}

QSeries CD_primary(bool is_C, const Rational& M) {
    // build A, B just far enough that the q -> q^5 substitution covers M
    Rational m5 = ceil_rat(M / 5) + 1;
    QSeries a5 = theta_A(m5).subst_power(5);
    QSeries b5 = theta_B(m5).subst_power(5);
    FieldElement r = field_constant(is_C ? "alpha" : "beta");
    return (b5 - a5 * r).truncated(M);
}

std::mutex cache_mu;
std::map<std::pair<int, Rational>, QSeries> cache;

QSeries memoized(int tag, const Rational& order, QSeries (*build)(const Rational&)) {
    std::pair<int, Rational> key{tag, order};
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QSeries s = build(order);
    std::lock_guard<std::mutex> lk(cache_mu);
    return cache.emplace(std::move(key), std::move(s)).first->second;
}

}  // namespace

QSeries theta_series(Theta which, SeriesForm form, const Rational& order) {
    switch (which) {
        case Theta::A:
            return form == SeriesForm::sum ? A_sum(order) : A_product(order);
        case Theta::B:
            return form == SeriesForm::sum ? B_sum(order) : B_product(order);
        case Theta::C:
            if (form == SeriesForm::sum) return CD_sum(3, order);
            if (form == SeriesForm::product) return CD_product(3, order);
            return CD_primary(true, order);
        case Theta::D:
            if (form == SeriesForm::sum) return CD_sum(1, order);
            if (form == SeriesForm::product) return CD_product(1, order);
            return CD_primary(false, order);
    }
    throw std::logic_error("theta_series: bad enum");
}

QSeries theta_A(const Rational& order) { return memoized(0, order, A_product); }
QSeries theta_B(const Rational& order) { return memoized(1, order, B_product); }
QSeries theta_C(const Rational& order) {
    return memoized(2, order, +[](const Rational& M) { return CD_primary(true, M); });
}
QSeries theta_D(const Rational& order) {
    return memoized(3, order, +[](const Rational& M) { return CD_primary(false, M); });
}

QSeries pochhammer_fin(long n, const Rational& order) {
    long kb = Rational(ceil_rat(order)).get_num().get_si();
    std::vector<FieldElement> c(static_cast<size_t>(std::max(kb, 1L)));
    c[0] = FieldElement(1);
    for (long k = 1; k <= n; ++k) {
        if (k >= kb) break;  // remaining factors are 1 + O(q^order)
        for (long j = kb - 1; j >= k; --j)
            c[static_cast<size_t>(j)] -= c[static_cast<size_t>(j - k)];
    }
    return QSeries::make(1, 0, std::move(c));
}

QSeries rogers_ramanujan(RR which, SeriesForm form, const Rational& order) {
    bool is_G = which == RR::G;
    if (form == SeriesForm::sum) {
        long kb = Rational(ceil_rat(order)).get_num().get_si();
        QSeries acc = QSeries::zero(1, kb);
        for (long n = 0;; ++n) {
            long e = is_G ? n * n : n * n + n;
            if (e >= kb) break;
            QSeries term = QSeries::monomial(FieldElement(1), e, 1, kb - e) *
                           pochhammer_fin(n, order).inverted();
            acc = acc + term.truncated(order);
        }
        return acc;
    }
    QSeries den = is_G ? pochhammer_inf(1, 5, order) * pochhammer_inf(4, 5, order)
                       : pochhammer_inf(2, 5, order) * pochhammer_inf(3, 5, order);
    return den.inverted();
}

QSeries rr_continued_fraction(const Rational& order) {
    QSeries num = pochhammer_inf(1, 5, order) * pochhammer_inf(4, 5, order);
    QSeries den = pochhammer_inf(2, 5, order) * pochhammer_inf(3, 5, order);
    return mono(1, 5, order) * num * den.inverted();
}

}  // namespace quintic
