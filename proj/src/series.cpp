#include "qrr/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.hpp"

namespace qrr {

Series Series::zero(const Rational& order) {
    return Series(1, 0, {}, order);
}

Series Series::constant(mpz_class c) {
    if (c == 0) return Series();
    return Series(1, 0, {std::move(c)}, std::nullopt);
}

Series Series::monomial(mpz_class c, const Rational& e) {
    if (c == 0) return Series();
    return Series(e.den(), e.num(), {std::move(c)}, std::nullopt);
}

Series Series::monomial(mpz_class c, const Rational& e, const Rational& order) {
    if (e > order) return zero(order);
    if (c == 0) return zero(order);
    return Series(e.den(), e.num(), {std::move(c)}, order);
}

Series Series::from_grid(long long denom, long long offset, std::vector<mpz_class> coeffs,
                         std::optional<Rational> order) {
    if (denom <= 0) throw std::invalid_argument("Series: denom must be positive");
    return Series(denom, offset, std::move(coeffs), std::move(order));
}

void Series::trim() {
    if (order_) {
        // drop everything past the inclusive truncation bound
        long long cut = cut_index(denom_, offset_, *order_);
        if (cut < 0)
            coeffs_.clear();
        else if ((long long)coeffs_.size() > cut + 1)
            coeffs_.resize(cut + 1);
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        denom_ = 1;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        offset_ += (long long)lead;
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long Series::cut_index(long long denom, long long offset, const Rational& order) {
    // largest i with (offset+i)/denom <= order
    __int128 lhs = (__int128)order.num() * denom;
    __int128 d = order.den();
    __int128 q = lhs / d;
    if (lhs % d != 0 && lhs < 0) --q;
    q -= offset;
    if (q > (long long)1 << 40) throw std::overflow_error("Series: truncation range too large");
    return (long long)q;
}

Rational Series::min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero series");
    return Rational(offset_, denom_);
}

Rational Series::max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero series");
    return Rational(offset_ + (long long)coeffs_.size() - 1, denom_);
}

mpz_class Series::coeff(const Rational& e) const {
    if (order_ && e > *order_)
        throw std::out_of_range("Series::coeff: exponent " + e.str() + " beyond order " +
                                order_->str());
    // exponent on grid?
    if (denom_ % e.den() != 0) return 0;
    long long idx = e.num() * (denom_ / e.den()) - offset_;
    if (idx < 0 || idx >= (long long)coeffs_.size()) return 0;
    return coeffs_[idx];
}

bool Series::integral_grid() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0 && (offset_ + (long long)i) % denom_ != 0) return false;
    return true;
}

std::vector<std::pair<Rational, mpz_class>> Series::terms() const {
    std::vector<std::pair<Rational, mpz_class>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(Rational(offset_ + (long long)i, denom_), coeffs_[i]);
    return out;
}

Series Series::truncated(const Rational& order) const {
    std::optional<Rational> ord = order_ ? min(*order_, order) : order;
    return Series(denom_, offset_, coeffs_, ord);
}

Series Series::shifted(const Rational& e) const {
    long long d = lcm_ll(denom_, e.den());
    Series r = rescaled(d);
    r.offset_ += e.num() * (d / e.den());
    if (r.order_) r.order_ = *r.order_ + e;
    r.trim();
    return r;
}

Series Series::rescaled(long long new_denom) const {
    if (new_denom == denom_) return *this;
    long long f = new_denom / denom_;
    std::vector<mpz_class> c;
    if (!coeffs_.empty()) {
        c.resize((coeffs_.size() - 1) * f + 1);
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i * f] = coeffs_[i];
    }
    Series r(new_denom, offset_ * f, std::move(c), order_);
    return r;
}

Series Series::normalized() const {
    if (is_zero()) {
        Series r;
        r.order_ = order_;
        return r;
    }
    long long g = denom_;
    for (size_t i = 0; i < coeffs_.size() && g > 1; ++i)
        if (coeffs_[i] != 0) g = std::gcd(g, std::llabs(offset_ + (long long)i));
    if (g <= 1) return *this;
    std::vector<mpz_class> c((coeffs_.size() - 1) / g + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) c[i / g] = coeffs_[i];
    return Series(denom_ / g, offset_ / g, std::move(c), order_);
}

Series operator+(const Series& a, const Series& b) {
    long long d = lcm_ll(a.denom_, b.denom_);
    Series x = a.rescaled(d), y = b.rescaled(d);
    std::optional<Rational> ord;
    if (x.order_ && y.order_)
        ord = min(*x.order_, *y.order_);
    else if (x.order_)
        ord = x.order_;
    else if (y.order_)
        ord = y.order_;
    long long off = std::min(x.coeffs_.empty() ? 0 : x.offset_, y.coeffs_.empty() ? 0 : y.offset_);
    long long hi = off;
    if (!x.coeffs_.empty()) hi = std::max(hi, x.offset_ + (long long)x.coeffs_.size());
    if (!y.coeffs_.empty()) hi = std::max(hi, y.offset_ + (long long)y.coeffs_.size());
    std::vector<mpz_class> c(hi - off);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) c[x.offset_ - off + i] = x.coeffs_[i];
    for (size_t i = 0; i < y.coeffs_.size(); ++i) c[y.offset_ - off + i] += y.coeffs_[i];
    return Series(d, off, std::move(c), ord);
}

Series Series::operator-() const {
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Series(denom_, offset_, std::move(c), order_);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    // an exact zero annihilates even the unknown tail of the other factor
    if ((a.is_zero() && a.is_polynomial()) || (b.is_zero() && b.is_polynomial())) return Series();

    // Order of the product: the unknown tail of one factor first shows up at
    // its order plus the lowest exponent of the other factor.
    std::optional<Rational> ord;
    auto consider = [&ord](const std::optional<Rational>& of, const Series& g) {
        if (!of) return;
        Rational alpha = g.is_zero() ? *g.order() : g.min_exponent();
        Rational cand = *of + alpha;
        if (!ord || cand < *ord) ord = cand;
    };
    consider(a.order_, b);
    consider(b.order_, a);

    if (a.is_zero() || b.is_zero()) return Series(1, 0, {}, ord);

    long long d = lcm_ll(a.denom_, b.denom_);
    Series x = a.rescaled(d), y = b.rescaled(d);
    long long off = x.offset_ + y.offset_;
    long long len = (long long)x.coeffs_.size() + (long long)y.coeffs_.size() - 1;
    if (ord) {
        long long cut = Series::cut_index(d, off, *ord);
        if (cut < 0) return Series(d, off, {}, ord);
        len = std::min(len, cut + 1);
    }
    std::vector<mpz_class> c(len);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        long long jmax = std::min((long long)y.coeffs_.size(), len - (long long)i);
        const mpz_class& xi = x.coeffs_[i];
        for (long long j = 0; j < jmax; ++j) {
            if (y.coeffs_[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), xi.get_mpz_t(), y.coeffs_[j].get_mpz_t());
        }
    }
    return Series(d, off, std::move(c), ord);
}

Series Series::inverse() const {
    if (is_zero()) throw non_unit_error("inverse of (possibly truncated) zero series");
    const mpz_class& lead = coeffs_.front();
    if (lead != 1 && lead != -1)
        throw non_unit_error("inverse requires leading coefficient +-1, got " + lead.get_str() +
                             " at q^" + min_exponent().str());
    Rational alpha = min_exponent();
    if (coeffs_.size() == 1) {
        // exact monomial: (c q^a)^{-1} = c q^{-a}
        std::optional<Rational> ord;
        if (order_) ord = *order_ - alpha - alpha;
        return Series(denom_, -offset_, {lead}, ord);
    }
    if (!order_)
        throw std::logic_error(
            "inverse of a multi-term polynomial needs a finite truncation order; "
            "call truncated() first");
    // u = lead * q^{-alpha} * f is a unit power series on the same grid;
    // invert it by the standard recurrence, then undo the prefactor. The
    // result is exact over the full tracked span of f, which can extend past
    // the last stored (nonzero) coefficient.
    long long span = cut_index(denom_, offset_, *order_) + 1;
    long long n = (long long)coeffs_.size();
    std::vector<mpz_class> v(span);
    v[0] = 1;
    for (long long i = 1; i < span; ++i) {
        mpz_class s;
        long long jmax = std::min(i, n - 1);
        for (long long j = 1; j <= jmax; ++j) {
            if (coeffs_[j] == 0 || v[i - j] == 0) continue;
            mpz_addmul(s.get_mpz_t(), coeffs_[j].get_mpz_t(), v[i - j].get_mpz_t());
        }
        if (lead == 1)
            v[i] = -s;
        else
            v[i] = s;  // dividing the recurrence by lead = -1 twice
    }
    if (lead == -1)
        for (auto& cv : v) cv = -cv;
    Rational ord = *order_ - alpha - alpha;
    return Series(denom_, -offset_, std::move(v), ord);
}

Series Series::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Series acc = Series::one();
    Series base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Series::operator==(const Series& o) const {
    Series a = normalized(), b = o.normalized();
    return a.denom_ == b.denom_ && a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_ &&
           a.order_ == b.order_;
}

std::string Series::str(size_t max_terms) const {
    std::ostringstream os;
    auto ts = terms();
    if (ts.empty()) os << "0";
    size_t shown = 0;
    for (const auto& [e, c] : ts) {
        if (shown == max_terms) {
            os << " + ...";
            break;
        }
        if (shown == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class ac = abs(c);
        bool unit = ac == 1;
        if (!unit || e.is_zero()) os << ac.get_str();
        if (!e.is_zero()) {
            if (!unit) os << "*";
            os << "q";
            if (!(e == Rational(1))) os << "^" << (e.den() == 1 ? e.str() : "(" + e.str() + ")");
        }
        ++shown;
    }
    if (order_) os << " + O(q^{>" << order_->str() << "})";
    return os.str();
}

Rational Series::effective_bound(const Series& f, const Series& g, const Rational& bound) {
    Rational b = bound;
    if (f.order_ && *f.order_ < b) b = *f.order_;
    if (g.order_ && *g.order_ < b) b = *g.order_;
    return b;
}

std::optional<Series::Mismatch> Series::first_mismatch(const Series& f, const Series& g,
                                                       const Rational& bound) {
    Rational b = effective_bound(f, g, bound);
    long long d = lcm_ll(f.denom_, g.denom_);
    Series x = f.rescaled(d), y = g.rescaled(d);
    long long lo = 0;
    bool have = false;
    if (!x.coeffs_.empty()) {
        lo = x.offset_;
        have = true;
    }
    if (!y.coeffs_.empty()) {
        lo = have ? std::min(lo, y.offset_) : y.offset_;
        have = true;
    }
    if (!have) return std::nullopt;
    long long hi = cut_index(d, 0, b);  // absolute grid index bound
    auto at = [](const Series& s, long long abs_idx) -> const mpz_class& {
        static const mpz_class zero = 0;
        long long i = abs_idx - s.offset_;
        if (i < 0 || i >= (long long)s.coeffs_.size()) return zero;
        return s.coeffs_[i];
    };
    for (long long idx = lo; idx <= hi; ++idx) {
        const mpz_class& cf = at(x, idx);
        const mpz_class& cg = at(y, idx);
        if (cf != cg) return Mismatch{Rational(idx, d), cf, cg};
    }
    return std::nullopt;
}

} // namespace qrr
