#include "qrr/qfunctions.hpp"

#include <sstream>

#include "qrr/errors.hpp"

namespace qrr {

namespace {

// 1 + q^e + q^{2e} + ... = 1/(1-q^e) for e > 0, truncated at `order`.
Series geometric(const Rational& e, const Rational& order) {
    long long d = e.den();
    long long step = e.num();
    long long cut = order.floor_times(d);
    std::vector<mpz_class> c(cut >= 0 ? cut + 1 : 0);
    for (long long x = 0; x < (long long)c.size(); x += step) c[x] = 1;
    return Series::from_grid(d, 0, std::move(c), order);
}

} // namespace

Series poch_general(const Rational& first, const Rational& step, std::optional<long long> m,
                    const Rational& order) {
    if (!m) {
        if (!(first > Rational(0)))
            throw divergence_error("infinite q-Pochhammer with nonpositive leading exponent q^" +
                                   first.str());
        if (!(step > Rational(0)))
            throw divergence_error("infinite q-Pochhammer with nonpositive step q^" + step.str());
        Series acc = Series::one().truncated(order);
        Rational e = first;
        while (!(e > order)) {
            acc = acc * (Series::one() - Series::monomial(1, e));
            e += step;
        }
        return acc;
    }
    // finite product; exact polynomial when the whole degree span fits
    Rational degree(0), low(0);
    Rational e = first;
    for (long long i = 0; i < *m; ++i) {
        degree += max(e, Rational(0));
        low += min(e, Rational(0));
        e += step;
    }
    bool exact = !(degree > order);
    Series acc = exact ? Series::one() : Series::one().truncated(order);
    e = first;
    for (long long i = 0; i < *m; ++i) {
        acc = acc * (Series::one() - Series::monomial(1, e));
        e += step;
    }
    return acc;
}

Series poch(long long a_num, long long a_den, std::optional<long long> m, const Rational& order) {
    if (a_den <= 0) throw std::invalid_argument("poch: exponent denominator must be positive");
    if (!m && a_num <= 0)
        throw divergence_error("(q^{" + Rational(a_num, a_den).str() +
                               "}; q)_infinity diverges as a formal series");
    return poch_general(Rational(a_num, a_den), Rational(1), m, order);
}

Series qbin(long long m, long long k) {
    if (k < 0 || m < 0 || k > m) return Series();
    if (k == 0 || k == m) return Series::one();
    long long deg = k * (m - k);
    Rational bound(deg);
    // [m k] = prod_{i=1..k} (1-q^{m-k+i}) / (1-q^i); the true value is a
    // polynomial of degree k(m-k), so a truncation at that degree is exact.
    Series acc = Series::one().truncated(bound);
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (Series::one() - Series::monomial(1, Rational(m - k + i)));
        acc = acc * geometric(Rational(i), bound);
    }
    // promote to an exact polynomial on the full integer grid
    std::vector<mpz_class> c(deg + 1);
    for (long long x = 0; x <= deg; ++x) c[x] = acc.coeff(Rational(x));
    return Series::from_grid(1, 0, std::move(c), std::nullopt);
}

Rational EtaQuotient::prefactor_exponent() const {
    Rational s(0);
    for (const auto& f : factors) s += Rational(f.multiplier * f.power, 24);
    return s;
}

Series eta_quotient(const EtaQuotient& spec, const Rational& order) {
    for (const auto& f : spec.factors) {
        if (f.multiplier <= 0) throw std::invalid_argument("eta_quotient: multiplier must be positive");
        if (f.power == 0) throw std::invalid_argument("eta_quotient: zero power factor");
    }
    Rational offset = spec.prefactor_exponent();
    Rational inner_order = order - offset;
    Series acc = Series::one().truncated(inner_order);
    for (const auto& f : spec.factors) {
        Series base = poch_general(Rational(f.multiplier), Rational(f.multiplier), std::nullopt,
                                   inner_order);
        acc = acc * base.pow(f.power);
    }
    return acc.shifted(offset);
}

Series triple_product(long long p, long long M, const Rational& order) {
    if (!(1 <= p && p < M)) throw std::invalid_argument("triple_product requires 1 <= p < M");
    Series prod = poch_general(Rational(p), Rational(M), std::nullopt, order) *
                  poch_general(Rational(M - p), Rational(M), std::nullopt, order) *
                  poch_general(Rational(M), Rational(M), std::nullopt, order);

    // bilateral theta form: sum_j (-1)^j q^{M*j(j-1)/2 + p*j}
    long long cut = order.floor_times(1);
    std::vector<mpz_class> c(cut >= 0 ? cut + 1 : 0);
    auto expo = [&](long long j) { return M * j * (j - 1) / 2 + p * j; };
    for (long long j = 0; expo(j) <= cut; ++j)
        c[expo(j)] += (j % 2 == 0) ? 1 : -1;
    for (long long j = -1; expo(j) <= cut; --j)
        c[expo(j)] += (((-j) % 2) == 0) ? 1 : -1;
    Series bilateral = Series::from_grid(1, 0, std::move(c), order);

    if (auto mm = Series::first_mismatch(prod, bilateral, order)) {
        std::ostringstream os;
        os << "triple_product(" << p << "," << M << "): product and theta forms disagree at q^"
           << mm->exponent.str() << " (" << mm->lhs.get_str() << " vs " << mm->rhs.get_str()
           << ")";
        throw consistency_error(os.str());
    }
    return prod;
}

Series inverse_qinf_power(long long power, const Rational& order) {
    return poch_general(Rational(1), Rational(1), std::nullopt, order).inverse().pow(power);
}

} // namespace qrr
