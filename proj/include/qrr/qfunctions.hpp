#pragma once

#include <optional>
#include <vector>

#include "qrr/rational.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// q-Pochhammer symbol (q^{a_num/a_den}; q)_m truncated at `order`.
/// m = nullopt means the infinite product, which requires a positive leading
/// exponent; otherwise a divergence_error is thrown. A finite product whose
/// full degree fits under `order` comes back as an exact polynomial.
Series poch(long long a_num, long long a_den, std::optional<long long> m, const Rational& order);

/// prod_{i=0..m-1} (1 - q^{first + i*step}); the workhorse behind poch,
/// eta expansions and triple products. step must be positive for m = infinity.
Series poch_general(const Rational& first, const Rational& step, std::optional<long long> m,
                    const Rational& order);

/// Gaussian binomial coefficient [m k]_q as an exact polynomial of degree
/// k(m-k). Zero when k < 0, m < 0 or k > m.
Series qbin(long long m, long long k);

/// Product of Dedekind eta factors prod_a eta(t_a tau)^{e_a}, expanded as a
/// Puiseux series in q with the exact fractional prefactor q^{sum t*e/24}.
struct EtaQuotient {
    struct Factor {
        long long multiplier;  // t in eta(t tau)
        long long power;       // signed exponent
    };
    std::vector<Factor> factors;

    Rational prefactor_exponent() const;  // sum t*e/24
};
Series eta_quotient(const EtaQuotient& spec, const Rational& order);

/// (q^p, q^{M-p}, q^M; q^M)_infinity for 1 <= p < M, computed both as the
/// triple product and as the bilateral theta sum sum_j (-1)^j q^{M C(j,2)+pj};
/// the two forms are compared term by term and a consistency_error is thrown
/// if they ever disagree.
Series triple_product(long long p, long long M, const Rational& order);

/// 1/(q;q)_infinity^power truncated at `order`; shared by many identity
/// right-hand sides.
Series inverse_qinf_power(long long power, const Rational& order);

} // namespace qrr
