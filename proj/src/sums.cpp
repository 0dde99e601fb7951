#include "qrr/sums.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.hpp"
#include "qrr/qfunctions.hpp"

namespace qrr {

namespace {

mpq_class mpq_from(const Rational& r) {
    mpq_class q((long)r.num(), (long)r.den());
    q.canonicalize();
    return q;
}

// [v] = 1 / prod_{j=1..v} (1 - q^{step*j}), all truncated at `order`
std::vector<Series> inverse_poch_table(long long count, long long step, const Rational& order) {
    std::vector<Series> t;
    t.reserve(count + 1);
    t.push_back(Series::one().truncated(order));
    for (long long v = 1; v <= count; ++v) {
        Series f = (Series::one() - Series::monomial(1, Rational(step * v))).truncated(order);
        t.push_back(t.back() * f.inverse());
    }
    return t;
}

std::string vec_str(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// bosonic sums
// ---------------------------------------------------------------------------

mpq_class xi_weight(const std::vector<mpq_class>& v, const std::vector<mpq_class>& w) {
    size_t n = v.size();
    mpq_class acc(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            mpq_class num = v[i] * v[i] - v[j] * v[j];
            if (num == 0) return 0;
            acc *= num / (w[i] * w[i] - w[j] * w[j]);
        }
    return acc;
}

mpq_class chi_weight(const std::vector<mpq_class>& v, const std::vector<mpq_class>& w) {
    mpq_class acc = xi_weight(v, w);
    if (acc == 0) return 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) return 0;
        acc *= v[i] / w[i];
    }
    return acc;
}

void BosonicSpec::validate() const {
    if (dimension < 1) throw std::invalid_argument("BosonicSpec: dimension must be >= 1");
    if (modulus < 1) throw std::invalid_argument("BosonicSpec: modulus must be >= 1");
    if (exp_denom < 1) throw std::invalid_argument("BosonicSpec: exp_denom must be >= 1");
    if ((long long)base.size() != dimension || (long long)weight_ref.size() != dimension)
        throw std::invalid_argument("BosonicSpec: base/weight_ref must have `dimension` entries");
    long long den = half_integer_lattice ? 2 : 1;
    for (const auto& b : base)
        if (b.den() != den)
            throw std::invalid_argument("BosonicSpec: base entry " + b.str() +
                                        " is off the declared lattice");
    if (weight != WeightKind::trivial) {
        for (size_t i = 0; i < weight_ref.size(); ++i) {
            if (weight == WeightKind::chi && weight_ref[i].is_zero())
                throw std::invalid_argument("BosonicSpec: chi weight reference has a zero entry");
            for (size_t j = i + 1; j < weight_ref.size(); ++j)
                if (weight_ref[i] * weight_ref[i] == weight_ref[j] * weight_ref[j])
                    throw std::invalid_argument(
                        "BosonicSpec: weight reference has coinciding squares: " +
                        vec_str(weight_ref));
        }
    }
}

Series bosonic_sum(const BosonicSpec& spec, const Rational& order) {
    spec.validate();
    long long n = spec.dimension, M = spec.modulus;
    long long ord = order.floor();
    if (ord < 0) return Series::zero(order);

    Rational norm2_base(0);
    for (const auto& b : spec.base) norm2_base += b * b;

    // |t_i| <= (sqrt(order*e + |base|^2) + |base_i|) / M + 1
    double radius = std::sqrt((double)ord * (double)spec.exp_denom + norm2_base.to_double() + 1.0);
    std::vector<long long> box(n);
    for (long long i = 0; i < n; ++i) {
        double bi = std::fabs(spec.base[i].to_double());
        box[i] = ((long long)std::ceil((radius + bi) / (double)M) + 1) * spec.bound_scale;
    }

    std::vector<mpq_class> wref(n);
    for (long long i = 0; i < n; ++i) wref[i] = mpq_from(spec.weight_ref[i]);

    std::vector<mpq_class> acc(ord + 1, mpq_class(0));
    std::vector<long long> t(n);
    for (long long i = 0; i < n; ++i) t[i] = -box[i];

    std::vector<mpq_class> v(n);
    while (true) {
        Rational norm2(0);
        long long tsum = 0;
        for (long long i = 0; i < n; ++i) {
            Rational vi = spec.base[i] + Rational(M * t[i]);
            norm2 += vi * vi;
            tsum += t[i];
        }
        Rational expo = (norm2 - norm2_base) / Rational(spec.exp_denom);
        if (!(expo > order)) {
            if (expo < Rational(0) || !expo.is_integer()) {
                std::ostringstream os;
                os << "bosonic_sum: exponent " << expo.str()
                   << " is not a nonnegative integer at t = (";
                for (long long i = 0; i < n; ++i) os << (i ? "," : "") << t[i];
                os << "); the sum is mis-parametrized";
                throw integrality_error(os.str());
            }
            for (long long i = 0; i < n; ++i) v[i] = mpq_from(spec.base[i]) + (long)(M * t[i]);
            mpq_class w;
            switch (spec.weight) {
                case WeightKind::xi: w = xi_weight(v, wref); break;
                case WeightKind::chi: w = chi_weight(v, wref); break;
                case WeightKind::trivial: w = 1; break;
            }
            if (w != 0) {
                // |v| - |base| = M * sum(t): the over-modulus sign rule's
                // divisibility claim holds by construction, and both rules
                // reduce to a parity of sum(t).
                int parity = 0;
                if (spec.sign_rule == SignRule::parity_diff)
                    parity = (int)(((M % 2) * (tsum % 2)) & 1);
                else if (spec.sign_rule == SignRule::parity_diff_over_modulus)
                    parity = (int)(tsum & 1);
                if (parity)
                    acc[expo.floor()] -= w;
                else
                    acc[expo.floor()] += w;
            }
        }
        long long i = 0;
        while (i < n) {
            if (t[i] < box[i]) {
                ++t[i];
                break;
            }
            t[i] = -box[i];
            ++i;
        }
        if (i == n) break;
    }

    std::vector<mpz_class> c(ord + 1);
    for (long long x = 0; x <= ord; ++x) {
        acc[x].canonicalize();
        if (acc[x].get_den() != 1)
            throw consistency_error("bosonic_sum: non-integer coefficient " + acc[x].get_str() +
                                    " at q^" + std::to_string(x));
        c[x] = acc[x].get_num();
    }
    return Series::from_grid(1, 0, std::move(c), order);
}

// ---------------------------------------------------------------------------
// fermionic sums
// ---------------------------------------------------------------------------

void FermionicSpec::validate() const {
    if (N < 2) throw std::invalid_argument("FermionicSpec: N must be >= 2");
    if (k < 1) throw std::invalid_argument("FermionicSpec: k must be >= 1");
    if (p < 1 || p > k) throw std::invalid_argument("FermionicSpec: need 1 <= p <= k");
}

namespace {

struct FermRec {
    const QuadraticForm& B;
    const std::vector<long long>& lin;
    const std::vector<Series>& std_table;
    const std::vector<Series>& even_table;
    const std::vector<bool>& is_even;
    long long ord;
    const std::vector<long long>& box;
    const std::vector<long long>& box_raw;
    // suffix_inv[j] = exact inverse of B restricted to coordinates j..d-1
    const std::vector<std::vector<std::vector<mpq_class>>>& suffix_inv;
    std::vector<mpz_class> acc;

    void leaf(long long e0, const Series& partial, const std::vector<long long>& m) {
        if (e0 > ord) return;
        if (e0 < 0)
            throw integrality_error("fermionic_sum: negative exponent " + std::to_string(e0));
        for (size_t j = 0; j < m.size(); ++j)
            if (m[j] > box_raw[j])
                throw consistency_error(
                    "fermionic_sum: contributing term outside the derived bound");
        for (const auto& [e, c] : partial.terms()) {
            long long at = e0 + e.num();  // partial lives on the integer grid
            if (at <= ord) acc[at] += c;
        }
    }

    void recurse(long long idx, long long e0, std::vector<long long>& cross,
                 std::vector<long long>& m, const Series& partial) {
        long long d = B.dim();
        if (idx == d) {
            leaf(e0, partial, m);
            return;
        }
        const auto& row = B.entries()[idx];
        for (long long x = 0; x <= box[idx]; ++x) {
            long long e0x = e0 + (row[idx] / 2) * x * x + (cross[idx] + lin[idx]) * x;
            if (e0x > ord) {
                // completed minimum over the remaining coordinates relaxed to
                // reals: e0x - (1/2) c^T Bsuffix^{-1} c
                const auto& inv = suffix_inv[idx + 1];
                long long s = (long long)inv.size();
                mpq_class corr(0);
                std::vector<mpq_class> cvec(s);
                for (long long t = 0; t < s; ++t)
                    cvec[t] = (long)(cross[idx + 1 + t] + row[idx + 1 + t] * x + lin[idx + 1 + t]);
                for (long long t = 0; t < s; ++t) {
                    if (cvec[t] == 0) continue;
                    for (long long u = 0; u < s; ++u) corr += cvec[t] * inv[t][u] * cvec[u];
                }
                corr /= 2;
                if (mpq_class((long)(e0x - ord)) > corr) continue;  // provably invisible
            }
            for (long long t = idx + 1; t < d; ++t) cross[t] += row[t] * x;
            m[idx] = x;
            if (x == 0) {
                recurse(idx + 1, e0x, cross, m, partial);
            } else {
                const Series& tab = is_even[idx] ? even_table[x] : std_table[x];
                recurse(idx + 1, e0x, cross, m, partial * tab);
            }
            m[idx] = 0;
            for (long long t = idx + 1; t < d; ++t) cross[t] -= row[t] * x;
        }
    }
};

} // namespace

Series fermionic_sum(const FermionicSpec& spec, const Rational& order) {
    spec.validate();
    long long N = spec.N, k = spec.k;
    if (k == 1) {
        if (spec.last_column == LastColumn::standard) return Series::one().truncated(order);
        // the empty-column convention: each Cartan node contributes
        // (q)_inf / (q^2;q^2)_inf = (q;q^2)_inf
        return poch_general(Rational(1), Rational(2), std::nullopt, order).pow(N - 1);
    }

    QuadraticForm B = QuadraticForm::kronecker_cartan(N, k);
    long long d = B.dim(), cols = k - 1;
    std::vector<long long> lin(d, 0);
    for (long long a = 1; a <= N - 1; ++a) {
        long long sign = (a % 2 == 1) ? 1 : -1;
        if (spec.linear_sign == LinearSign::alternating_first_minus) sign = -sign;
        for (long long i = 1; i <= cols; ++i)
            lin[(a - 1) * cols + (i - 1)] = sign * std::max(0ll, i - spec.p + 1);
    }

    long long ord = order.floor();
    if (ord < 0) return Series::zero(order);

    // per-coordinate caps from (1/2) lam |m|^2 - sum |lin_j| m_j <= order
    double lam = B.min_eigenvalue_bound().to_double();
    double slack = 0;
    for (long long j = 0; j < d; ++j) slack += (double)(lin[j] * lin[j]) / (2 * lam);
    std::vector<long long> box_raw(d), box(d);
    for (long long j = 0; j < d; ++j) {
        double lj = std::fabs((double)lin[j]);
        box_raw[j] = (long long)std::ceil(
                         (lj + std::sqrt(lj * lj + 2 * lam * ((double)ord + slack))) / lam) +
                     1;
        box[j] = box_raw[j] * spec.bound_scale;
    }

    long long maxbox = 0;
    for (long long j = 0; j < d; ++j) maxbox = std::max(maxbox, box[j]);
    std::vector<bool> is_even(d, false);
    bool any_even = false;
    for (long long a = 1; a <= N - 1; ++a)
        for (long long i = 1; i <= cols; ++i) {
            bool ev = spec.last_column == LastColumn::even && i == cols;
            is_even[(a - 1) * cols + (i - 1)] = ev;
            any_even |= ev;
        }
    std::vector<Series> std_table = inverse_poch_table(maxbox, 1, order);
    std::vector<Series> even_table;
    if (any_even) even_table = inverse_poch_table(maxbox, 2, order);

    std::vector<std::vector<std::vector<mpq_class>>> suffix_inv(d + 1);
    for (long long j0 = 1; j0 <= d; ++j0) {
        long long s = d - j0;
        if (s == 0) continue;
        std::vector<std::vector<mpq_class>> sub(s, std::vector<mpq_class>(s));
        for (long long t = 0; t < s; ++t)
            for (long long u = 0; u < s; ++u) sub[t][u] = (long)B.entries()[j0 + t][j0 + u];
        suffix_inv[j0] = invert_spd(sub);
    }

    FermRec rec{B,   lin, std_table, even_table, is_even,
                ord, box, box_raw,   suffix_inv, std::vector<mpz_class>(ord + 1)};
    std::vector<long long> cross(d, 0), m(d, 0);
    rec.recurse(0, 0, cross, m, Series::one().truncated(order));
    return Series::from_grid(1, 0, std::move(rec.acc), order);
}

// ---------------------------------------------------------------------------
// partition-tuple sums
// ---------------------------------------------------------------------------

namespace {

struct TupleCandidate {
    std::vector<long long> cols;  // column heights (the conjugate partition)
    long long weight = 0;
    long long selfb = 0;  // (lambda|lambda)
    Series inv_b;
    Rational u{0};  // (1/2) lambda_lb * selfb - gamma * weight
};

long long cols_bracket(const std::vector<long long>& a, const std::vector<long long>& b) {
    size_t n = std::min(a.size(), b.size());
    long long s = 0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

struct TupleCtx {
    std::vector<TupleCandidate> P;
    std::vector<Rational> c;            // per-slot z exponents
    std::vector<Rational> suffix_floor;  // suffix sums of per-slot u floors
    Rational order{0};
    long long slots = 0;
    Series acc;

    void rec(long long a, const TupleCandidate* prev, const Rational& e_partial,
             const Rational& u_partial, const Series& partial) {
        if (a == slots) {
            if (e_partial < Rational(0))
                throw integrality_error("hl_tuple_sum: negative exponent " + e_partial.str());
            if (e_partial > order) return;
            acc = acc + partial.shifted(e_partial);
            return;
        }
        for (const auto& cand : P) {
            Rational u2 = u_partial + cand.u;
            if (u2 + suffix_floor[a + 1] > order) continue;
            long long cross = prev ? cols_bracket(prev->cols, cand.cols) : 0;
            Rational e2 =
                e_partial + Rational(cand.selfb - cross) + c[a] * Rational(cand.weight);
            if (cand.weight == 0)
                rec(a + 1, &cand, e2, u2, partial);
            else
                rec(a + 1, &cand, e2, u2, partial * cand.inv_b);
        }
    }
};

// enumerate candidate partitions by decreasing column heights, pruned on the
// eigenvalue relaxation u(lambda) = (1/2) lam (l|l) - gamma |l|
void gen_candidates(long long max_cols, long long hmax, const Rational& budget,
                    const Rational& g_min, const Rational& lam, const Rational& gamma,
                    const Rational& order, std::vector<long long>& cur,
                    std::vector<TupleCandidate>& out) {
    {
        TupleCandidate cand;
        cand.cols = cur;
        for (long long h : cur) {
            cand.weight += h;
            cand.selfb += h * h;
        }
        cand.u = lam * Rational(cand.selfb, 2) - gamma * Rational(cand.weight);
        if (!cur.empty()) {
            Partition colpart{cur};
            cand.inv_b = b_of(colpart.conjugate()).truncated(order).inverse();
        } else {
            cand.inv_b = Series::one().truncated(order);
        }
        out.push_back(std::move(cand));
    }
    if ((long long)cur.size() == max_cols) return;
    long long cap = cur.empty() ? hmax : cur.back();
    Rational upartial(0);
    for (long long h : cur) upartial += lam * Rational(h * h, 2) - gamma * Rational(h);
    for (long long h = 1; h <= cap; ++h) {
        Rational u2 = upartial + lam * Rational(h * h, 2) - gamma * Rational(h);
        if (u2 + Rational(max_cols - (long long)cur.size() - 1) * g_min > budget) continue;
        cur.push_back(h);
        gen_candidates(max_cols, hmax, budget, g_min, lam, gamma, order, cur, out);
        cur.pop_back();
    }
}

// shared engine: sum over (N-1)-tuples of partitions with parts <= max_part
// of q^{(1/2) sum C_ab (l^a|l^b) + sum c_a |l^a|} / prod b_{l^a}(q)
Series hl_tuple_sum(long long N, const std::vector<Rational>& c, long long max_part,
                    const Rational& order) {
    if (N < 2) throw std::invalid_argument("hl_tuple_sum: N must be >= 2");
    if ((long long)c.size() != N - 1)
        throw std::invalid_argument("hl_tuple_sum: need N-1 weight exponents");
    if (max_part <= 0 || order < Rational(0)) return Series::one().truncated(order);

    QuadraticForm C(cartan_matrix(N - 1));
    Rational lam = C.min_eigenvalue_bound();
    Rational gamma(0);
    for (const auto& ca : c)
        if (Rational(0) - ca > gamma) gamma = Rational(0) - ca;
    Rational g_min = (gamma * gamma) / (lam * Rational(2));
    g_min = Rational(0) - g_min;  // per-column floor of (1/2) lam h^2 - gamma h
    Rational u_floor_global = Rational(max_part) * g_min;
    Rational budget = order - Rational(N - 2) * u_floor_global;

    long long hmax = 0;
    while (true) {
        long long h = hmax + 1;
        Rational g = lam * Rational(h * h, 2) - gamma * Rational(h);
        if (g + Rational(max_part - 1) * g_min > budget) break;
        ++hmax;
    }

    std::vector<TupleCandidate> P;
    std::vector<long long> cur;
    gen_candidates(max_part, hmax, budget, g_min, lam, gamma, order, cur, P);

    std::vector<Rational> slot_floor(N - 1, Rational(0));
    for (long long a = 0; a < N - 1; ++a)
        for (const auto& cand : P) {
            Rational ua = lam * Rational(cand.selfb, 2) + c[a] * Rational(cand.weight);
            if (ua < slot_floor[a]) slot_floor[a] = ua;
        }
    std::vector<Rational> suffix_floor(N, Rational(0));
    for (long long a = N - 2; a >= 0; --a) suffix_floor[a] = suffix_floor[a + 1] + slot_floor[a];

    TupleCtx ctx;
    ctx.P = std::move(P);
    ctx.c = c;
    ctx.suffix_floor = std::move(suffix_floor);
    ctx.order = order;
    ctx.slots = N - 1;
    ctx.acc = Series::zero(order);
    ctx.rec(0, nullptr, Rational(0), Rational(0), Series::one().truncated(order));
    return ctx.acc;
}

} // namespace

Series hl_form_sum(long long N, long long k, long long p, const Rational& order) {
    if (N < 2) throw std::invalid_argument("hl_form_sum: N must be >= 2");
    if (k < 1) throw std::invalid_argument("hl_form_sum: k must be >= 1");
    if (p != 1 && p != k) throw std::invalid_argument("hl_form_sum: p must be 1 or k");
    std::vector<Rational> c(N - 1, Rational(0));
    if (p == 1 && k > 1)
        for (long long a = 1; a <= N - 1; ++a)
            c[a - 1] = (a % 2 == 1) ? Rational(1) : Rational(-1);
    return hl_tuple_sum(N, c, k - 1, order);
}

Series hua_product(long long N, const std::vector<Rational>& z_exponents, const Rational& order) {
    if (N < 2) throw std::invalid_argument("hua_product: N must be >= 2");
    if ((long long)z_exponents.size() != N - 1)
        throw std::invalid_argument("hua_product: need N-1 z exponents");
    Series acc = Series::one().truncated(order);
    for (long long i = 1; i <= N - 1; ++i) {
        Rational e(1);
        for (long long j = i; j <= N - 1; ++j) {
            e += z_exponents[j - 1];
            if (!(e > Rational(0)))
                throw divergence_error("hua_product: root monomial exponent " + e.str() +
                                       " is not positive");
            acc = acc * poch_general(e, Rational(1), std::nullopt, order).inverse();
        }
    }
    return acc;
}

namespace {

// Unbounded-part tuple engine for nonnegative z exponents. The summand
// factors over the columns of the tuple: encoding the partitions by their
// weakly decreasing column vectors col_1 >= col_2 >= ... in N^{N-1},
//   exponent = sum_i [ (1/2) col_i^T C col_i + c . col_i ],
//   1/prod b  = prod_i prod_a 1/(q)_{col_i[a] - col_{i+1}[a]},
// so grouping equal columns into runs turns the sum into a chain walk over
// distinct column values with geometric run weights. Values with
// w(v) = (1/2) v C v + c.v beyond the order cannot appear in a visible chain
// (every group contributes at least its own w >= 1), which keeps the state
// space tiny at desk orders.
Series hua_column_walk(long long N, const std::vector<Rational>& c, const Rational& order) {
    long long rank = N - 1;
    auto C = cartan_matrix(rank);
    auto wval = [&](const std::vector<long long>& v) {
        long long quad = 0;
        for (long long a = 0; a < rank; ++a) {
            quad += C[a][a] * v[a] * v[a];
            for (long long b = a + 1; b < rank; ++b) quad += 2 * C[a][b] * v[a] * v[b];
        }
        Rational w(quad / 2);
        for (long long a = 0; a < rank; ++a) w += c[a] * Rational(v[a]);
        return w;
    };

    // states: v with w(v) <= order, scanned over a provably sufficient box
    QuadraticForm Cq(C);
    double lam = Cq.min_eigenvalue_bound().to_double();
    long long cap = (long long)std::ceil(std::sqrt(2.0 * (order.to_double() + 1) / lam)) + 1;
    std::vector<std::vector<long long>> states;
    std::vector<long long> v(rank, 0);
    while (true) {
        if (!(wval(v) > order)) states.push_back(v);
        long long i = 0;
        while (i < rank) {
            if (v[i] < cap) {
                ++v[i];
                break;
            }
            v[i] = 0;
            ++i;
        }
        if (i == rank) break;
    }
    std::sort(states.begin(), states.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                  long long sa = 0, sb = 0;
                  for (long long x : a) sa += x;
                  for (long long x : b) sb += x;
                  return sa != sb ? sa < sb : a < b;
              });

    long long maxcoord = 0;
    for (const auto& st : states)
        for (long long x : st) maxcoord = std::max(maxcoord, x);
    std::vector<Series> inv = inverse_poch_table(maxcoord, 1, order);

    // F[s] = sum over chains topped by state s (runs included)
    std::vector<Series> F(states.size());
    Series total = Series::zero(order);
    for (size_t si = 0; si < states.size(); ++si) {
        const auto& top = states[si];
        bool is_zero_state = true;
        for (long long x : top) is_zero_state &= (x == 0);
        if (is_zero_state) {
            F[si] = Series::one().truncated(order);
            total = total + F[si];
            continue;
        }
        Series below = Series::zero(order);
        for (size_t ui = 0; ui < si; ++ui) {
            const auto& u = states[ui];
            bool leq = true, neq = false;
            for (long long a = 0; a < rank; ++a) {
                leq &= (u[a] <= top[a]);
                neq |= (u[a] != top[a]);
            }
            if (!leq || !neq || F[ui].is_zero()) continue;
            Series step = F[ui];
            for (long long a = 0; a < rank; ++a)
                if (top[a] - u[a] > 0) step = step * inv[top[a] - u[a]];
            below = below + step;
        }
        // runs of the top value: sum_{r>=1} q^{r w} = q^w / (1 - q^w)
        Rational w = wval(top);
        Series run = Series::monomial(1, w, order) *
                     (Series::one() - Series::monomial(1, w)).truncated(order).inverse();
        F[si] = run * below;
        total = total + F[si];
    }
    return total;
}

} // namespace

Series hua_lhs(long long N, const std::vector<Rational>& z_exponents, const Rational& order) {
    if (N < 2) throw std::invalid_argument("hua_lhs: N must be >= 2");
    if ((long long)z_exponents.size() != N - 1)
        throw std::invalid_argument("hua_lhs: need N-1 z exponents");
    for (const auto& ce : z_exponents)
        if (ce < Rational(0))
            throw specialization_error(
                "hua_lhs: negative z exponents break the chain-walk state bound");
    if (order < Rational(0)) return Series::one().truncated(order);
    return hua_column_walk(N, z_exponents, order);
}

// ---------------------------------------------------------------------------
// modified Hall-Littlewood weighted sums
// ---------------------------------------------------------------------------

Series qprime_weighted_sum(long long n, QprimeVariant variant, const Rational& order) {
    if (n < 1) throw std::invalid_argument("qprime_weighted_sum: n must be >= 1");
    AlphabetSpec alpha =
        variant == QprimeVariant::plain ? AlphabetSpec::ones(n) : AlphabetSpec::alternating(n);
    long long cm = variant == QprimeVariant::plain ? 1 : 2;
    Rational gammaTot(0);
    for (const auto& s : alpha.exponents)
        if (s < Rational(0)) gammaTot += Rational(-2) * s;
    // q^{cm*m} Q'_{(2^m)} has lowest exponent >= cm*m - gammaTot
    Rational W = order + gammaTot;
    long long mmax = W.floor() / cm + 1;
    std::vector<Series> inv = inverse_poch_table(mmax, 1, W);
    Series acc = Series::zero(order);
    for (long long m = 0; m <= mmax; ++m) {
        Series qp = qprime_2m(m, alpha, W - Rational(cm * m));
        if (qp.is_zero()) continue;
        acc = acc + (inv[m] * qp).shifted(Rational(cm * m)).truncated(order);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Milne's C_n lattice sum at x_i = q^{sigma_i}
// ---------------------------------------------------------------------------

namespace {

struct MilneTerm {
    Rational shift{0};  // q-monomial in front of the unit-series part
    int sign = 1;
    std::vector<Rational> num;  // exponents of (1 - q^e) factors, all > 0
    std::vector<Rational> den;
    bool zero = false;
};

// Assemble the factor lists of one u-term. Common factors of the Vandermonde
// ratio Delta(x q^u)/Delta(x) are cancelled exactly before specialization,
// and every remaining factor is normalized to a positive exponent via
// (1 - q^e) = -q^e (1 - q^{-e}), accumulating the monomial into `shift`.
MilneTerm milne_term(long long n, const std::vector<Rational>& sigma,
                     const std::vector<long long>& u) {
    MilneTerm t;
    long long usum = 0, nu = 0, norm2 = 0;
    for (long long i = 0; i < n; ++i) {
        usum += u[i];
        nu += i * u[i];
        norm2 += u[i] * u[i];
    }
    t.shift = Rational(nu) + Rational((n + 4) * norm2 - n * usum, 2);
    for (long long i = 0; i < n; ++i) t.shift += sigma[i] * Rational((n + 4) * u[i] - usum);
    t.sign = ((n * usum) % 2 == 0) ? 1 : -1;

    std::vector<Rational> num, den;
    for (long long i = 0; i < n; ++i) {
        for (long long j = i + 1; j < n; ++j) {
            Rational top = sigma[i] - sigma[j] + Rational(u[i] - u[j]);
            Rational bot = sigma[i] - sigma[j];
            if (!(top == bot)) {
                num.push_back(top);
                den.push_back(bot);
            }
        }
        for (long long j = i; j < n; ++j) {
            Rational top = sigma[i] + sigma[j] + Rational(u[i] + u[j]);
            Rational bot = sigma[i] + sigma[j];
            if (!(top == bot)) {
                num.push_back(top);
                den.push_back(bot);
            }
        }
    }
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            for (long long l = 0; l < u[i]; ++l) num.push_back(sigma[i] + sigma[j] + Rational(l));
            for (long long l = 1; l <= u[i]; ++l)
                den.push_back(Rational(l) + sigma[i] - sigma[j]);
        }

    std::vector<bool> dkill(den.size(), false);
    for (const auto& e : num) {
        bool cancelled = false;
        for (size_t jd = 0; jd < den.size(); ++jd)
            if (!dkill[jd] && den[jd] == e) {
                dkill[jd] = true;
                cancelled = true;
                break;
            }
        if (!cancelled) t.num.push_back(e);
    }
    for (size_t jd = 0; jd < den.size(); ++jd)
        if (!dkill[jd]) t.den.push_back(den[jd]);

    std::vector<Rational> num2, den2;
    for (const auto& e : t.num) {
        if (e.is_zero()) {
            t.zero = true;
            return t;
        }
        if (e < Rational(0)) {
            t.sign = -t.sign;
            t.shift += e;
            num2.push_back(Rational(0) - e);
        } else {
            num2.push_back(e);
        }
    }
    for (const auto& e : t.den) {
        if (e.is_zero())
            throw specialization_error(
                "milne_lhs: specialization leaves a vanishing denominator");
        if (e < Rational(0)) {
            // 1/(1 - q^e) = -q^{-e} / (1 - q^{-e})
            t.sign = -t.sign;
            t.shift += Rational(0) - e;
            den2.push_back(Rational(0) - e);
        } else {
            den2.push_back(e);
        }
    }
    t.num = std::move(num2);
    t.den = std::move(den2);
    return t;
}

} // namespace

Series milne_lhs(long long n, const std::vector<Rational>& sigma, const Rational& order) {
    if (n < 1) throw std::invalid_argument("milne_lhs: n must be >= 1");
    if ((long long)sigma.size() != n)
        throw std::invalid_argument("milne_lhs: need n alphabet exponents");
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (i != j && (sigma[i] - sigma[j]).is_integer())
                throw specialization_error(
                    "milne_lhs: sigma_i - sigma_j integral for i != j; specialization rejected");

    // The monomial grows like (n+4)|u|^2/2 while every dip in the factor
    // lists is at most linear in u, so a per-coordinate cap works; the outer
    // shell of the box is verified to be invisible and the cap doubles if
    // that check ever fails.
    double S = 0;
    for (const auto& s : sigma) S = std::max(S, std::fabs(s.to_double()));
    double A = 0.5 * n + (n + 4) * S + n * S + n + 2;
    double B0 = (double)(n * n) * (S + 1) * 3 + 8;
    B0 += (n - 1) * A * A / (2 * (n + 4));  // slack absorbed by the other coordinates
    long long cap =
        (long long)std::ceil((A + std::sqrt(A * A + 2 * (n + 4) * (order.to_double() + B0 + 1))) /
                             (n + 4)) +
        2;

    for (;; cap *= 2) {
        bool boundary_clean = true;
        Series acc = Series::zero(order);
        std::vector<long long> u(n, 0);
        while (true) {
            MilneTerm t = milne_term(n, sigma, u);
            if (!t.zero && !(t.shift > order)) {
                bool boundary = false;
                for (long long i = 0; i < n; ++i) boundary |= (u[i] == cap);
                if (boundary) {
                    boundary_clean = false;
                    break;
                }
                Rational target = order - t.shift;
                Series unit = Series::one().truncated(target);
                for (const auto& e : t.num) unit = unit * (Series::one() - Series::monomial(1, e));
                for (const auto& e : t.den)
                    unit = unit *
                           (Series::one() - Series::monomial(1, e)).truncated(target).inverse();
                acc = acc + (unit * Series::constant(t.sign)).shifted(t.shift);
            }
            long long i = 0;
            while (i < n) {
                if (u[i] < cap) {
                    ++u[i];
                    break;
                }
                u[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
        if (boundary_clean) return acc;
    }
}

Series milne_rhs(long long n, const std::vector<Rational>& sigma, const Rational& order) {
    if (n < 1) throw std::invalid_argument("milne_rhs: n must be >= 1");
    if ((long long)sigma.size() != n)
        throw std::invalid_argument("milne_rhs: need n alphabet exponents");
    Rational gammaTot(0);
    for (const auto& s : sigma)
        if (s < Rational(0)) gammaTot += Rational(-2) * s;
    Rational W = order + gammaTot;

    Series pref = Series::one().truncated(W);
    auto poch_factor = [&](const Rational& e) {
        if (!(e > Rational(0)))
            throw specialization_error("milne_rhs: prefactor exponent " + e.str() +
                                       " not positive");
        pref = pref * poch_general(e, Rational(1), std::nullopt, W);
    };
    for (long long i = 0; i < n; ++i) poch_factor(Rational(1) + sigma[i] * Rational(2));
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) poch_factor(Rational(1) + sigma[i] + sigma[j]);

    long long mmax = W.floor() + 1;
    std::vector<Series> inv = inverse_poch_table(mmax, 1, W);
    AlphabetSpec alpha{sigma};
    Series sum = Series::zero(W);
    for (long long m = 0; m <= mmax; ++m) {
        Series qp = qprime_2m(m, alpha, W - Rational(m));
        if (qp.is_zero()) continue;
        sum = sum + (inv[m] * qp).shifted(Rational(m)).truncated(W);
    }
    return (pref * sum).truncated(order);
}

// ---------------------------------------------------------------------------
// reference vectors
// ---------------------------------------------------------------------------

std::vector<Rational> rho_half(long long n) {
    std::vector<Rational> v(n);
    for (long long i = 0; i < n; ++i) v[i] = Rational(2 * i + 1, 2);
    return v;
}

std::vector<Rational> rho_star(long long n) {
    std::vector<Rational> v(n);
    for (long long i = 0; i < n; ++i) v[i] = Rational(i + 1);
    return v;
}

std::vector<Rational> rho_marked(long long n) {
    std::vector<Rational> v(n);
    for (long long i = 0; i < n; ++i) v[i] = Rational(i);
    return v;
}

std::vector<Rational> shifted_by(std::vector<Rational> v, const Rational& a) {
    for (auto& x : v) x += a;
    return v;
}

} // namespace qrr
