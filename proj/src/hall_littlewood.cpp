#include "qrr/hall_littlewood.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qrr/errors.hpp"
#include "qrr/qfunctions.hpp"

namespace qrr {

Series skew_qprime_one(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return Series();

    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    long long nsk = n_skew(lambda, mu);

    // column/q-binomial closed form
    Series qb = Series::monomial(1, Rational(nsk));
    for (long long i = 1; i <= lc.length(); ++i)
        qb = qb * qbin(lc.part(i) - mc.part(i + 1), lc.part(i) - mc.part(i));

    // product closed form: q^{n(lambda/mu)} / b_mu(q) * prod_{i<=l(mu)} (1 - q^{lambda'_{mu_i}-i+1});
    // cross-checked multiplicatively so no division is needed.
    Series num = Series::monomial(1, Rational(nsk));
    for (long long i = 1; i <= mu.length(); ++i) {
        long long e = lc.part(mu.part(i)) - i + 1;
        num = num * (Series::one() - Series::monomial(1, Rational(e)));
    }
    if (!(num == qb * b_of(mu))) {
        std::ostringstream os;
        os << "skew_qprime_one: closed forms disagree for lambda=" << lambda.str()
           << " mu=" << mu.str();
        throw consistency_error(os.str());
    }
    return qb;
}

namespace {

// Two-column shape (1^ones 2^twos); the only shapes appearing in chains
// under (2^m).
struct TwoCol {
    long long ones = 0, twos = 0;
    long long rows() const { return ones + twos; }
    long long weight() const { return ones + 2 * twos; }
    bool contains(const TwoCol& o) const { return o.twos <= twos && o.rows() <= rows(); }
};

// Q'_{mu/nu}(1) for two-column shapes via the q-binomial closed form. The
// public skew_qprime_one cross-checks this value against the product form on
// every call, which is what the box-scan tests exercise; repeating that
// inside the chain recursion would dominate the runtime.
Series skew_qprime_twocol(const TwoCol& mu, const TwoCol& nu,
                          std::map<std::pair<long long, long long>, Series>& qbin_cache) {
    if (!mu.contains(nu)) return Series();
    long long l1 = mu.rows(), l2 = mu.twos;  // column heights of mu
    long long m1 = nu.rows(), m2 = nu.twos;  // column heights of nu
    long long d1 = l1 - m1, d2 = l2 - m2;
    long long nsk = d1 * (d1 - 1) / 2 + d2 * (d2 - 1) / 2;
    auto qb = [&](long long m, long long k) -> const Series& {
        auto key = std::make_pair(m, k);
        auto it = qbin_cache.find(key);
        if (it == qbin_cache.end()) it = qbin_cache.emplace(key, qbin(m, k)).first;
        return it->second;
    };
    return (qb(l1 - m2, d1) * qb(l2, d2)).shifted(Rational(nsk));
}

// Minimum exponent contributed by emptying a column of height h in s chain
// steps: each skew piece carries q^{C(d,2)} and the optimum splits h evenly.
long long min_split_charge(long long h, long long s) {
    if (h <= 0) return 0;
    long long lo = h / s, r = h % s;
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    return r * c2(lo + 1) + (s - r) * c2(lo);
}

struct ChainContext {
    std::vector<Rational> sigma;
    Rational work_order{0};
    Rational maxneg{0};  // largest magnitude among negative alphabet exponents
    std::map<std::pair<long long, long long>, Series> qbin_cache;
    std::map<std::tuple<long long, long long, long long>, Series> memo;  // (level, ones, twos)
};

// Q'_nu(x_level, ..., x_n) truncated at the working order.
Series chain_eval(ChainContext& ctx, long long level, const TwoCol& nu) {
    long long n = (long long)ctx.sigma.size();
    if (nu.weight() == 0) return Series::one();
    if (level == n + 1) return Series();  // nonempty shape, no letters left
    long long steps = n - level + 1;
    // every chain term carries at least the balanced-split skew charges,
    // minus at most maxneg per emptied cell of x-monomial downshift
    Rational lb = Rational(min_split_charge(nu.rows(), steps) + min_split_charge(nu.twos, steps)) -
                  ctx.maxneg * Rational(nu.weight());
    if (lb > ctx.work_order) return Series();
    auto key = std::make_tuple(level, nu.ones, nu.twos);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    Series acc = Series::zero(ctx.work_order);
    for (long long twos = 0; twos <= nu.twos; ++twos) {
        for (long long ones = 0; ones + twos <= nu.rows(); ++ones) {
            TwoCol sub{ones, twos};
            Series tail = chain_eval(ctx, level + 1, sub);
            if (tail.is_zero()) continue;
            Series piece = skew_qprime_twocol(nu, sub, ctx.qbin_cache);
            if (piece.is_zero()) continue;
            Rational shift = ctx.sigma[level - 1] * Rational(nu.weight() - sub.weight());
            acc = acc + (piece * tail).shifted(shift).truncated(ctx.work_order);
        }
    }
    ctx.memo.emplace(key, acc);
    return acc;
}

} // namespace

Series qprime_2m(long long m, const AlphabetSpec& alphabet, const Rational& order) {
    if (alphabet.exponents.empty())
        throw std::invalid_argument("qprime_2m: alphabet must be nonempty");
    if (m < 0) throw std::invalid_argument("qprime_2m: m must be nonnegative");
    if (m == 0) return Series::one();

    ChainContext ctx;
    ctx.sigma = alphabet.exponents;
    // A truncated intermediate level can still be pulled down by later
    // letters: one chain step removes up to the full remaining weight 2m at
    // the most negative exponent, so the working margin is 2m * maxneg.
    for (const auto& s : ctx.sigma)
        if (s < Rational(0) && Rational(0) - s > ctx.maxneg) ctx.maxneg = Rational(0) - s;
    ctx.work_order = order + ctx.maxneg * Rational(2 * m);
    if (ctx.work_order < Rational(0)) return Series::zero(order);

    Series r = chain_eval(ctx, 1, TwoCol{0, m});
    return r.truncated(order);
}

namespace {

// hook content formula for s_lambda(1^n), exact
mpz_class schur_dimension(const Partition& lambda, long long n) {
    mpq_class acc(1);
    Partition lc = lambda.conjugate();
    for (long long i = 1; i <= lambda.length(); ++i) {
        for (long long j = 1; j <= lambda.part(i); ++j) {
            long long content = n + j - i;
            if (content <= 0) return 0;
            long long hook = (lambda.part(i) - j) + (lc.part(j) - i) + 1;
            acc *= mpq_class((long)content, (long)hook);
        }
    }
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw consistency_error("schur_dimension: hook content product is not an integer");
    return acc.get_num();
}

// all semistandard tableaux of the given shape with content (2^m),
// returned as reading words (rows top to bottom, each row right to left)
void ssyt_rec(const Partition& shape, long long m, long long cell_row, long long cell_col,
              std::vector<std::vector<int>>& rows, std::vector<int>& used,
              std::vector<std::vector<int>>& words) {
    if (cell_row > shape.length()) {
        std::vector<int> w;
        for (const auto& r : rows)
            for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
        words.push_back(std::move(w));
        return;
    }
    long long next_row = cell_row, next_col = cell_col + 1;
    if (next_col > shape.part(cell_row)) {
        next_row = cell_row + 1;
        next_col = 1;
    }
    int lo = 1;
    if (cell_col > 1) lo = rows[cell_row - 1][cell_col - 2];  // row-weak
    int above = (cell_row > 1 && shape.part(cell_row - 1) >= cell_col)
                    ? rows[cell_row - 2][cell_col - 1]
                    : 0;
    for (int v = std::max<int>(lo, above + 1); v <= (int)m; ++v) {  // column-strict
        if (used[v] == 2) continue;
        ++used[v];
        rows[cell_row - 1][cell_col - 1] = v;
        ssyt_rec(shape, m, next_row, next_col, rows, used, words);
        --used[v];
    }
}

} // namespace

long long charge_of_word(const std::vector<int>& word) {
    std::vector<char> taken(word.size(), 0);
    long long total = 0;
    size_t remaining = word.size();
    int maxletter = 0;
    for (int v : word) maxletter = std::max(maxletter, v);
    while (remaining > 0) {
        // extract one standard subword: the rightmost free 1, then each next
        // letter scanning rightward, wrapping around cyclically
        std::vector<long long> pos_of(maxletter + 1, -1);
        long long cur = -1;
        for (long long i = 0; i < (long long)word.size(); ++i)
            if (!taken[i] && word[i] == 1) cur = i;
        if (cur < 0) throw std::invalid_argument("charge_of_word: content is not a partition");
        taken[cur] = 1;
        pos_of[1] = cur;
        --remaining;
        int next = 2;
        while (next <= maxletter) {
            long long found = -1;
            for (long long step = 1; step <= (long long)word.size(); ++step) {
                long long i = (cur + step) % (long long)word.size();
                if (!taken[i] && word[i] == next) {
                    found = i;
                    break;
                }
            }
            if (found < 0) break;  // subword ends early (non-rectangular content)
            taken[found] = 1;
            pos_of[next] = found;
            cur = found;
            --remaining;
            ++next;
        }
        // index rule: index(1) = 0; index(r+1) = index(r) unless r+1 sits to
        // the left of r, which costs one more
        long long idx = 0;
        for (int r = 2; r < next; ++r) {
            if (pos_of[r] < pos_of[r - 1]) ++idx;
            total += idx;
        }
    }
    return total;
}

Series kostka_foulkes_oracle(long long m, long long n) {
    if (m < 0 || n < 1) throw std::invalid_argument("kostka_foulkes_oracle: bad arguments");
    if (m > 4 || n > 4)
        throw size_guard_error("kostka_foulkes_oracle: exhaustive tableau enumeration is "
                               "restricted to m <= 4, n <= 4");
    if (m == 0) return Series::one();

    Series acc;
    for (const Partition& shape : partitions_of(2 * m)) {
        mpz_class dim = schur_dimension(shape, n);
        if (dim == 0) continue;
        std::vector<std::vector<int>> rows;
        for (long long i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.part(i), 0);
        std::vector<int> used(m + 1, 0);
        std::vector<std::vector<int>> words;
        ssyt_rec(shape, m, 1, 1, rows, used, words);
        if (words.empty()) continue;
        Series k;  // K_{shape,(2^m)}(q)
        for (const auto& w : words) k = k + Series::monomial(1, Rational(charge_of_word(w)));
        acc = acc + k * Series::constant(dim);
    }
    return acc;
}

} // namespace qrr
