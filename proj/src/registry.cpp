#include "qrr/registry.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/sums.hpp"

namespace qrr {

std::string kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::theorem: return "theorem";
        case IdentityKind::conjecture: return "conjecture";
        case IdentityKind::classical: return "classical";
    }
    return "?";
}

Rational parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

long long Params::get_int(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    try {
        size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter '" + key + "' is not an integer: '" + it->second +
                                    "'");
    }
}

std::vector<Rational> Params::get_rationals(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    std::vector<Rational> out;
    std::string cur;
    std::istringstream is(it->second);
    while (std::getline(is, cur, ',')) out.push_back(parse_rational(cur));
    if (out.empty()) throw std::invalid_argument("parameter '" + key + "' is empty");
    return out;
}

std::string Params::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv_) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// shared side builders
// ---------------------------------------------------------------------------

Series ag_lhs(long long k, long long p, const Rational& bound) {
    FermionicSpec spec;
    spec.N = 2;
    spec.k = k;
    spec.p = p;
    return fermionic_sum(spec, bound);
}

Series ag_rhs_product(long long k, long long p, const Rational& bound) {
    return triple_product(p, 2 * k + 1, bound) * inverse_qinf_power(1, bound);
}

Series ag_rhs_lattice(long long k, long long p, const Rational& bound) {
    BosonicSpec spec;
    spec.dimension = 1;
    spec.modulus = 2 * k + 1;
    spec.half_integer_lattice = true;
    spec.base = {Rational(2 * (k - p) + 1, 2)};
    spec.weight = WeightKind::xi;
    spec.weight_ref = spec.base;
    spec.sign_rule = SignRule::parity_diff;
    spec.exp_denom = 2 * spec.modulus;
    return bosonic_sum(spec, bound) * inverse_qinf_power(1, bound);
}

// fermionic side of the A_{2n-1} family (N = 2n), linear columns p..k-1
Series gen_rr_lhs(long long n, long long k, long long p, LinearSign sign,
                  const Rational& bound) {
    FermionicSpec spec;
    spec.N = 2 * n;
    spec.k = k;
    spec.p = p;
    spec.linear_sign = sign;
    return fermionic_sum(spec, bound);
}

// lattice side of the A_{2n-1} family: v = rho + (k-p) + (2k+2n-1) t
Series gen_rr_rhs(long long n, long long k, long long p, const Rational& bound) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * k + 2 * n - 1;
    spec.half_integer_lattice = true;
    spec.base = shifted_by(rho_half(n), Rational(k - p));
    spec.weight = WeightKind::xi;
    spec.weight_ref = rho_half(n);
    spec.sign_rule = SignRule::parity_diff;
    spec.exp_denom = 2 * spec.modulus;
    return bosonic_sum(spec, bound) * inverse_qinf_power(n * (2 * n - 1), bound);
}

// fermionic side of the A_{2n} family (N = 2n+1)
Series fs_lhs(long long n, long long k, long long p, const Rational& bound) {
    FermionicSpec spec;
    spec.N = 2 * n + 1;
    spec.k = k;
    spec.p = p;
    return fermionic_sum(spec, bound);
}

// lattice side of the A_{2n} family: v = rho* + (k-p) + (2k+2n) t, chi weight
Series fs_rhs(long long n, long long k, long long p, const Rational& bound) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * k + 2 * n;
    spec.half_integer_lattice = false;
    spec.base = shifted_by(rho_star(n), Rational(k - p));
    spec.weight = WeightKind::chi;
    spec.weight_ref = rho_star(n);
    spec.sign_rule = SignRule::none;
    spec.exp_denom = 2 * spec.modulus;
    return bosonic_sum(spec, bound) * inverse_qinf_power(n * (2 * n + 1), bound);
}

// normalized eta-identity lattice sums, shifted by the eta prefactor
Series eta_family_rhs(const BosonicSpec& spec, const Rational& offset, const Rational& bound) {
    return bosonic_sum(spec, bound - offset).shifted(offset);
}

BosonicSpec a2n2_eta_spec(long long n) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * n + 1;
    spec.half_integer_lattice = true;
    spec.base = rho_half(n);
    spec.weight = WeightKind::xi;
    spec.weight_ref = rho_half(n);
    spec.sign_rule = SignRule::parity_diff;
    spec.exp_denom = 2 * spec.modulus;
    return spec;
}

BosonicSpec cn_eta_spec(long long n) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * n + 2;
    spec.half_integer_lattice = false;
    spec.base = rho_star(n);
    spec.weight = WeightKind::chi;
    spec.weight_ref = rho_star(n);
    spec.sign_rule = SignRule::none;
    spec.exp_denom = 2 * spec.modulus;
    return spec;
}

BosonicSpec a2n12_eta_spec(long long n) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * n;
    spec.half_integer_lattice = false;
    spec.base = rho_marked(n);
    spec.weight = WeightKind::xi;
    spec.weight_ref = rho_marked(n);
    spec.sign_rule = SignRule::parity_diff_over_modulus;
    spec.exp_denom = 2 * spec.modulus;
    return spec;
}

BosonicSpec a2n2_eta_even_spec(long long n) {
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * n + 1;
    spec.half_integer_lattice = true;
    spec.base = rho_half(n);
    spec.weight = WeightKind::chi;
    spec.weight_ref = rho_half(n);
    spec.sign_rule = SignRule::none;
    spec.exp_denom = 2 * spec.modulus;
    return spec;
}

// unified Bressoud/eta conjecture sides
Series conjb_lhs(long long N, long long k, const Rational& bound) {
    FermionicSpec spec;
    spec.N = N;
    spec.k = k;
    spec.p = k;  // no linear term
    spec.last_column = LastColumn::even;
    return fermionic_sum(spec, bound);
}

Series conjb_rhs(long long N, long long k, const Rational& bound) {
    long long n = N / 2;
    BosonicSpec spec;
    spec.dimension = n;
    spec.modulus = 2 * k + N - 2;
    spec.exp_denom = 2 * spec.modulus;
    if (N % 2 == 0) {
        spec.half_integer_lattice = false;
        spec.base = rho_marked(n);
        spec.weight = WeightKind::xi;
        spec.weight_ref = rho_marked(n);
        spec.sign_rule = SignRule::parity_diff_over_modulus;
    } else {
        spec.half_integer_lattice = true;
        spec.base = rho_half(n);
        spec.weight = WeightKind::chi;
        spec.weight_ref = rho_half(n);
        spec.sign_rule = SignRule::none;
    }
    return bosonic_sum(spec, bound) * inverse_qinf_power(N * (N - 1) / 2, bound);
}

void note_alt_linear_sign(long long N, long long k, long long p, const Rational& bound,
                          const Series& rhs, VerificationReport& rep) {
    if (p == k) return;  // no linear term, conventions coincide
    FermionicSpec spec;
    spec.N = N;
    spec.k = k;
    spec.p = p;
    spec.linear_sign = LinearSign::alternating_first_minus;
    Series alt = fermionic_sum(spec, bound);
    auto mm = Series::first_mismatch(alt, rhs, bound);
    std::ostringstream os;
    if (mm)
        os << "alternative linear sign (-1)^a: fails, first mismatch at q^"
           << mm->exponent.str() << " (" << mm->lhs.get_str() << " vs " << mm->rhs.get_str()
           << ")";
    else
        os << "alternative linear sign (-1)^a: also matches to order "
           << Series::effective_bound(alt, rhs, bound).str();
    rep.convention_notes.push_back(os.str());
}

long long require_range(const Params& p, const std::string& key, long long lo, long long hi) {
    long long v = p.get_int(key);
    if (v < lo || v > hi)
        throw std::invalid_argument("parameter '" + key + "' = " + std::to_string(v) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return v;
}

std::vector<IdentityEntry> build_registry() {
    std::vector<IdentityEntry> r;

    // --- Rogers-Ramanujan pair -------------------------------------------
    for (long long which : {1, 2}) {
        IdentityEntry e;
        e.id = "rr-" + std::to_string(which);
        e.kind = IdentityKind::classical;
        e.description = which == 1
                            ? "first Rogers-Ramanujan identity (modulus 5, residues 2,3)"
                            : "second Rogers-Ramanujan identity (modulus 5, residues 1,4)";
        e.default_order = 50;
        long long p = which == 1 ? 2 : 1;
        e.lhs = [p](const Params&, const Rational& b) { return ag_lhs(2, p, b); };
        e.rhs = [p](const Params&, const Rational& b) { return ag_rhs_product(2, p, b); };
        r.push_back(std::move(e));
    }

    // --- Andrews-Gordon --------------------------------------------------
    {
        IdentityEntry e;
        e.id = "andrews-gordon";
        e.kind = IdentityKind::classical;
        e.description = "Andrews-Gordon identities: odd modulus 2k+1, 1 <= p <= k";
        e.params = {{"k", "2", "number of columns + 1"}, {"p", "2", "residue parameter"}};
        e.default_order = 60;
        e.validate = [](const Params& p) {
            long long k = require_range(p, "k", 1, 16);
            require_range(p, "p", 1, k);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return ag_lhs(p.get_int("k"), p.get_int("p"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return ag_rhs_product(p.get_int("k"), p.get_int("p"), b);
        };
        e.extra = [](const Params& p, const Rational& b, VerificationReport& rep) {
            Series prod = ag_rhs_product(p.get_int("k"), p.get_int("p"), b);
            Series latt = ag_rhs_lattice(p.get_int("k"), p.get_int("p"), b);
            auto mm = Series::first_mismatch(prod, latt, b);
            if (mm) {
                rep.status = "fail";
                rep.convention_notes.push_back(
                    "rhs forms disagree: triple product vs lattice rewrite at q^" +
                    mm->exponent.str());
            } else {
                rep.convention_notes.push_back(
                    "rhs triple-product and lattice forms agree to order " +
                    Series::effective_bound(prod, latt, b).str());
            }
        };
        r.push_back(std::move(e));
    }

    // --- Bressoud ---------------------------------------------------------
    {
        IdentityEntry e;
        e.id = "bressoud";
        e.kind = IdentityKind::classical;
        e.description = "Bressoud identities: even modulus 2k, 1 <= p <= k "
                        "(k = 1 via the (q;q^2) convention)";
        e.params = {{"k", "2", ""}, {"p", "2", ""}};
        e.default_order = 60;
        e.validate = [](const Params& p) {
            long long k = require_range(p, "k", 1, 16);
            require_range(p, "p", 1, k);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            FermionicSpec spec;
            spec.N = 2;
            spec.k = p.get_int("k");
            spec.p = p.get_int("p");
            spec.last_column = LastColumn::even;
            return fermionic_sum(spec, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            long long k = p.get_int("k");
            return triple_product(p.get_int("p"), 2 * k, b) * inverse_qinf_power(1, b);
        };
        r.push_back(std::move(e));
    }

    // --- eta-function identities ------------------------------------------
    {
        IdentityEntry e;
        e.id = "macdonald-a2n2-eta";
        e.kind = IdentityKind::classical;
        e.description = "eta(tau)^{2n^2-n} as a xi-weighted lattice sum (odd modulus 2n+1)";
        e.params = {{"n", "1", ""}};
        e.default_order = 60;
        e.validate = [](const Params& p) { require_range(p, "n", 1, 6); };
        e.offset = [](const Params& p) {
            long long n = p.get_int("n");
            return Rational(2 * n * n - n, 24);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_quotient({{{1, 2 * n * n - n}}}, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_family_rhs(a2n2_eta_spec(n), Rational(2 * n * n - n, 24), b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "macdonald-cn-eta";
        e.kind = IdentityKind::classical;
        e.description = "eta(tau)^{2n^2+n} as a chi-weighted lattice sum (modulus 2n+2)";
        e.params = {{"n", "1", ""}};
        e.default_order = 60;
        e.validate = [](const Params& p) { require_range(p, "n", 1, 6); };
        e.offset = [](const Params& p) {
            long long n = p.get_int("n");
            return Rational(2 * n * n + n, 24);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_quotient({{{1, 2 * n * n + n}}}, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_family_rhs(cn_eta_spec(n), Rational(2 * n * n + n, 24), b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "jacobi-cube";
        e.kind = IdentityKind::classical;
        e.description = "(q)_inf^3 = sum (-1)^m (2m+1) q^{m(m+1)/2} (cube of the eta function)";
        e.default_order = 100;
        e.offset = [](const Params&) { return Rational(1, 8); };
        e.lhs = [](const Params&, const Rational& b) { return eta_quotient({{{1, 3}}}, b); };
        e.rhs = [](const Params&, const Rational& b) {
            return eta_family_rhs(cn_eta_spec(1), Rational(1, 8), b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "macdonald-a2n-1-2-eta";
        e.kind = IdentityKind::classical;
        e.description = "eta(tau)^{2n^2+n-1}/eta(2tau)^{2n-1} as a xi-weighted lattice sum "
                        "(modulus 2n)";
        e.params = {{"n", "1", ""}};
        e.default_order = 60;
        e.validate = [](const Params& p) { require_range(p, "n", 1, 6); };
        e.offset = [](const Params& p) {
            long long n = p.get_int("n");
            return Rational(2 * n * n - 3 * n + 1, 24);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_quotient({{{1, 2 * n * n + n - 1}, {2, -(2 * n - 1)}}}, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_family_rhs(a2n12_eta_spec(n), Rational(2 * n * n - 3 * n + 1, 24), b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "macdonald-a2n-2-eta-even";
        e.kind = IdentityKind::classical;
        e.description = "eta(tau)^{2n^2+3n}/eta(2tau)^{2n} as a chi-weighted lattice sum "
                        "(odd modulus 2n+1)";
        e.params = {{"n", "1", ""}};
        e.default_order = 60;
        e.validate = [](const Params& p) { require_range(p, "n", 1, 6); };
        e.offset = [](const Params& p) {
            long long n = p.get_int("n");
            return Rational(2 * n * n - n, 24);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_quotient({{{1, 2 * n * n + 3 * n}, {2, -2 * n}}}, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            long long n = p.get_int("n");
            return eta_family_rhs(a2n2_eta_even_spec(n), Rational(2 * n * n - n, 24), b);
        };
        r.push_back(std::move(e));
    }

    // --- generalized Rogers-Ramanujan family (A_{2n-1}) --------------------
    {
        IdentityEntry e;
        e.id = "theorem-1-2";
        e.kind = IdentityKind::theorem;
        e.description = "generalized Rogers-Ramanujan identities: A_{2n-1} Cartan double sum "
                        "vs modulus 2n+3 lattice sum (k = 2, p in {1,2})";
        e.params = {{"n", "1", ""}, {"p", "2", ""}};
        e.default_order = 40;
        e.validate = [](const Params& p) {
            require_range(p, "n", 1, 4);
            require_range(p, "p", 1, 2);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return gen_rr_lhs(p.get_int("n"), 2, p.get_int("p"),
                              LinearSign::alternating_first_plus, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return gen_rr_rhs(p.get_int("n"), 2, p.get_int("p"), b);
        };
        e.extra = [](const Params& p, const Rational& b, VerificationReport& rep) {
            Series rhs = gen_rr_rhs(p.get_int("n"), 2, p.get_int("p"), b);
            note_alt_linear_sign(2 * p.get_int("n"), 2, p.get_int("p"), b, rhs, rep);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "conjecture-1";
        e.kind = IdentityKind::conjecture;
        e.description = "A_{2n-1} Cartan-Kronecker multi-sum vs modulus 2k+2n-1 lattice sum "
                        "(p in {1,k}); k=1 is the eta identity, k=2 the proven theorem";
        e.params = {{"n", "1", ""}, {"k", "3", ""}, {"p", "@same:k", ""}};
        e.default_order = 30;
        e.validate = [](const Params& p) {
            require_range(p, "n", 1, 4);
            long long k = require_range(p, "k", 1, 6);
            long long pp = require_range(p, "p", 1, k);
            if (pp != 1 && pp != k)
                throw std::invalid_argument("parameter 'p' must be 1 or k for this entry");
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return gen_rr_lhs(p.get_int("n"), p.get_int("k"), p.get_int("p"),
                              LinearSign::alternating_first_plus, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return gen_rr_rhs(p.get_int("n"), p.get_int("k"), p.get_int("p"), b);
        };
        e.extra = [](const Params& p, const Rational& b, VerificationReport& rep) {
            Series rhs = gen_rr_rhs(p.get_int("n"), p.get_int("k"), p.get_int("p"), b);
            note_alt_linear_sign(2 * p.get_int("n"), p.get_int("k"), p.get_int("p"), b, rhs,
                                 rep);
        };
        r.push_back(std::move(e));
    }

    // --- A_{2n} family ------------------------------------------------------
    {
        IdentityEntry e;
        e.id = "theorem-fs";
        e.kind = IdentityKind::theorem;
        e.description = "A_{2n} Cartan-Kronecker multi-sum vs chi-weighted modulus 2k+2n "
                        "lattice sum, p = k";
        e.params = {{"n", "1", ""}, {"k", "2", ""}};
        e.default_order = 40;
        e.validate = [](const Params& p) {
            require_range(p, "n", 1, 4);
            require_range(p, "k", 1, 6);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return fs_lhs(p.get_int("n"), p.get_int("k"), p.get_int("k"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return fs_rhs(p.get_int("n"), p.get_int("k"), p.get_int("k"), b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "conjecture-2-2";
        e.kind = IdentityKind::conjecture;
        e.description = "the A_{2n} family at p = 1";
        e.params = {{"n", "1", ""}, {"k", "3", ""}};
        e.default_order = 30;
        e.validate = [](const Params& p) {
            require_range(p, "n", 1, 4);
            require_range(p, "k", 1, 6);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return fs_lhs(p.get_int("n"), p.get_int("k"), 1, b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return fs_rhs(p.get_int("n"), p.get_int("k"), 1, b);
        };
        e.extra = [](const Params& p, const Rational& b, VerificationReport& rep) {
            Series rhs = fs_rhs(p.get_int("n"), p.get_int("k"), 1, b);
            note_alt_linear_sign(2 * p.get_int("n") + 1, p.get_int("k"), 1, b, rhs, rep);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "theorem-2-4";
        e.kind = IdentityKind::theorem;
        e.description = "the A_{2n} family at k = 2: p = 1 (proved case) and the p = 2 "
                        "companion";
        e.params = {{"n", "1", ""}, {"p", "1", ""}};
        e.default_order = 40;
        e.validate = [](const Params& p) {
            require_range(p, "n", 1, 4);
            require_range(p, "p", 1, 2);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return fs_lhs(p.get_int("n"), 2, p.get_int("p"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return fs_rhs(p.get_int("n"), 2, p.get_int("p"), b);
        };
        r.push_back(std::move(e));
    }

    // --- unified Bressoud / eta conjecture ---------------------------------
    {
        IdentityEntry e;
        e.id = "conjecture-2-5";
        e.kind = IdentityKind::conjecture;
        e.description = "even-denominator multi-sum vs modulus 2k+N-2 lattice sums "
                        "(xi for even N, chi for odd N)";
        e.params = {{"N", "2", ""}, {"k", "2", ""}};
        e.default_order = 30;
        e.validate = [](const Params& p) {
            require_range(p, "N", 2, 6);
            require_range(p, "k", 1, 6);
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return conjb_lhs(p.get_int("N"), p.get_int("k"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return conjb_rhs(p.get_int("N"), p.get_int("k"), b);
        };
        r.push_back(std::move(e));
    }

    // --- internal equivalences and limits -----------------------------------
    {
        IdentityEntry e;
        e.id = "hl-vs-fermionic";
        e.kind = IdentityKind::theorem;
        e.description = "partition-tuple form of the multi-sum vs the quadratic-form "
                        "parametrization (independent enumerations)";
        e.params = {{"N", "3", ""}, {"k", "2", ""}, {"p", "@same:k", ""}};
        e.default_order = 15;
        e.validate = [](const Params& p) {
            require_range(p, "N", 2, 5);
            long long k = require_range(p, "k", 1, 4);
            long long pp = require_range(p, "p", 1, k);
            if (pp != 1 && pp != k)
                throw std::invalid_argument("parameter 'p' must be 1 or k for this entry");
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return hl_form_sum(p.get_int("N"), p.get_int("k"), p.get_int("p"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            FermionicSpec spec;
            spec.N = p.get_int("N");
            spec.k = p.get_int("k");
            spec.p = p.get_int("p");
            return fermionic_sum(spec, b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "hua";
        e.kind = IdentityKind::classical;
        e.description = "unrestricted partition-tuple sum vs the positive-root product "
                        "(A_{N-1} quiver identity) at z_a = q^{c_a}";
        e.params = {{"N", "2", ""}, {"z", "@zeros:N", "comma list of N-1 rational exponents"}};
        e.default_order = 20;
        e.validate = [](const Params& p) {
            long long N = require_range(p, "N", 2, 5);
            if ((long long)p.get_rationals("z").size() != N - 1)
                throw std::invalid_argument("parameter 'z' must list N-1 exponents");
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return hua_lhs(p.get_int("N"), p.get_rationals("z"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return hua_product(p.get_int("N"), p.get_rationals("z"), b);
        };
        r.push_back(std::move(e));
    }
    for (int variant = 1; variant <= 2; ++variant) {
        IdentityEntry e;
        e.id = "theorem-4-1-mod" + std::to_string(variant);
        e.kind = IdentityKind::theorem;
        e.description = variant == 1
                            ? "weighted modified Hall-Littlewood sum on the all-ones alphabet "
                              "vs the A_n Cartan double sum"
                            : "even-weighted modified Hall-Littlewood sum on the alternating "
                              "alphabet vs the A_n Cartan double sum with alternating linear "
                              "term";
        e.params = {{"n", "2", ""}};
        e.default_order = 30;
        e.validate = [](const Params& p) { require_range(p, "n", 1, 5); };
        e.lhs = [variant](const Params& p, const Rational& b) {
            return qprime_weighted_sum(
                p.get_int("n"),
                variant == 1 ? QprimeVariant::plain : QprimeVariant::alternating, b);
        };
        e.rhs = [variant](const Params& p, const Rational& b) {
            FermionicSpec spec;
            spec.N = p.get_int("n") + 1;
            spec.k = 2;
            spec.p = variant == 1 ? 2 : 1;
            return fermionic_sum(spec, b);
        };
        r.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "milne-specialized";
        e.kind = IdentityKind::theorem;
        e.description = "C_n Rogers-Selberg lattice sum vs the Pochhammer-prefactored "
                        "modified Hall-Littlewood sum at x_i = q^{sigma_i}";
        e.params = {{"n", "1", ""}, {"sigma", "1/3", "comma list of n rational exponents"}};
        e.default_order = 10;
        e.validate = [](const Params& p) {
            long long n = require_range(p, "n", 1, 3);
            if ((long long)p.get_rationals("sigma").size() != n)
                throw std::invalid_argument("parameter 'sigma' must list n exponents");
        };
        e.lhs = [](const Params& p, const Rational& b) {
            return milne_lhs(p.get_int("n"), p.get_rationals("sigma"), b);
        };
        e.rhs = [](const Params& p, const Rational& b) {
            return milne_rhs(p.get_int("n"), p.get_rationals("sigma"), b);
        };
        r.push_back(std::move(e));
    }

    return r;
}

} // namespace

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> entries = build_registry();
    return entries;
}

const IdentityEntry* find_identity(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

Params make_params(const IdentityEntry& entry,
                   const std::map<std::string, std::string>& overrides) {
    for (const auto& [k, v] : overrides) {
        bool known = false;
        for (const auto& d : entry.params) known |= (d.name == k);
        if (!known)
            throw std::invalid_argument("unknown parameter '" + k + "' for identity '" +
                                        entry.id + "'");
    }
    Params p;
    for (const auto& d : entry.params) {
        auto it = overrides.find(d.name);
        if (it != overrides.end()) {
            p.set(d.name, it->second);
            continue;
        }
        if (d.default_value.rfind("@same:", 0) == 0) {
            std::string src = d.default_value.substr(6);
            auto io = overrides.find(src);
            p.set(d.name, io != overrides.end() ? io->second : p.raw().at(src));
        } else if (d.default_value.rfind("@zeros:", 0) == 0) {
            long long count = p.get_int(d.default_value.substr(7)) - 1;
            std::string z;
            for (long long i = 0; i < count; ++i) z += (i ? ",0" : "0");
            p.set(d.name, z);
        } else {
            p.set(d.name, d.default_value);
        }
    }
    if (entry.validate) entry.validate(p);
    return p;
}

SidePair build_sides(const IdentityEntry& entry, const Params& params, long long order) {
    Rational bound = entry.offset ? entry.offset(params) + Rational(order) : Rational(order);
    SidePair sp;
    sp.bound = bound;
    sp.lhs = entry.lhs(params, bound);
    sp.rhs = entry.rhs(params, bound);
    return sp;
}

VerificationReport compare_and_report(const IdentityEntry& entry, const Params& params,
                                      long long order, const Series& lhs, const Series& rhs,
                                      const Rational& bound) {
    VerificationReport rep;
    rep.id = entry.id;
    rep.kind = entry.kind;
    rep.params = params.raw();
    rep.requested_order = order;
    rep.effective_order = Series::effective_bound(lhs, rhs, bound);
    auto mm = Series::first_mismatch(lhs, rhs, bound);
    if (mm) {
        rep.status = "fail";
        rep.first_mismatch = mm;
    } else {
        rep.status = "pass";
        if (entry.kind == IdentityKind::conjecture)
            rep.convention_notes.push_back("conjecture verified to order " +
                                           rep.effective_order.str() +
                                           " (evidence, not a proof)");
    }
    return rep;
}

VerificationReport verify(const IdentityEntry& entry, const Params& params, long long order) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    try {
        SidePair sp = build_sides(entry, params, order);
        rep = compare_and_report(entry, params, order, sp.lhs, sp.rhs, sp.bound);
        if (entry.extra) entry.extra(params, sp.bound, rep);
    } catch (const std::exception& ex) {
        rep.id = entry.id;
        rep.kind = entry.kind;
        rep.params = params.raw();
        rep.requested_order = order;
        rep.status = "error";
        rep.convention_notes.push_back(std::string("error: ") + ex.what());
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["id"] = report.id;
    j["kind"] = kind_name(report.kind);
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["order"] = report.requested_order;
    j["effective_order"] = report.effective_order.str();
    j["status"] = report.status;
    if (report.first_mismatch) {
        j["first_mismatch"] = {{"exponent_num", report.first_mismatch->exponent.num()},
                               {"exponent_den", report.first_mismatch->exponent.den()},
                               {"lhs_coeff", report.first_mismatch->lhs.get_str()},
                               {"rhs_coeff", report.first_mismatch->rhs.get_str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["wall_time_ms"] = report.wall_time_ms;
    j["convention_notes"] = report.convention_notes;
    return j.dump();
}

} // namespace qrr
