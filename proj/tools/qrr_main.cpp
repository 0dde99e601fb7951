// qrr: exact verification of q-series identities and the dilogarithm checks.
//
// Subcommands:
//   list                       catalog of identities
//   verify --id X [--param k=v]... [--order N] [--json PATH]
//   suite  --config PATH       run a JSON suite with a worker pool
//   dilog  [--max-K 8] [--max-N 8] [--max-k 6] [--json PATH]
//
// Exit codes: 0 all theorem-class checks pass (conjecture failures only count
// with fail-on-conjecture), 1 mismatch, 2 usage/config error, 3 internal
// consistency error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "qrr/dilog.hpp"
#include "qrr/errors.hpp"
#include "qrr/registry.hpp"

using namespace qrr;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_MISMATCH = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_INTERNAL = 3;

std::map<std::string, std::string> parse_param_flags(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

void print_report(const VerificationReport& r, std::ostream& os) {
    os << r.id;
    if (!r.params.empty()) {
        os << " [";
        bool first = true;
        for (const auto& [k, v] : r.params) {
            os << (first ? "" : ", ") << k << "=" << v;
            first = false;
        }
        os << "]";
    }
    os << " (" << kind_name(r.kind) << ")"
       << " order " << r.requested_order << ": " << r.status;
    if (r.first_mismatch)
        os << " at q^" << r.first_mismatch->exponent.str() << " ("
           << r.first_mismatch->lhs.get_str() << " vs " << r.first_mismatch->rhs.get_str()
           << ")";
    os << "  [" << std::fixed << std::setprecision(1) << r.wall_time_ms << " ms]\n";
    for (const auto& n : r.convention_notes) os << "    note: " << n << "\n";
}

int exit_code_for(const std::vector<VerificationReport>& reports, bool fail_on_conjecture) {
    int code = EXIT_OK;
    for (const auto& r : reports) {
        if (r.status == "error") return EXIT_INTERNAL;
        if (r.status == "fail") {
            bool counts = fail_on_conjecture || r.kind != IdentityKind::conjecture;
            if (counts) code = EXIT_MISMATCH;
        }
    }
    return code;
}

void write_reports_json(const std::vector<VerificationReport>& reports,
                        const std::string& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_to_json(r)));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << arr.dump(2) << "\n";
}

int cmd_list() {
    for (const auto& e : registry()) {
        std::cout << std::left << std::setw(26) << e.id << std::setw(12) << kind_name(e.kind)
                  << "order " << std::setw(5) << e.default_order;
        if (!e.params.empty()) {
            std::cout << " params ";
            bool first = true;
            for (const auto& d : e.params) {
                std::cout << (first ? "" : ",") << d.name << "=" << d.default_value;
                first = false;
            }
        }
        std::cout << "\n    " << e.description << "\n";
    }
    return EXIT_OK;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& param_flags,
               long long order, const std::string& json_path, bool fail_on_conjecture) {
    const IdentityEntry* entry = find_identity(id);
    if (!entry) {
        std::cerr << "error: unknown identity '" << id << "' (see `qrr list`)\n";
        return EXIT_USAGE;
    }
    Params params;
    try {
        params = make_params(*entry, parse_param_flags(param_flags));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }
    if (order <= 0) order = entry->default_order;
    VerificationReport rep = verify(*entry, params, order);
    print_report(rep, std::cout);
    if (!json_path.empty()) write_reports_json({rep}, json_path);
    return exit_code_for({rep}, fail_on_conjecture);
}

struct SuiteEntry {
    const IdentityEntry* entry;
    Params params;
    long long order;
};

int cmd_suite(const std::string& config_path) {
    nlohmann::json cfg;
    try {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open " + config_path);
        in >> cfg;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }

    bool fail_on_conjecture = false;
    long long parallelism = 1;
    std::string output_path;
    std::vector<SuiteEntry> entries;
    try {
        if (!cfg.contains("schema") || cfg["schema"].get<long long>() != 1)
            throw std::invalid_argument("config must declare \"schema\": 1");
        fail_on_conjecture = cfg.value("fail_on_conjecture", false);
        parallelism = cfg.value("parallelism", 1ll);
        output_path = cfg.value("output_path", std::string());
        if (!cfg.contains("entries") || !cfg["entries"].is_array())
            throw std::invalid_argument("config needs an \"entries\" array");
        // validate everything before any computation starts
        for (const auto& je : cfg["entries"]) {
            std::string id = je.at("id").get<std::string>();
            const IdentityEntry* entry = find_identity(id);
            if (!entry) throw std::invalid_argument("unknown identity '" + id + "'");
            std::map<std::string, std::string> overrides;
            if (je.contains("params"))
                for (const auto& [k, v] : je["params"].items())
                    overrides[k] = v.is_string() ? v.get<std::string>()
                                                 : nlohmann::json(v).dump();
            Params params = make_params(*entry, overrides);
            long long order = je.value("order", entry->default_order);
            if (order <= 0) throw std::invalid_argument("order must be positive");
            entries.push_back({entry, std::move(params), order});
        }
    } catch (const std::exception& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }

    if (const char* env = std::getenv("QRR_THREADS")) {
        try {
            parallelism = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "error: QRR_THREADS is not an integer\n";
            return EXIT_USAGE;
        }
    }
    parallelism = std::max(1ll, std::min<long long>(parallelism, (long long)entries.size()));

    std::vector<VerificationReport> reports(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            reports[i] = verify(*entries[i].entry, entries[i].params, entries[i].order);
        }
    };
    std::vector<std::thread> pool;
    for (long long t = 1; t < parallelism; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // output strictly in entry order
    for (const auto& r : reports) print_report(r, std::cout);
    long long passed = 0;
    for (const auto& r : reports) passed += (r.status == "pass");
    std::cout << passed << "/" << reports.size() << " checks passed\n";
    if (!output_path.empty()) write_reports_json(reports, output_path);
    return exit_code_for(reports, fail_on_conjecture);
}

int cmd_dilog(int max_K, int max_N, int max_k, const std::string& json_path) {
    const double PI = 3.141592653589793238462643383279502884;
    nlohmann::json out;
    bool ok = true;

    double worst_kir = 0;
    for (int K = 2; K <= max_K; ++K)
        for (int N = 2; N <= max_N; ++N) {
            auto [l, r] = kirillov_check(K, N);
            worst_kir = std::max(worst_kir, std::fabs(l - r));
        }
    std::cout << "A-type dilogarithm identity, K <= " << max_K << ", N <= " << max_N
              << ": max |lhs-rhs| = " << worst_kir << "\n";
    ok &= worst_kir < 1e-10;

    double worst_even = 0;
    for (int k = 1; k <= max_k; ++k)
        for (int N = 2; N <= max_N; ++N) {
            auto [l, r] = kirillov_even_check(k, N);
            worst_even = std::max(worst_even, std::fabs(l - r));
        }
    std::cout << "even-modulus reduction, k <= " << max_k << ", N <= " << max_N
              << ": max |lhs-rhs| = " << worst_even << "\n";
    ok &= worst_even < 1e-10;

    double worst_tba = 0, worst_closed = 0;
    for (int N = 2; N <= std::min(max_N, 6); ++N)
        for (int k = 2; k <= std::min(max_k, 6); ++k) {
            DilogSystem sys = tba_solve(N, k);
            if (!sys.converged) {
                std::cout << "fixed-point iteration failed for N=" << N << " k=" << k
                          << " (residual " << sys.residual << ")\n";
                ok = false;
                continue;
            }
            worst_tba = std::max(worst_tba, sys.residual);
            auto closed = tba_closed_form(N, k);
            worst_closed = std::max(worst_closed, tba_system_residual(N, k, closed));
        }
    std::cout << "fixed-point systems: iteration residual <= " << worst_tba
              << ", closed-form residual <= " << worst_closed << "\n";
    ok &= worst_tba < 1e-12 && worst_closed < 1e-12;

    double worst_refl = 0;
    for (int i = 1; i <= 99; ++i) {
        double x = i / 100.0;
        worst_refl = std::max(
            worst_refl, std::fabs(rogers_dilog(x) + rogers_dilog(1 - x) - PI * PI / 6));
    }
    std::cout << "reflection law on the 99-point grid: max defect = " << worst_refl << "\n";
    ok &= worst_refl < 1e-12;

    if (!json_path.empty()) {
        out["kirillov_max_abs_err"] = worst_kir;
        out["even_modulus_max_abs_err"] = worst_even;
        out["tba_iteration_residual"] = worst_tba;
        out["tba_closed_form_residual"] = worst_closed;
        out["reflection_max_defect"] = worst_refl;
        out["pass"] = ok;
        std::ofstream f(json_path);
        f << out.dump(2) << "\n";
    }
    std::cout << (ok ? "dilog checks passed" : "dilog checks FAILED") << "\n";
    return ok ? EXIT_OK : EXIT_MISMATCH;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity verification"};
    app.require_subcommand(1);

    app.add_subcommand("list", "print the identity catalog");

    auto* sv = app.add_subcommand("verify", "verify one identity");
    std::string id, json_path;
    std::vector<std::string> param_flags;
    long long order = 0;
    bool fail_on_conjecture = false;
    sv->add_option("--id", id, "identity id")->required();
    sv->add_option("--param", param_flags, "parameter key=value (repeatable)");
    sv->add_option("--order", order, "verification order (default: per entry)");
    sv->add_option("--json", json_path, "write the report as JSON");
    sv->add_flag("--fail-on-conjecture", fail_on_conjecture,
                 "exit 1 when a conjecture entry mismatches");

    auto* ss = app.add_subcommand("suite", "run a suite from a JSON config");
    std::string config_path;
    ss->add_option("--config", config_path, "suite config path")->required();

    auto* sd = app.add_subcommand("dilog", "run the dilogarithm grid checks");
    int max_K = 8, max_N = 8, max_k = 6;
    std::string dilog_json;
    sd->add_option("--max-K", max_K, "largest K for the A-type identity");
    sd->add_option("--max-N", max_N, "largest rank parameter N");
    sd->add_option("--max-k", max_k, "largest k for the even-modulus grid");
    sd->add_option("--json", dilog_json, "write the summary as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("verify"))
            return cmd_verify(id, param_flags, order, json_path, fail_on_conjecture);
        if (app.got_subcommand("suite")) return cmd_suite(config_path);
        if (app.got_subcommand("dilog")) return cmd_dilog(max_K, max_N, max_k, dilog_json);
    } catch (const consistency_error& ex) {
        std::cerr << "internal consistency error: " << ex.what() << "\n";
        return EXIT_INTERNAL;
    } catch (const integrality_error& ex) {
        std::cerr << "internal consistency error: " << ex.what() << "\n";
        return EXIT_INTERNAL;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
