// permtodd: exact Berline-Vergne values, Todd class expansions and Ehrhart
// checks on the braid fan. Exit codes: 0 success, 1 failed check, 2 bad usage.

#include "permtodd/chow.hpp"
#include "permtodd/ehrhart.hpp"
#include "permtodd/kernels.hpp"
#include "permtodd/spider.hpp"
#include "permtodd/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace permtodd;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Int>
std::vector<Int> parse_list(const std::string& text, const char* what) {
    std::vector<Int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<Int>(v));
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
        }
    }
    return out;
}

json sizes_json(const std::vector<int>& sizes) { return json(sizes); }

int cmd_alpha(int d, const std::string& chain_text, const std::string& format) {
    spider::SizeChain chain{d, parse_list<int>(chain_text, "chain")};
    const Rational v = spider::alpha(chain);
    if (format == "json")
        std::cout << json{{"command", "alpha"}, {"d", d}, {"chain", sizes_json(chain.sizes)}, {"alpha", to_string(v)}}.dump()
                  << "\n";
    else
        std::cout << to_string(v) << "\n";
    return kExitOk;
}

int cmd_scan(int max_d, int max_k, const std::string& format, unsigned jobs) {
    if (max_k > max_d) throw UsageError("scan: --max-k must not exceed --max-d");
    const auto hits = spider::scan_negative(max_d, max_k, jobs);
    if (format == "json") {
        json rows = json::array();
        for (const auto& h : hits)
            rows.push_back({{"d", h.chain.d}, {"sizes", sizes_json(h.chain.sizes)}, {"alpha", to_string(h.value)}});
        std::cout << json{{"command", "scan"}, {"max_d", max_d}, {"max_k", max_k}, {"negatives", rows}}.dump() << "\n";
    } else {
        std::cout << "d,sizes,alpha\n";
        for (const auto& h : hits) {
            std::string sizes;
            for (std::size_t i = 0; i < h.chain.sizes.size(); ++i) sizes += (i ? "," : "") + std::to_string(h.chain.sizes[i]);
            std::cout << h.chain.d << ",\"" << sizes << "\"," << to_string(h.value) << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& target, int d, const std::string& format) {
    if (!verify::known_target(target)) throw UsageError("verify: unknown target '" + target + "'");
    const auto checks = verify::run(target, verify::Options{d});
    bool all = true;
    json rows = json::array();
    for (const auto& c : checks) {
        all &= c.pass;
        if (format == "json")
            rows.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        else
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                      << "\n";
    }
    if (format == "json")
        std::cout << json{{"command", "verify"}, {"target", target}, {"checks", rows}, {"pass", all}}.dump() << "\n";
    else
        std::cout << (all ? "verify " + target + ": pass" : "verify " + target + ": FAIL") << "\n";
    return all ? kExitOk : kExitFailed;
}

void print_polynomial(const std::string& kind, const json& params, const PolynomialQ& p, const std::string& format) {
    if (format == "json") {
        json coeffs = json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
        std::cout << json{{"command", "ehrhart"}, {"kind", kind}, {"params", params}, {"coefficients", coeffs},
                          {"polynomial", p.str()}}
                         .dump()
                  << "\n";
    } else {
        std::cout << p.str() << "\n";
    }
}

int cmd_ehrhart_perm(const std::string& v_text, const std::string& format) {
    ehrhart::PermSpec v{parse_list<std::int64_t>(v_text, "vector")};
    if (v.v.empty()) throw UsageError("ehrhart perm: --v must be nonempty");
    if (!v.generic())
        std::cerr << "warning: v is not generic; face operations (mcmullen, faces) reject it\n";
    print_polynomial("perm", json{{"v", v.v}}, ehrhart::ehrhart_of(v), format);
    return kExitOk;
}

int cmd_ehrhart_hypersimplex(int k, int n, const std::string& format) {
    print_polynomial("hypersimplex", json{{"k", k}, {"n", n}}, ehrhart::hypersimplex_ehrhart(k, n), format);
    return kExitOk;
}

int cmd_todd(int d, int max_deg, bool check) {
    if (d < 0) throw UsageError("todd: --d must be nonnegative");
    if (max_deg < 0) max_deg = d;
    const auto expr = chow::todd_from_alpha(d, max_deg);
    std::cout << expr.to_json() << "\n";
    if (!check) return kExitOk;
    if (d > 5) throw UsageError("todd --check: supported for d <= 5");
    const bool ok = d == 0 || chow::todd_squarefree(d, max_deg) == expr;
    std::cerr << "check (subset expansion vs spider formula): " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Berline-Vergne values and Todd class expansions on the braid fan"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Report wall time on stderr");

    std::string format = "text";
    int d = 0;
    std::string chain;
    auto* alpha = app.add_subcommand("alpha", "alpha^BV of one braid cone, given by its chain sizes");
    alpha->add_option("--d", d, "Ambient dimension")->required();
    alpha->add_option("--chain", chain, "Comma-separated sizes, e.g. 10,12,13,15 (omit for the trivial cone)");
    alpha->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int max_d = 0, max_k = 0;
    unsigned jobs = 1;
    std::string table_format = "csv";
    auto* scan = app.add_subcommand("scan", "List every chain with a negative alpha");
    scan->add_option("--max-d", max_d)->required()->check(CLI::PositiveNumber);
    scan->add_option("--max-k", max_k)->required()->check(CLI::PositiveNumber);
    scan->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

    std::string target;
    int verify_d = 3;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("target", target, "mcmullen|chow|hypersimplex|closedforms|counts")->required();
    verify->add_option("--d", verify_d, "Dimension for mcmullen (2,3) and chow (1..5)");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of a permutohedron or hypersimplex");
    ehr->require_subcommand(1);
    ehr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    std::string v_text;
    auto* perm = ehr->add_subcommand("perm", "Perm(v) by brute-force counting and interpolation");
    perm->add_option("--v", v_text, "Comma-separated integer entries")->required();
    int hk = 0, hn = 0;
    auto* hyper = ehr->add_subcommand("hypersimplex", "Delta_{k,n} by the closed form");
    hyper->add_option("--k", hk)->required();
    hyper->add_option("--n", hn)->required();

    int max_deg = -1;
    bool check = false;
    auto* todd = app.add_subcommand("todd", "Symmetric square-free Todd class of X_d as JSON");
    todd->add_option("--d", d)->required();
    todd->add_option("--max-deg", max_deg, "Truncate at this total degree (default d)");
    todd->add_flag("--check", check, "Also expand over explicit subsets and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = kExitOk;
    try {
        if (*alpha) rc = cmd_alpha(d, chain, format);
        else if (*scan) rc = cmd_scan(max_d, max_k, table_format, jobs == 0 ? std::thread::hardware_concurrency() : jobs);
        else if (*verify) rc = cmd_verify(target, verify_d, format);
        else if (*perm) rc = cmd_ehrhart_perm(v_text, format);
        else if (*hyper) rc = cmd_ehrhart_hypersimplex(hk, hn, format);
        else if (*todd) rc = cmd_todd(d, max_deg, check);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (timing) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed: " << dt.count() << " s (kernel: " << kernels::isa_name(kernels::detected_isa()) << ")\n";
    }
    return rc;
}
