// eolab: verify the even-odd partition identities, print count tables and
// crank distributions, and run or trace the bijections.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eolab/bijections.hpp"
#include "eolab/error.hpp"
#include "eolab/format.hpp"
#include "eolab/harness.hpp"
#include "eolab/identities.hpp"
#include "eolab/overpartitions.hpp"
#include "eolab/partitions.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultOrder = 30;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_order() {
    const char* env = std::getenv("EO_LAB_ORDER");
    if (env == nullptr || *env == '\0') {
        return kDefaultOrder;
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 0) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("EO_LAB_ORDER must be a nonnegative integer, got '") + env + "'");
}

struct VerifyArgs {
    std::string identity;
    bool all = false;
    int order = kDefaultOrder;
    std::optional<int> r;
    std::optional<int> z_exp;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
    if (a.all == !a.identity.empty()) {
        throw UsageError("give exactly one of --identity NAME or --all");
    }
    std::vector<const eolab::CatalogEntry*> entries;
    if (a.all) {
        for (const auto& e : eolab::catalog()) {
            entries.push_back(&e);
        }
    } else {
        const eolab::CatalogEntry* e = eolab::find_catalog_entry(a.identity);
        if (e == nullptr) {
            std::string names;
            for (const auto& c : eolab::catalog()) {
                names += (names.empty() ? "" : ", ") + c.name;
            }
            throw UsageError("unknown identity '" + a.identity + "' (known: " + names + ")");
        }
        entries.push_back(e);
    }
    const eolab::OutputFormat fmt = eolab::parse_output_format(a.format);
    if (fmt == eolab::OutputFormat::Csv) {
        throw UsageError("verify supports --format text or json");
    }
    eolab::CatalogOptions opts;
    opts.order = a.order;
    opts.r = a.r;
    opts.z_exp = a.z_exp;

    std::vector<eolab::VerificationReport> reports;
    for (const eolab::CatalogEntry* e : entries) {
        for (auto& rep : e->run(opts)) {
            if (fmt == eolab::OutputFormat::Text) {
                std::cout << eolab::render_report(rep) << std::flush;
            }
            reports.push_back(std::move(rep));
        }
    }
    bool ok = true;
    int failed = 0;
    for (const auto& rep : reports) {
        if (!rep.passed()) {
            ok = false;
            ++failed;
        }
    }
    if (fmt == eolab::OutputFormat::Json) {
        std::cout << eolab::report_to_json(reports);
    } else {
        std::cout << (ok ? "ALL PASS" : "FAILED") << ": " << reports.size() - failed << "/"
                  << reports.size() << " reports passed\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_table(const std::string& kind, int max_n, const std::string& format) {
    if (max_n < 0) {
        throw UsageError("--max-n must be nonnegative");
    }
    const eolab::OutputFormat fmt = eolab::parse_output_format(format);
    std::vector<eolab::ClassCountRow> rows;
    if (kind == "eo") {
        rows = eolab::eo_table(max_n);
    } else if (kind == "eobar") {
        rows = eolab::eobar_table(max_n);
    } else {
        throw UsageError("unknown table '" + kind + "' (expected eo or eobar)");
    }
    std::cout << eolab::render_table(eolab::class_count_table(rows), fmt);
    return kExitPass;
}

int cmd_crank(int n, const std::string& format) {
    if (n < 0) {
        throw UsageError("n must be nonnegative");
    }
    const eolab::OutputFormat fmt = eolab::parse_output_format(format);
    std::cout << eolab::render_table(eolab::crank_table(eolab::crank_distribution(n)), fmt);
    return kExitPass;
}

struct BijectionArgs {
    std::string map;
    int r = 0;
    bool exhaustive = false;
    int max_weight = 20;
    bool trace = false;
    bool inverse = false;
    std::optional<std::string> lambda, pi, mu, nu, lstar, pstar, mstar, nstar;
};

eolab::Partition literal(const std::optional<std::string>& text, const std::string& flag) {
    if (!text) {
        throw UsageError("missing " + flag);
    }
    try {
        return eolab::parse_partition(*text);
    } catch (const eolab::DomainError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::string pair_string(const eolab::Partition& a, const eolab::Partition& b) {
    return "(" + eolab::to_string(a) + ", " + eolab::to_string(b) + ")";
}

// Runs one map on explicit input, prints the trace, then checks the round trip.
int trace_one(const BijectionArgs& a, eolab::BijectionMap map) {
    using eolab::Partition;
    eolab::BijectionTrace trace;
    Partition in1, in2, out1, out2, back1, back2;
    std::string which;
    const int r = a.r;
    int weight_in = 0;
    int weight_out = 0;
    int expected_out = 0;

    switch (map) {
    case eolab::BijectionMap::Phi: {
        if (!a.inverse) {
            in1 = literal(a.lambda, "--lambda");
            in2 = literal(a.pi, "--pi");
            const auto res = eolab::phi_forward(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second, which = eolab::to_string(res.which);
            const auto back = eolab::phi_inverse(out1, out2, r);
            back1 = back.first, back2 = back.second;
        } else {
            in1 = literal(a.mu, "--mu");
            in2 = literal(a.nu, "--nu");
            const auto res = eolab::phi_inverse(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second, which = eolab::to_string(res.which);
            const auto back = eolab::phi_forward(out1, out2, r);
            back1 = back.first, back2 = back.second;
        }
        weight_in = in1.weight() + in2.weight();
        expected_out = weight_in;
        break;
    }
    case eolab::BijectionMap::Lemma2:
    case eolab::BijectionMap::Lemma3: {
        const bool l2 = map == eolab::BijectionMap::Lemma2;
        if (!a.inverse) {
            in1 = l2 ? literal(a.lambda, "--lambda") : literal(a.mu, "--mu");
            in2 = l2 ? literal(a.pi, "--pi") : literal(a.nu, "--nu");
            const auto res = l2 ? eolab::lemma2_forward(in1, in2, r, &trace)
                                : eolab::lemma3_forward(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second;
            const auto back =
                l2 ? eolab::lemma2_inverse(out1, out2, r) : eolab::lemma3_inverse(out1, out2, r);
            back1 = back.first, back2 = back.second;
            expected_out = 4 * (in1.weight() + in2.weight()) + 2 * r;
        } else {
            in1 = l2 ? literal(a.lstar, "--lstar") : literal(a.mstar, "--mstar");
            in2 = l2 ? literal(a.pstar, "--pstar") : literal(a.nstar, "--nstar");
            const auto res = l2 ? eolab::lemma2_inverse(in1, in2, r, &trace)
                                : eolab::lemma3_inverse(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second;
            const auto back =
                l2 ? eolab::lemma2_forward(out1, out2, r) : eolab::lemma3_forward(out1, out2, r);
            back1 = back.first, back2 = back.second;
            expected_out = (in1.weight() + in2.weight() - 2 * r) / 4;
        }
        weight_in = in1.weight() + in2.weight();
        break;
    }
    case eolab::BijectionMap::Crank: {
        if (!a.inverse) {
            in1 = literal(a.lstar, "--lstar");
            in2 = literal(a.pstar, "--pstar");
            const auto res = eolab::crank_bijection(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second, which = eolab::to_string(res.middle);
            const auto back = eolab::crank_bijection_inverse(out1, out2, r);
            back1 = back.first, back2 = back.second;
        } else {
            in1 = literal(a.mstar, "--mstar");
            in2 = literal(a.nstar, "--nstar");
            const auto res = eolab::crank_bijection_inverse(in1, in2, r, &trace);
            out1 = res.first, out2 = res.second, which = eolab::to_string(res.middle);
            const auto back = eolab::crank_bijection(out1, out2, r);
            back1 = back.first, back2 = back.second;
        }
        weight_in = in1.weight() + in2.weight();
        expected_out = weight_in;
        break;
    }
    }
    weight_out = out1.weight() + out2.weight();

    std::cout << eolab::to_string(map) << (a.inverse ? " inverse" : "") << ", r=" << r << "\n";
    std::cout << eolab::render_trace(trace);
    std::cout << "input  " << pair_string(in1, in2) << ", weight " << weight_in << "\n";
    std::cout << "output " << pair_string(out1, out2) << ", weight " << weight_out << "\n";
    if (!which.empty()) {
        std::cout << "case   " << which << "\n";
    }
    if (map == eolab::BijectionMap::Crank && !a.inverse) {
        std::cout << "eoc    " << eolab::eoc(out2) << "\n";
    }
    const bool weight_ok = weight_out == expected_out;
    const bool round_trip = back1 == in1 && back2 == in2;
    std::cout << (weight_ok ? "PASS" : "FAIL") << " weight law (expected " << expected_out << ")\n";
    std::cout << (round_trip ? "PASS" : "FAIL") << " round trip gives " << pair_string(back1, back2)
              << "\n";
    return weight_ok && round_trip ? kExitPass : kExitFail;
}

int cmd_bijection(const BijectionArgs& a) {
    const eolab::BijectionMap map = eolab::parse_bijection_map(a.map);
    if (a.r < 0) {
        throw UsageError("--r must be nonnegative");
    }
    if (a.exhaustive == a.trace) {
        throw UsageError("give exactly one of --exhaustive or --trace");
    }
    if (a.exhaustive) {
        if (a.max_weight < 0) {
            throw UsageError("--max-weight must be nonnegative");
        }
        const eolab::HarnessReport rep = eolab::run_harness(map, a.r, a.max_weight);
        std::cout << eolab::render_harness(rep);
        return rep.passed() ? kExitPass : kExitFail;
    }
    try {
        return trace_one(a, map);
    } catch (const eolab::DomainError& e) {
        std::cout << "FAIL input outside the domain of " << eolab::to_string(map)
                  << (a.inverse ? " inverse" : "") << ": " << e.what() << "\n";
        return kExitFail;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for partitions with even parts below odd parts"};
    app.require_subcommand(1);

    int order = kDefaultOrder;
    try {
        order = default_order();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    VerifyArgs va;
    va.order = order;
    auto* verify = app.add_subcommand("verify", "Verify identities from the catalog");
    verify->add_option("--identity", va.identity, "Identity name (see --list)");
    verify->add_flag("--all", va.all, "Run the whole catalog");
    bool list = false;
    verify->add_flag("--list", list, "List identity names and exit");
    verify->add_option("--order", va.order,
                       "Truncation order N (default 30, or EO_LAB_ORDER when set)");
    verify->add_option("--r", va.r, "Restrict to a single r where the identity takes one");
    verify->add_option("--z-exp", va.z_exp, "Specialize z = q^e where the identity takes z");
    verify->add_option("--format", va.format, "text or json")->capture_default_str();

    std::string table_kind;
    int max_n = kDefaultOrder;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Counts by largest even part mod 4");
    table->add_option("kind", table_kind, "eo or eobar")->required();
    table->add_option("--max-n", max_n, "Largest weight (default 30)")->capture_default_str();
    table->add_option("--format", table_format, "text, csv or json")->capture_default_str();

    int crank_n = 0;
    std::string crank_format = "text";
    auto* crank = app.add_subcommand("crank", "Distribution of the even-odd crank at weight n");
    crank->add_option("n", crank_n, "Weight")->required();
    crank->add_option("--format", crank_format, "text, csv or json")->capture_default_str();

    BijectionArgs ba;
    auto* bij = app.add_subcommand("bijection", "Run a bijection exhaustively or trace one input");
    bij->add_option("map", ba.map, "phi, lemma2, lemma3 or crank")->required();
    bij->add_option("--r", ba.r, "Rectangle offset r")->capture_default_str();
    bij->add_flag("--exhaustive", ba.exhaustive, "Round-trip every input up to --max-weight");
    bij->add_option("--max-weight", ba.max_weight, "Input weight bound")->capture_default_str();
    bij->add_flag("--trace", ba.trace, "Trace a single input with Young diagrams");
    bij->add_flag("--inverse", ba.inverse, "Trace the inverse map");
    bij->add_option("--lambda", ba.lambda, "Partition literal, e.g. 3,1,1");
    bij->add_option("--pi", ba.pi, "Partition literal");
    bij->add_option("--mu", ba.mu, "Partition literal");
    bij->add_option("--nu", ba.nu, "Partition literal");
    bij->add_option("--lstar", ba.lstar, "Partition literal");
    bij->add_option("--pstar", ba.pstar, "Partition literal");
    bij->add_option("--mstar", ba.mstar, "Partition literal");
    bij->add_option("--nstar", ba.nstar, "Partition literal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (list) {
                for (const auto& e : eolab::catalog()) {
                    std::cout << e.name << "  " << e.summary << "\n";
                }
                return kExitPass;
            }
            return cmd_verify(va);
        }
        if (table->parsed()) {
            return cmd_table(table_kind, max_n, table_format);
        }
        if (crank->parsed()) {
            return cmd_crank(crank_n, crank_format);
        }
        if (bij->parsed()) {
            return cmd_bijection(ba);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eolab::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const eolab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
