#include "bstab/cli.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bstab/bijections.hpp"
#include "bstab/hecke.hpp"
#include "bstab/jaggedness.hpp"
#include "bstab/report.hpp"
#include "bstab/tableaux.hpp"

namespace bstab::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string target;  // count kind or verify claim
    std::optional<std::string> shape;
    std::optional<int> k;
    std::optional<int> a;
    std::optional<int> b;
    std::optional<int> d;
    std::optional<int> n;
    std::optional<int> ell;
    std::optional<std::string> perm;
    std::string format;
    int threads = 1;
    double limit = kDefaultLimit;
    bool timing = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Partition require_shape(const RunConfig& cfg) {
    if (!cfg.shape) {
        throw UsageError(cfg.command + " " + cfg.target + ": --shape is required");
    }
    return Partition::parse(*cfg.shape);
}

int require_int(const std::optional<int>& v, const char* flag, const RunConfig& cfg) {
    if (!v) {
        throw UsageError(cfg.command + " " + cfg.target + ": " + flag + " is required");
    }
    return *v;
}

void check_limit(double estimate, const RunConfig& cfg) {
    if (estimate > cfg.limit) {
        std::ostringstream os;
        os << "estimated work " << estimate << " exceeds --limit " << cfg.limit;
        throw LimitError(os.str());
    }
}

void guard_tableaux(const Partition& lambda, int k, const RunConfig& cfg) {
    check_limit(estimate_tableau_work(lambda, k), cfg);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

void write_text(const VerificationReport& r, std::ostream& out, int depth) {
    const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    out << indent << r.claim << ' ' << r.params.dump() << ": lhs = " << r.lhs << ", rhs = " << r.rhs << " -> "
        << (r.equal ? "equal" : "NOT EQUAL") << '\n';
    if (!r.note.empty()) {
        out << indent << "  note: " << r.note << '\n';
    }
    for (const auto& d : r.details) {
        write_text(d, out, depth + 1);
    }
}

void write_csv_rows(const VerificationReport& r, std::ostream& out) {
    out << csv_field(r.claim) << ',' << csv_field(r.params.dump()) << ',' << csv_field(r.lhs) << ','
        << csv_field(r.rhs) << ',' << (r.equal ? "true" : "false") << '\n';
    for (const auto& d : r.details) {
        write_csv_rows(d, out);
    }
}

void write_report(const VerificationReport& r, const RunConfig& cfg, double elapsed_ms, std::ostream& out) {
    if (cfg.format == "json") {
        auto j = r.to_json();
        if (cfg.timing) {
            j["elapsed_ms"] = elapsed_ms;
        }
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "claim,params,lhs,rhs,equal\n";
        write_csv_rows(r, out);
    } else {
        write_text(r, out, 0);
        if (cfg.timing) {
            out << "elapsed_ms: " << elapsed_ms << '\n';
        }
    }
}

VerificationReport toggle_summary(const Partition& lambda, int k, int threads) {
    VerificationReport r;
    r.claim = "togglesym";
    r.params["shape"] = lambda.to_string();
    r.params["k"] = k;
    r.details = check_toggle_symmetric(lambda, k, threads);
    BigInteger in(0);
    BigInteger out(0);
    bool all = true;
    for (const auto& cell : r.details) {
        in += BigInteger::parse(cell.lhs);
        out += BigInteger::parse(cell.rhs);
        all = all && cell.equal;
    }
    r.lhs = in.to_string();
    r.rhs = out.to_string();
    r.equal = all;
    r.note = "lhs: total toggle-in incidences; rhs: total toggle-out incidences; details per square";
    return r;
}

VerificationReport dispatch_verify(const RunConfig& cfg) {
    const std::string& claim = cfg.target;
    if (claim == "conjecture11") {
        const int a = require_int(cfg.a, "--a", cfg);
        const int b = require_int(cfg.b, "--b", cfg);
        const int d = require_int(cfg.d, "--d", cfg);
        const int k = require_int(cfg.k, "--k", cfg);
        guard_tableaux(rect_staircase(a, b, d), k, cfg);
        return verify_conjecture_rect(a, b, d, k);
    }
    if (claim == "fk14") {
        const int n = require_int(cfg.n, "--n", cfg);
        check_limit(estimate_fk_work(n, n * (n - 1) / 2), cfg);
        return verify_fk_longest(n);
    }

    const Partition lambda = require_shape(cfg);
    if (claim == "fk36") {
        std::vector<int> ks;
        const int kmax = cfg.k.value_or(3);
        for (int k = 1; k <= kmax; ++k) {
            ks.push_back(k);
        }
        check_limit(estimate_fk_work(minimal_dominant_size(lambda), lambda.size() + 1), cfg);
        return verify_fk_ratio(lambda, ks, cfg.threads);
    }

    const int k = require_int(cfg.k, "--k", cfg);
    if (k < 1) {
        throw UsageError("--k must be positive");
    }
    guard_tableaux(lambda, k, cfg);
    if (claim == "theorem31") return verify_count_identity(lambda, k);
    if (claim == "theorem21") return verify_balanced_expectation(lambda, k, cfg.threads);
    if (claim == "theorem22") return verify_weak_mean_by_subshape(lambda, k);
    if (claim == "doublesums") return verify_double_sums(lambda, k, cfg.threads);
    if (claim == "togglesym") return toggle_summary(lambda, k, cfg.threads);
    if (claim == "roundtrip") return verify_roundtrip(lambda, k);
    if (claim == "ensemble") return verify_ensemble_size(lambda, k);
    if (claim == "bridge") return verify_bridge(lambda, k, cfg.threads);
    if (claim == "fk37") {
        check_limit(estimate_fk_work(minimal_dominant_size(lambda), lambda.size() + 1), cfg);
        return verify_fk_bssyt_relation(lambda, k, cfg.threads);
    }
    throw UsageError("unknown claim: " + claim);
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const Partition lambda = require_shape(cfg);
    const int k = require_int(cfg.k, "--k", cfg);
    if (k < 1) {
        throw UsageError("--k must be positive");
    }
    guard_tableaux(lambda, k, cfg);
    std::uint64_t n = 0;
    if (cfg.target == "ssyt") {
        n = count_ssyt(lambda, k);
    } else if (cfg.target == "bssyt") {
        n = count_bssyt(lambda, k);
    } else if (cfg.target == "rpp") {
        n = count_rpp(lambda, k);
    } else {
        throw UsageError("unknown tableau kind: " + cfg.target);
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = cfg.target;
        j["shape"] = lambda.to_string();
        j["k"] = k;
        j["count"] = n;
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "kind,shape,k,count\n"
            << cfg.target << ',' << csv_field(lambda.to_string()) << ',' << k << ',' << n << '\n';
    } else {
        out << n << '\n';
    }
    return kOk;
}

int cmd_expected_jaggedness(const RunConfig& cfg, std::ostream& out) {
    const Partition lambda = require_shape(cfg);
    const int k = require_int(cfg.k, "--k", cfg);
    if (k < 1) {
        throw UsageError("--k must be positive");
    }
    guard_tableaux(lambda, k, cfg);
    const Rational value = expected_jaggedness_weak(lambda, k, cfg.threads);
    const bool balanced = !lambda.empty() && is_balanced(lambda);
    std::optional<Rational> closed;
    if (balanced) {
        closed = balanced_jaggedness_formula(lambda);
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["shape"] = lambda.to_string();
        j["k"] = k;
        j["expected_jaggedness"] = value.to_string();
        j["balanced"] = balanced;
        if (closed) {
            j["closed_form"] = closed->to_string();
            j["matches_closed_form"] = *closed == value;
        }
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "shape,k,expected_jaggedness,balanced,closed_form\n"
            << csv_field(lambda.to_string()) << ',' << k << ',' << value.to_string() << ','
            << (balanced ? "true" : "false") << ',' << (closed ? closed->to_string() : "") << '\n';
    } else {
        out << value.to_string();
        if (closed) {
            out << " (balanced: 2rc/(r+c) = " << closed->to_string() << ")";
        } else {
            out << " (unbalanced)";
        }
        out << '\n';
    }
    return kOk;
}

int cmd_fk(const RunConfig& cfg, std::ostream& out) {
    Permutation w;
    if (cfg.perm) {
        w = Permutation::parse(*cfg.perm);
    } else if (cfg.shape) {
        const Partition lambda = Partition::parse(*cfg.shape);
        w = dominant_from_partition(lambda, cfg.n.value_or(minimal_dominant_size(lambda)));
    } else if (cfg.n) {
        w = Permutation::longest(*cfg.n);
    } else {
        throw UsageError("fk: one of --perm, --shape or --n is required");
    }
    const int ell = cfg.ell.value_or(length(w));
    if (ell < 0) {
        throw UsageError("--ell must be nonnegative");
    }
    check_limit(estimate_fk_work(w.size(), ell), cfg);
    const IntPolynomial p = fk_polynomial(w, ell, cfg.threads);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["w"] = w.to_string();
        j["ell"] = ell;
        j["polynomial"] = p.to_string();
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : p.coefficients()) {
            coeffs.push_back(c.to_string());
        }
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "w,ell,polynomial\n" << csv_field(w.to_string()) << ',' << ell << ',' << p.to_string() << '\n';
    } else {
        out << p.to_string() << '\n';
    }
    return kOk;
}

}  // namespace

double estimate_tableau_work(const Partition& lambda, int k) {
    double rows = 1.0;
    for (int p : lambda.parts()) {
        rows *= std::exp(std::lgamma(p + k + 1.0) - std::lgamma(p + 1.0) - std::lgamma(k + 1.0));
    }
    return (1.0 + static_cast<double>(k) * lambda.size()) * rows;
}

double estimate_fk_work(int n, int ell) {
    const double fact = std::exp(std::lgamma(n + 1.0));
    return fact * std::max(1, n - 1) * (ell + 1.0) * (ell + 1.0);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact verification of barely set-valued tableau identities", "bstab"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, const std::string& default_format) {
        cfg.format = default_format;
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--limit", cfg.limit, "Abort when the estimated work exceeds this")
            ->check(CLI::PositiveNumber);
        sub->add_option("--k", cfg.k, "Flag bound k");
    };

    auto* count = app.add_subcommand("count", "Count SSYT, BSSYT or RPP of a shape");
    count->add_option("kind", cfg.target, "ssyt | bssyt | rpp")
        ->required()
        ->check(CLI::IsMember({"ssyt", "bssyt", "rpp"}));
    count->add_option("--shape", cfg.shape, "Partition, e.g. \"4,4,2,1\"");

    auto* verify = app.add_subcommand("verify", "Check one identity on one instance");
    verify->add_option("claim", cfg.target)
        ->required()
        ->check(CLI::IsMember({"conjecture11", "theorem31", "theorem21", "theorem22", "doublesums", "fk14", "fk36",
                               "fk37", "togglesym", "roundtrip", "ensemble", "bridge"}));
    verify->add_option("--shape", cfg.shape, "Partition, e.g. \"4,4,2,1\"");
    verify->add_option("--a", cfg.a)->check(CLI::PositiveNumber);
    verify->add_option("--b", cfg.b)->check(CLI::PositiveNumber);
    verify->add_option("--d", cfg.d)->check(CLI::PositiveNumber);
    verify->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
    verify->add_flag("--timing", cfg.timing, "Include elapsed_ms in the report");

    auto* jag = app.add_subcommand("expected-jaggedness", "Exact expected jaggedness under the weak distribution");
    jag->add_option("--shape", cfg.shape, "Partition, e.g. \"2,2,1,1\"");

    auto* fk = app.add_subcommand("fk", "FK polynomial of a permutation");
    fk->add_option("--perm", cfg.perm, "One-line permutation, e.g. 321");
    fk->add_option("--shape", cfg.shape, "Lehmer code of a dominant permutation");
    fk->add_option("--n", cfg.n, "Size of the symmetric group")->check(CLI::PositiveNumber);
    fk->add_option("--ell", cfg.ell, "Word length (default: length of w)");

    add_common(count, "text");
    add_common(verify, "json");
    add_common(jag, "text");
    add_common(fk, "text");

    std::vector<const char*> argv{"bstab"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kInvalidInput;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (chosen->count("--format") == 0) {
        cfg.format = cfg.command == "verify" ? "json" : "text";
    }

    try {
        if (cfg.command == "count") {
            return cmd_count(cfg, out);
        }
        if (cfg.command == "expected-jaggedness") {
            return cmd_expected_jaggedness(cfg, out);
        }
        if (cfg.command == "fk") {
            return cmd_fk(cfg, out);
        }
        const auto start = std::chrono::steady_clock::now();
        const VerificationReport report = dispatch_verify(cfg);
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        write_report(report, cfg, elapsed, out);
        return all_equal(report) ? kOk : kIdentityFailed;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return kLimitExceeded;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace bstab::cli
