// Command-line surface: evaluate quotients, run named verification
// suites, scan the open conjecture, inspect class-field data and print
// value tables. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 all checks hold (or evaluation succeeded), 1 a congruence
// was violated, 2 usage or parameter error, 3 resource limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flecklab/class_field.hpp"
#include "flecklab/exact_arith.hpp"
#include "flecklab/fleck_sums.hpp"
#include "flecklab/report.hpp"
#include "flecklab/verify.hpp"

namespace {

using namespace flecklab;

struct Range {
    SignedNumber lo, hi;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const SignedNumber v(text);
            return {v, v};
        }
        Range r{SignedNumber(text.substr(0, dots)), SignedNumber(text.substr(dots + 2))};
        if (r.lo > r.hi) {
            throw PreconditionError("empty range: " + text);
        }
        return r;
    } catch (const std::invalid_argument&) {
        throw PreconditionError("cannot parse integer range: " + text);
    }
}

unsigned long to_ulong(const SignedNumber& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) {
        throw PreconditionError(std::string(what) + " must be a nonnegative machine integer, got " +
                                to_decimal(v));
    }
    return v.get_ui();
}

struct UlongRange {
    unsigned long lo, hi;
};

UlongRange to_ulong_range(const Range& r, const char* what) {
    return {to_ulong(r.lo, what), to_ulong(r.hi, what)};
}

ValueRecord record_for(const PrimePower& pp, unsigned long n, const SignedNumber& r,
                       const FleckValue& f) {
    ValueRecord rec;
    rec.fields = {{"p", std::to_string(pp.prime())},
                  {"a", std::to_string(pp.exponent())},
                  {"n", std::to_string(n)},
                  {"r", to_decimal(r)},
                  {"raw_sum", to_decimal(f.raw_sum)},
                  {"floor", to_decimal(f.floor_exponent)},
                  {"bracket", std::to_string(f.bracket_correction)},
                  {"value", to_decimal(f.value)}};
    return rec;
}

int run_eval(const std::string& p_text, const std::string& a_text, const std::string& n_text,
             const std::string& r_text, OutputFormat format) {
    const unsigned long p = to_ulong(SignedNumber(p_text), "--p");
    const unsigned long a = to_ulong(SignedNumber(a_text), "--a");
    const SignedNumber n_value(n_text);
    if (n_value < 0) {
        throw PreconditionError("--n must be >= 0");
    }
    const unsigned long n = to_ulong(n_value, "--n");
    const FleckQuery query{PrimePower(p, static_cast<unsigned>(a)), n, SignedNumber(r_text)};
    const FleckValue f = generalized_fleck(query.pp, query.n, query.r);
    std::vector<ValueRecord> recs{record_for(query.pp, query.n, query.r, f)};
    emit(std::cout, recs, format);
    return 0;
}

int run_table(const std::string& p_text, const std::string& a_text, const std::string& n_text,
              const std::optional<std::string>& r_text, OutputFormat format) {
    const unsigned long p = to_ulong(SignedNumber(p_text), "--p");
    const unsigned long a = to_ulong(SignedNumber(a_text), "--a");
    const PrimePower pp(p, static_cast<unsigned>(a));
    const auto n_range = to_ulong_range(parse_range(n_text), "--n");
    std::optional<Range> r_range;
    if (r_text) {
        r_range = parse_range(*r_text);
    }
    std::vector<ValueRecord> recs;
    for (unsigned long n = n_range.lo; n <= n_range.hi; ++n) {
        const SignedNumber r_lo = r_range ? r_range->lo : SignedNumber(0);
        const SignedNumber r_hi = r_range ? r_range->hi : SignedNumber(pp.modulus() - 1);
        for (SignedNumber r = r_lo; r <= r_hi; ++r) {
            const FleckValue f = generalized_fleck(pp, n, r);
            auto rec = record_for(pp, n, r, f);
            rec.fields.emplace_back(
                "value_mod_p", to_decimal(mod_reduce(f.value, SignedNumber(pp.prime()))));
            recs.push_back(std::move(rec));
        }
    }
    emit(std::cout, recs, format);
    return 0;
}

int run_class(const std::string& p_text, OutputFormat format) {
    const unsigned long p = to_ulong(SignedNumber(p_text), "--p");
    if (!is_prime(SignedNumber(p)) || p < 3) {
        throw PreconditionError("--p must be an odd prime");
    }
    ValueRecord rec;
    rec.fields.emplace_back("p", std::to_string(p));
    if (p % 4 == 3) {
        const auto cls = class_number_imaginary(p);
        rec.fields.emplace_back("field", "Q(sqrt(-p))");
        rec.fields.emplace_back("h", std::to_string(cls.h_minus_p));
        std::string forms;
        for (const auto& f : cls.forms) {
            if (!forms.empty()) {
                forms += '|';
            }
            forms += std::to_string(f[0]) + ";" + std::to_string(f[1]) + ";" +
                     std::to_string(f[2]);
        }
        rec.fields.emplace_back("forms", forms);
    } else {
        const auto cls = real_class_and_unit(p);
        rec.fields.emplace_back("field", "Q(sqrt(p))");
        rec.fields.emplace_back("h", std::to_string(cls.h_p));
        rec.fields.emplace_back("u", to_decimal(cls.u));
        rec.fields.emplace_back("v", to_decimal(cls.v));
    }
    if (p > 3) {
        try {
            const auto reg = regularity(p);
            rec.fields.emplace_back("regular", reg.is_regular ? "true" : "false");
            rec.fields.emplace_back("h_minus_mod_p", to_decimal(reg.h_minus_mod_p.value));
            std::string offending;
            for (unsigned long idx : reg.offending_indices) {
                if (!offending.empty()) {
                    offending += ';';
                }
                offending += std::to_string(idx);
            }
            rec.fields.emplace_back("irregular_indices", offending);
        } catch (const ResourceLimitError& e) {
            std::cerr << "note: regularity fields omitted, " << e.what() << '\n';
        }
    }
    std::vector<ValueRecord> recs{rec};
    emit(std::cout, recs, format);
    return 0;
}

struct VerifyFlags {
    std::optional<std::string> p, n, a, l;
    unsigned jobs = 1;
};

template <typename Lo, typename Hi>
void apply_range(const std::optional<std::string>& flag, const char* name, Lo& lo, Hi& hi) {
    if (!flag) {
        return;
    }
    const auto r = to_ulong_range(parse_range(*flag), name);
    lo = static_cast<Lo>(r.lo);
    hi = static_cast<Hi>(r.hi);
}

int run_verify(const std::string& suite, const VerifyFlags& flags, OutputFormat format) {
    std::vector<CongruenceReport> reports;
    if (suite == "thm11") {
        Thm11SuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        apply_range(flags.n, "--n", range.n_lo, range.n_hi);
        reports = suite_thm11(range, flags.jobs);
    } else if (suite == "thm12") {
        Thm12SuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        apply_range(flags.n, "--n", range.n_lo, range.n_hi);
        reports = suite_thm12(range, flags.jobs);
    } else if (suite == "thm13") {
        Thm13SuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        apply_range(flags.a, "--a", range.a_lo, range.a_hi);
        apply_range(flags.l, "--l", range.l_lo, range.l_hi);
        apply_range(flags.n, "--n", range.n_lo, range.n_hi);
        reports = suite_thm13(range, flags.jobs);
    } else if (suite == "kummer") {
        KummerSuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        apply_range(flags.a, "--a", range.a_lo, range.a_hi);
        apply_range(flags.l, "--l", range.l_lo, range.l_hi);
        reports = suite_kummer(range, flags.jobs);
    } else if (suite == "remark") {
        RemarkSuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        reports = suite_remark(range, flags.jobs);
    } else if (suite == "classnum") {
        ClassnumSuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        reports = suite_classnum(range, flags.jobs);
    } else if (suite == "sharpness") {
        SharpnessSuiteRange range;
        apply_range(flags.p, "--p", range.p_lo, range.p_hi);
        apply_range(flags.n, "--n", range.n_lo, range.n_hi);
        reports = suite_sharpness(range, flags.jobs);
    } else if (suite == "period") {
        reports = suite_period({}, flags.jobs);
    } else {
        throw PreconditionError("unknown suite: " + suite);
    }
    emit(std::cout, reports, format);
    return exit_code_for(reports);
}

std::optional<ScanCursor> read_cursor(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    nlohmann::json obj;
    in >> obj;
    ScanCursor c;
    c.p = obj.at("p").get<unsigned long>();
    c.a = obj.at("a").get<unsigned>();
    c.b = obj.at("b").get<unsigned>();
    c.n = obj.at("n").get<unsigned long>();
    c.r = SignedNumber(obj.at("r").get<std::string>());
    return c;
}

void write_cursor(const std::string& path, const ScanCursor& c) {
    nlohmann::ordered_json obj;
    obj["p"] = c.p;
    obj["a"] = c.a;
    obj["b"] = c.b;
    obj["n"] = c.n;
    obj["r"] = to_decimal(c.r);
    std::ofstream out(path, std::ios::trunc);
    out << obj.dump() << '\n';
}

int run_scan(const std::string& conjecture, const std::optional<std::string>& p,
             const std::optional<std::string>& a, const std::optional<std::string>& b,
             const std::string& n_max, const std::optional<std::string>& r,
             const std::optional<std::string>& cursor_path, OutputFormat format) {
    if (conjecture != "1.1") {
        throw PreconditionError("unknown conjecture: " + conjecture);
    }
    ConjectureScanOptions options;
    options.n_max = to_ulong(SignedNumber(n_max), "--n-max");
    if (p) {
        const auto range = to_ulong_range(parse_range(*p), "--p");
        options.p_lo = range.lo;
        options.p_hi = range.hi;
    }
    if (a) {
        const auto range = to_ulong_range(parse_range(*a), "--a");
        options.a_lo = static_cast<unsigned>(range.lo);
        options.a_hi = static_cast<unsigned>(range.hi);
    }
    if (b) {
        const auto range = to_ulong_range(parse_range(*b), "--b");
        options.b_lo = static_cast<unsigned>(range.lo);
        options.b_hi = static_cast<unsigned>(range.hi);
    }
    if (options.a_lo < 1 || options.b_lo < 1) {
        throw PreconditionError("--a and --b must be >= 1");
    }
    if (r) {
        const auto range = parse_range(*r);
        options.r_range = {range.lo, range.hi};
    }
    if (cursor_path) {
        options.resume_after = read_cursor(*cursor_path);
        options.progress = [&](const ScanCursor& c) { write_cursor(*cursor_path, c); };
    }
    const ScanResult result = scan_conjecture11(options);
    emit(std::cout, result, format);
    return result.counterexamples.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fleck quotient calculator and congruence verifier"};
    app.require_subcommand(1);

    std::string format_name = "json-lines";
    app.add_option("--format", format_name, "json-lines, csv or human")->capture_default_str();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one generalized Fleck quotient");
    eval_cmd->fallthrough();
    std::string eval_p, eval_a = "1", eval_n, eval_r = "0";
    eval_cmd->add_option("--p", eval_p, "prime")->required();
    eval_cmd->add_option("--a", eval_a, "prime-power exponent");
    eval_cmd->add_option("--n", eval_n, "row index (>= 0)")->required();
    eval_cmd->add_option("--r", eval_r, "residue class");

    auto* verify_cmd = app.add_subcommand("verify", "run a named congruence suite");
    verify_cmd->fallthrough();
    std::string suite;
    VerifyFlags verify_flags;
    verify_cmd->add_option("--suite", suite,
                           "thm11|thm12|thm13|kummer|remark|classnum|sharpness|period")
        ->required();
    std::string verify_p, verify_n, verify_a, verify_l;
    verify_cmd->add_option("--p", verify_p, "prime range lo..hi");
    verify_cmd->add_option("--n", verify_n, "row range lo..hi");
    verify_cmd->add_option("--a", verify_a, "exponent range lo..hi");
    verify_cmd->add_option("--l", verify_l, "offset range lo..hi");
    verify_cmd->add_option("--jobs", verify_flags.jobs, "worker threads");

    auto* scan_cmd = app.add_subcommand("scan", "counterexample scan for a conjecture");
    scan_cmd->fallthrough();
    std::string conjecture;
    std::string scan_p, scan_a, scan_b, scan_r, scan_cursor;
    std::string scan_n_max = "200";
    scan_cmd->add_option("--conjecture", conjecture, "conjecture id (1.1)")->required();
    scan_cmd->add_option("--p", scan_p, "prime range lo..hi");
    scan_cmd->add_option("--a", scan_a, "exponent range lo..hi");
    scan_cmd->add_option("--b", scan_b, "modulus-power range lo..hi");
    scan_cmd->add_option("--n-max", scan_n_max, "largest row index")->capture_default_str();
    scan_cmd->add_option("--r", scan_r, "residue range lo..hi (default one period)");
    scan_cmd->add_option("--cursor", scan_cursor, "resumable cursor file");

    auto* class_cmd = app.add_subcommand("class", "quadratic class data for one prime");
    class_cmd->fallthrough();
    std::string class_p;
    class_cmd->add_option("--p", class_p, "odd prime")->required();

    auto* table_cmd = app.add_subcommand("table", "table of quotients over n and r ranges");
    table_cmd->fallthrough();
    std::string table_p, table_a = "1", table_n, table_r;
    table_cmd->add_option("--p", table_p, "prime")->required();
    table_cmd->add_option("--a", table_a, "prime-power exponent");
    table_cmd->add_option("--n", table_n, "row range lo..hi")->required();
    table_cmd->add_option("--r", table_r, "residue range lo..hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (const char* env_limit = std::getenv("FLECKLAB_MAX_N")) {
            set_max_sum_n(to_ulong(SignedNumber(std::string(env_limit)), "FLECKLAB_MAX_N"));
        }
        const OutputFormat format = parse_format(format_name);
        if (eval_cmd->parsed()) {
            return run_eval(eval_p, eval_a, eval_n, eval_r, format);
        }
        if (verify_cmd->parsed()) {
            if (!verify_p.empty()) verify_flags.p = verify_p;
            if (!verify_n.empty()) verify_flags.n = verify_n;
            if (!verify_a.empty()) verify_flags.a = verify_a;
            if (!verify_l.empty()) verify_flags.l = verify_l;
            return run_verify(suite, verify_flags, format);
        }
        if (scan_cmd->parsed()) {
            return run_scan(conjecture,
                            scan_p.empty() ? std::nullopt : std::optional(scan_p),
                            scan_a.empty() ? std::nullopt : std::optional(scan_a),
                            scan_b.empty() ? std::nullopt : std::optional(scan_b), scan_n_max,
                            scan_r.empty() ? std::nullopt : std::optional(scan_r),
                            scan_cursor.empty() ? std::nullopt : std::optional(scan_cursor),
                            format);
        }
        if (class_cmd->parsed()) {
            return run_class(class_p, format);
        }
        if (table_cmd->parsed()) {
            return run_table(table_p, table_a, table_n,
                             table_r.empty() ? std::nullopt : std::optional(table_r), format);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
