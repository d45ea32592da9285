// Acceptance suite: every criterion is an exact check (tolerance zero) at
// the stated parameter ranges, one pass/fail line per criterion.
//
// argv[1] (optional): path to the flecklab CLI binary
// argv[2] (optional): path to the golden directory
// Both are required only by the final criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flecklab/class_field.hpp"
#include "flecklab/closed_forms.hpp"
#include "flecklab/exact_arith.hpp"
#include "flecklab/fleck_sums.hpp"
#include "flecklab/special_sequences.hpp"
#include "flecklab/verify.hpp"

using namespace flecklab;

namespace {

int failures = 0;

void report_criterion(int id, bool pass, const std::string& label, const std::string& detail) {
    if (!pass) {
        ++failures;
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
    if (!detail.empty()) {
        std::cout << " (" << detail << ")";
    }
    std::cout << std::endl;
}

unsigned long count_failures(const std::vector<CongruenceReport>& reports) {
    unsigned long bad = 0;
    for (const auto& r : reports) {
        if (!r.holds) {
            ++bad;
        }
    }
    return bad;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CongruenceReport* find_report(const std::vector<CongruenceReport>& reports,
                                    const std::string& id, const ParamList& params) {
    for (const auto& r : reports) {
        if (r.check_id != id) {
            continue;
        }
        bool match = true;
        for (const auto& [name, value] : params) {
            bool found = false;
            for (const auto& [key, have] : r.params) {
                if (key == name) {
                    found = have == value;
                    break;
                }
            }
            match = match && found;
        }
        if (match) {
            return &r;
        }
    }
    return nullptr;
}

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run_cli(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        return result;
    }
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion1_thm11() {
    const auto start = std::chrono::steady_clock::now();
    const auto reports = suite_thm11({2, 13, 1, 500}, 1); // single-threaded by design
    const double elapsed = seconds_since(start);
    const auto bad = count_failures(reports);
    std::ostringstream detail;
    detail << reports.size() << " instances, " << bad << " disagreements, " << elapsed << "s";
    report_criterion(1, bad == 0 && elapsed < 120.0,
                     "thm11 closed form == direct quotient mod p, p <= 13, n <= 500",
                     detail.str());
}

void criterion2_thm12() {
    const auto reports = suite_thm12({2, 13, 0, 200}, 4);
    const auto bad = count_failures(reports);
    report_criterion(2, bad == 0,
                     "thm12 (both shifts) == direct quotient mod p, p <= 13, n <= 200",
                     std::to_string(reports.size()) + " instances, " + std::to_string(bad) +
                         " disagreements");
}

void criterion3_recurrence() {
    unsigned long checked = 0, bad = 0;
    for (unsigned long p : primes_in_range(2, 11)) {
        for (unsigned long n = p; n <= 300; ++n) {
            std::vector<unsigned long> lower;
            for (const auto& f : fleck_quotient_row(p, n - p + 1)) {
                lower.push_back(mod_reduce(f.value, p).get_ui());
            }
            const auto direct = fleck_quotient_row(p, n);
            for (unsigned long r = 0; r < p; ++r) {
                ++checked;
                if (recurrence_mod_p(p, n, r, lower).value !=
                    mod_reduce(direct[r].value, p)) {
                    ++bad;
                }
            }
        }
    }
    report_criterion(3, bad == 0, "row recurrence reproduces direct values, p <= 11, n <= 300",
                     std::to_string(checked) + " instances, " + std::to_string(bad) +
                         " disagreements");
}

void criterion4_thm13_kummer() {
    const auto bound_reports = suite_thm13({2, 7, 0, 2, 0, 10, 0, 4}, 4);
    const auto kummer_reports = suite_kummer({2, 7, 0, 2, 0, 10}, 4);
    const auto bad = count_failures(bound_reports) + count_failures(kummer_reports);
    report_criterion(4, bad == 0,
                     "thm13 valuation bound and kummer family, p <= 7, a <= 2, l <= 10, n <= 4",
                     std::to_string(bound_reports.size() + kummer_reports.size()) +
                         " instances, " + std::to_string(bad) + " violations");
}

void criterion5_generalized() {
    unsigned long checked = 0, bad = 0;
    // integrality and the valuation floor
    for (const auto& pp : {PrimePower(2, 2), PrimePower(2, 3), PrimePower(3, 2),
                           PrimePower(3, 3), PrimePower(5, 2)}) {
        const unsigned long sub = pp.submodulus().get_ui();
        for (unsigned long n = 0; n <= 400; ++n) {
            try {
                const auto row = generalized_fleck_row(pp, n);
                if (n >= sub) {
                    const SignedNumber bound = weisman_floor(pp, n);
                    for (const auto& f : row) {
                        ++checked;
                        if (!p_adic_order(f.raw_sum, pp.prime()).at_least(bound)) {
                            ++bad;
                        }
                    }
                } else {
                    checked += row.size();
                }
            } catch (const IntegralityError&) {
                ++bad;
            }
        }
    }
    // the r-expansion over the zero column
    for (const auto& pp : {PrimePower(2, 2), PrimePower(2, 3), PrimePower(3, 2)}) {
        const unsigned long sub = pp.submodulus().get_ui();
        const unsigned long period = SignedNumber(pp.modulus() * (pp.prime() - 1)).get_ui();
        for (unsigned long n = sub; n <= 2 * sub + 3 * period; ++n) {
            const unsigned long d = thm14_column_length(pp, n);
            std::vector<unsigned long> column;
            for (unsigned long k = 0; k <= d; ++k) {
                column.push_back(
                    mod_reduce(generalized_fleck(pp, n + k, 0).value, pp.prime()).get_ui());
            }
            const auto row = generalized_fleck_row(pp, n);
            for (unsigned long r = 0; r < row.size(); ++r) {
                ++checked;
                if (thm14_expand_r(pp, n, r, column).value !=
                    mod_reduce(row[r].value, pp.prime())) {
                    ++bad;
                }
            }
        }
    }
    // periodicity and floor attainment
    const auto period_reports = suite_period({9, 3}, 4);
    checked += period_reports.size();
    bad += count_failures(period_reports);
    report_criterion(5, bad == 0,
                     "generalized quotients: integrality, floor, r-expansion, periodicity",
                     std::to_string(checked) + " instances, " + std::to_string(bad) +
                         " violations");
}

void criterion6_named_instances() {
    unsigned long bad = 0;
    std::vector<std::string> notes;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            notes.push_back(what);
        }
    };

    const auto remark5 = check_remark_family(5, RemarkCheck::All);
    const auto* w = find_report(remark5, "wolstenholme", {{"p", 5}});
    expect(w && w->lhs == 126 && w->rhs == 1 && w->modulus == 125 && w->holds,
           "wolstenholme at p=5");
    const auto* fb = find_report(remark5, "fleck-bernoulli", {{"n", 3}});
    expect(fb && fb->lhs == -1000 && fb->rhs == 250 && fb->modulus == 625 && fb->holds,
           "column sum vs Bernoulli at (5,3)");
    const auto* row = find_report(remark5, "bernoulli-poly-row", {{"r", 1}});
    expect(row && row->lhs == 75 && row->rhs == 75 && row->modulus == 125 && row->holds,
           "Bernoulli-polynomial row at (5,1)");

    const auto remark7 = check_remark_family(7, RemarkCheck::All);
    const auto* cls = find_report(remark7, "fleck-class-number", {{"p", 7}});
    expect(cls && cls->lhs == -38759 && cls->rhs == -343 && cls->modulus == 2401 && cls->holds,
           "class-number column sum at p=7");
    const auto* gl = find_report(remark7, "glaisher", {{"n", 3}});
    expect(gl && mod_reduce(gl->lhs, gl->modulus) == 344 && gl->rhs == 344 &&
               gl->modulus == 2401 && gl->holds,
           "glaisher at (7,3)");
    const auto* wg = find_report(remark7, "wolstenholme-general", {{"n", 2}});
    expect(wg && wg->modulus == 16807 && mod_reduce(wg->lhs, wg->modulus) == 7549 &&
               mod_reduce(wg->rhs, wg->modulus) == 7549 && wg->holds,
           "double-block congruence at (7,2)");

    const auto cn = check_cor11_classnumber(7, 1);
    expect(cn.lhs == 6 && cn.rhs == 6 && cn.modulus == 7 && cn.holds,
           "class-number branch at (7,1)");

    std::string detail = "7 pinned instances";
    for (const auto& n : notes) {
        detail += "; failed: " + n;
    }
    report_criterion(6, bad == 0, "named congruence instances match their precomputed sides",
                     detail);
}

void criterion7_class_field() {
    unsigned long bad = 0;
    std::vector<std::string> notes;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            notes.push_back(what);
        }
    };

    expect(class_number_imaginary(7).h_minus_p == 1, "h(-7) = 1");
    expect(class_number_imaginary(23).h_minus_p == 3, "h(-23) = 3");
    expect(class_number_imaginary(47).h_minus_p == 5, "h(-47) = 5");
    {
        const auto u5 = real_class_and_unit(5);
        const auto u13 = real_class_and_unit(13);
        const auto u29 = real_class_and_unit(29);
        expect(u5.u == 1 && u5.v == 1, "unit of Q(sqrt(5))");
        expect(u13.u == 1 && u13.v == 3, "unit of Q(sqrt(13))");
        expect(u29.u == 1 && u29.v == 5, "unit of Q(sqrt(29))");
    }
    unsigned long congruences = 0;
    for (unsigned long p : primes_in_range(5, 199)) {
        const SignedNumber half = half_factorial_mod_p(p).value;
        if (p % 4 == 3 && p >= 7) {
            ++congruences;
            const auto h = class_number_imaginary(p).h_minus_p;
            const SignedNumber sign = (h + 1) / 2 % 2 == 0 ? 1 : -1;
            expect(mod_reduce(half - sign, p) == 0, "Mordell at p=" + std::to_string(p));
        } else if (p % 4 == 1 && p <= 197) {
            ++congruences;
            const auto data = real_class_and_unit(p);
            const SignedNumber sign = (data.h_p + 1) / 2 % 2 == 0 ? 1 : -1;
            const auto rhs = rational_mod_p(ExactFraction(sign) * make_fraction(data.v, 2), p);
            expect(half == rhs.value, "Chowla at p=" + std::to_string(p));
        }
    }
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        expect(regularity(p).is_regular, std::to_string(p) + " regular");
    }
    {
        const auto r37 = regularity(37);
        expect(!r37.is_regular && r37.offending_indices == std::vector<unsigned long>{32},
               "37 irregular at index 32");
        const auto r59 = regularity(59);
        expect(!r59.is_regular && r59.offending_indices == std::vector<unsigned long>{44},
               "59 irregular at index 44");
    }
    unsigned long equivalences = 0;
    for (unsigned long p : primes_in_range(7, 257)) {
        ++equivalences;
        const auto rep = regularity(p);
        expect(rep.is_regular == (rep.h_minus_mod_p.value != 0),
               "regularity equivalence at p=" + std::to_string(p));
    }

    std::string detail = std::to_string(congruences) + " half-factorial congruences, " +
                         std::to_string(equivalences) + " regularity equivalences";
    for (const auto& n : notes) {
        detail += "; failed: " + n;
    }
    report_criterion(7, bad == 0, "class numbers, units, Mordell/Chowla, regular primes",
                     detail);
}

void criterion8_scan() {
    ConjectureScanOptions options;
    options.p_lo = 2;
    options.p_hi = 3;
    options.a_lo = 1;
    options.a_hi = 2;
    options.b_lo = 1;
    options.b_hi = 2;
    options.n_max = 200;
    const auto result = scan_conjecture11(options);
    std::string detail = std::to_string(result.instances_checked) + " instances, " +
                         std::to_string(result.counterexamples.size()) + " counterexamples";
    if (!result.counterexamples.empty()) {
        detail += " [REPORTABLE DISCOVERY: " + to_json_line(result) + "]";
    }
    report_criterion(8, result.instances_checked > 0, "conjecture scan completes and re-verifies",
                     detail);
}

void criterion9_cli(const std::string& bin, const std::string& golden) {
    if (bin.empty() || golden.empty()) {
        report_criterion(9, false, "CLI golden-file determinism", "binary or golden dir missing");
        return;
    }
    unsigned long bad = 0;
    std::vector<std::string> notes;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++bad;
            notes.push_back(what);
        }
    };
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"eval --p 3 --n 4 --r 0", "eval_p3_n4_r0.jsonl"},
        {"verify --suite remark --p 5..5", "verify_remark_p5.jsonl"},
        {"class --p 23 --format csv", "class_p23.csv"},
    };
    for (const auto& [args, file] : cases) {
        const auto got = run_cli(bin + " " + args);
        expect(got.exit_code == 0, args + " exit code");
        expect(got.output == slurp(golden + "/" + file), args + " bytes");
        expect(got.output == run_cli(bin + " " + args).output, args + " determinism");
    }
    expect(run_cli(bin + " eval --p 3 --n -1").exit_code == 2, "usage error exit code");
    expect(run_cli("FLECKLAB_MAX_N=50 " + bin + " eval --p 3 --n 100 --r 0").exit_code == 3,
           "resource limit exit code");
    std::string detail = "3 golden invocations, determinism, exit codes";
    for (const auto& n : notes) {
        detail += "; failed: " + n;
    }
    report_criterion(9, bad == 0, "CLI golden files, determinism and exit-code contract", detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string bin = argc > 1 ? argv[1] : "";
    const std::string golden = argc > 2 ? argv[2] : "";
    criterion1_thm11();
    criterion2_thm12();
    criterion3_recurrence();
    criterion4_thm13_kummer();
    criterion5_generalized();
    criterion6_named_instances();
    criterion7_class_field();
    criterion8_scan();
    criterion9_cli(bin, golden);
    if (failures == 0) {
        std::cout << "acceptance: all 9 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
    return 1;
}
