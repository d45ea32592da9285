#pragma once

// Structured result records and their serialization. Big integers are
// carried as decimal strings in every machine format so values survive a
// round trip exactly. Emission is deterministic: records print in the
// order given and contain nothing time- or host-dependent.

#include <chrono>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flecklab/numbers.hpp"

namespace flecklab {

using ParamList = std::vector<std::pair<std::string, SignedNumber>>;

// One verified (or violated) congruence instance. holds is true exactly
// when modulus divides lhs - rhs.
struct CongruenceReport {
    std::string check_id;
    ParamList params;
    SignedNumber lhs;
    SignedNumber rhs;
    SignedNumber modulus;
    bool holds = false;
    std::chrono::nanoseconds elapsed{0}; // never serialized

    bool operator==(const CongruenceReport& o) const {
        return check_id == o.check_id && params == o.params && lhs == o.lhs && rhs == o.rhs &&
               modulus == o.modulus && holds == o.holds;
    }
};

CongruenceReport make_report(std::string check_id, ParamList params, SignedNumber lhs,
                             SignedNumber rhs, SignedNumber modulus);

// Outcome of a counterexample scan. An empty counterexample list means
// "no violation found in range", never "proved".
struct ScanResult {
    std::string conjecture_id;
    std::vector<std::pair<std::string, std::string>> range;
    unsigned long long instances_checked = 0;
    std::vector<ParamList> counterexamples;
};

enum class OutputFormat { JsonLines, Csv, Human };

OutputFormat parse_format(const std::string& name); // throws PreconditionError

std::string to_json_line(const CongruenceReport& report);
std::string to_json_line(const ScanResult& result);

// Inverse of to_json_line for reports; lhs/rhs/modulus recovered exactly.
CongruenceReport report_from_json_line(const std::string& line);

void emit(std::ostream& out, std::span<const CongruenceReport> reports, OutputFormat format);
void emit(std::ostream& out, const ScanResult& result, OutputFormat format);

// Key/value records for eval, table and class output; values preformatted.
struct ValueRecord {
    std::vector<std::pair<std::string, std::string>> fields;
};

void emit(std::ostream& out, std::span<const ValueRecord> records, OutputFormat format);

// 0 when every report holds, 1 otherwise.
int exit_code_for(std::span<const CongruenceReport> reports);

} // namespace flecklab
