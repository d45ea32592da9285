#include "flecklab/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace flecklab {

namespace {

using ordered_json = nlohmann::ordered_json;

// Small witness parameters print as JSON numbers, anything larger as a
// decimal string.
ordered_json param_value(const SignedNumber& v) {
    if (v.fits_slong_p()) {
        return ordered_json(v.get_si());
    }
    return ordered_json(to_decimal(v));
}

ordered_json params_object(const ParamList& params) {
    ordered_json obj = ordered_json::object();
    for (const auto& [name, value] : params) {
        obj[name] = param_value(value);
    }
    return obj;
}

std::string params_compact(const ParamList& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) {
            out += ';';
        }
        out += name + "=" + to_decimal(value);
    }
    return out;
}

void emit_human_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) {
        return;
    }
    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                line += "  ";
            }
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(width[i] - row[i].size(), ' ');
            }
        }
        out << line << '\n';
    }
}

} // namespace

CongruenceReport make_report(std::string check_id, ParamList params, SignedNumber lhs,
                             SignedNumber rhs, SignedNumber modulus) {
    if (modulus < 1) {
        throw PreconditionError("make_report: modulus must be >= 1");
    }
    CongruenceReport r;
    r.check_id = std::move(check_id);
    r.params = std::move(params);
    r.holds = mod_reduce(lhs - rhs, modulus) == 0;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.modulus = std::move(modulus);
    return r;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json-lines") {
        return OutputFormat::JsonLines;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "human") {
        return OutputFormat::Human;
    }
    throw PreconditionError("unknown format: " + name);
}

std::string to_json_line(const CongruenceReport& report) {
    ordered_json obj;
    obj["check_id"] = report.check_id;
    obj["params"] = params_object(report.params);
    obj["lhs"] = to_decimal(report.lhs);
    obj["rhs"] = to_decimal(report.rhs);
    obj["modulus"] = to_decimal(report.modulus);
    obj["holds"] = report.holds;
    return obj.dump();
}

std::string to_json_line(const ScanResult& result) {
    ordered_json obj;
    obj["conjecture_id"] = result.conjecture_id;
    ordered_json range = ordered_json::object();
    for (const auto& [name, bounds] : result.range) {
        range[name] = bounds;
    }
    obj["range"] = range;
    obj["instances_checked"] = result.instances_checked;
    ordered_json counterexamples = ordered_json::array();
    for (const auto& witness : result.counterexamples) {
        counterexamples.push_back(params_object(witness));
    }
    obj["counterexamples"] = counterexamples;
    return obj.dump();
}

CongruenceReport report_from_json_line(const std::string& line) {
    const auto obj = ordered_json::parse(line);
    CongruenceReport r;
    r.check_id = obj.at("check_id").get<std::string>();
    for (const auto& [name, value] : obj.at("params").items()) {
        if (value.is_string()) {
            r.params.emplace_back(name, SignedNumber(value.get<std::string>()));
        } else {
            r.params.emplace_back(name, SignedNumber(static_cast<long>(value.get<long long>())));
        }
    }
    r.lhs = SignedNumber(obj.at("lhs").get<std::string>());
    r.rhs = SignedNumber(obj.at("rhs").get<std::string>());
    r.modulus = SignedNumber(obj.at("modulus").get<std::string>());
    r.holds = obj.at("holds").get<bool>();
    return r;
}

void emit(std::ostream& out, std::span<const CongruenceReport> reports, OutputFormat format) {
    switch (format) {
    case OutputFormat::JsonLines:
        for (const auto& r : reports) {
            out << to_json_line(r) << '\n';
        }
        return;
    case OutputFormat::Csv:
        out << "check_id,params,lhs,rhs,modulus,holds\n";
        for (const auto& r : reports) {
            out << r.check_id << ',' << params_compact(r.params) << ',' << to_decimal(r.lhs)
                << ',' << to_decimal(r.rhs) << ',' << to_decimal(r.modulus) << ','
                << (r.holds ? "true" : "false") << '\n';
        }
        return;
    case OutputFormat::Human: {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"check_id", "params", "lhs", "rhs", "modulus", "holds"});
        for (const auto& r : reports) {
            rows.push_back({r.check_id, params_compact(r.params), to_decimal(r.lhs),
                            to_decimal(r.rhs), to_decimal(r.modulus),
                            r.holds ? "true" : "false"});
        }
        emit_human_table(out, rows);
        return;
    }
    }
}

void emit(std::ostream& out, const ScanResult& result, OutputFormat format) {
    switch (format) {
    case OutputFormat::JsonLines:
        out << to_json_line(result) << '\n';
        return;
    case OutputFormat::Csv: {
        out << "conjecture_id,range,instances_checked,counterexamples\n";
        std::string range;
        for (const auto& [name, bounds] : result.range) {
            if (!range.empty()) {
                range += ';';
            }
            range += name + "=" + bounds;
        }
        std::string witnesses;
        for (const auto& w : result.counterexamples) {
            if (!witnesses.empty()) {
                witnesses += '|';
            }
            witnesses += params_compact(w);
        }
        out << result.conjecture_id << ',' << range << ',' << result.instances_checked << ','
            << witnesses << '\n';
        return;
    }
    case OutputFormat::Human:
        out << "conjecture " << result.conjecture_id << ": checked " << result.instances_checked
            << " instances, " << result.counterexamples.size() << " counterexamples\n";
        for (const auto& [name, bounds] : result.range) {
            out << "  " << name << " in " << bounds << '\n';
        }
        for (const auto& w : result.counterexamples) {
            out << "  counterexample: " << params_compact(w) << '\n';
        }
        return;
    }
}

void emit(std::ostream& out, std::span<const ValueRecord> records, OutputFormat format) {
    switch (format) {
    case OutputFormat::JsonLines:
        for (const auto& rec : records) {
            ordered_json obj;
            for (const auto& [name, value] : rec.fields) {
                obj[name] = value;
            }
            out << obj.dump() << '\n';
        }
        return;
    case OutputFormat::Csv: {
        if (records.empty()) {
            return;
        }
        std::string header;
        for (const auto& [name, value] : records.front().fields) {
            if (!header.empty()) {
                header += ',';
            }
            header += name;
        }
        out << header << '\n';
        for (const auto& rec : records) {
            std::string line;
            for (const auto& [name, value] : rec.fields) {
                if (!line.empty()) {
                    line += ',';
                }
                line += value;
            }
            out << line << '\n';
        }
        return;
    }
    case OutputFormat::Human: {
        if (records.empty()) {
            return;
        }
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header;
        for (const auto& [name, value] : records.front().fields) {
            header.push_back(name);
        }
        rows.push_back(header);
        for (const auto& rec : records) {
            std::vector<std::string> row;
            for (const auto& [name, value] : rec.fields) {
                row.push_back(value);
            }
            rows.push_back(row);
        }
        emit_human_table(out, rows);
        return;
    }
    }
}

int exit_code_for(std::span<const CongruenceReport> reports) {
    for (const auto& r : reports) {
        if (!r.holds) {
            return 1;
        }
    }
    return 0;
}

} // namespace flecklab
