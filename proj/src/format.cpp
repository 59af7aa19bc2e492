#include "eolab/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "eolab/error.hpp"

namespace eolab {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ParameterError("unknown format '" + name + "' (expected text, csv, json)");
}

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Text:
        return "text";
    case OutputFormat::Csv:
        return "csv";
    case OutputFormat::Json:
        return "json";
    }
    return "?";
}

IntTable class_count_table(const std::vector<ClassCountRow>& rows) {
    IntTable t{{"n", "c0", "c2"}, {}};
    for (const ClassCountRow& r : rows) {
        t.rows.push_back({r.n, r.c0, r.c2});
    }
    return t;
}

IntTable crank_table(const std::map<int, long long>& distribution) {
    IntTable t{{"eoc", "count"}, {}};
    // Largest crank first.
    for (auto it = distribution.rbegin(); it != distribution.rend(); ++it) {
        t.rows.push_back({it->first, it->second});
    }
    return t;
}

namespace {

std::string render_text(const IntTable& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto& row : t.rows) {
            width[c] = std::max(width[c], std::to_string(row[c]).size());
        }
    }
    std::string out;
    auto cell = [&](const std::string& s, std::size_t c) {
        if (c > 0) {
            out += "  ";
        }
        out += std::string(width[c] - s.size(), ' ') + s;
    };
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        cell(t.columns[c], c);
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            cell(std::to_string(row[c]), c);
        }
        out += "\n";
    }
    return out;
}

std::string render_csv(const IntTable& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out += (c > 0 ? "," : "") + t.columns[c];
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c > 0 ? "," : "") + std::to_string(row[c]);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const IntTable& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[t.columns[c]] = row[c];
        }
        rows.push_back(std::move(obj));
    }
    ordered_json doc = ordered_json::object();
    doc["rows"] = std::move(rows);
    return doc.dump() + "\n";
}

long long parse_cell(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParameterError("malformed table cell '" + s + "'");
    }
    if (used != s.size()) {
        throw ParameterError("malformed table cell '" + s + "'");
    }
    return v;
}

std::vector<std::string> split_fields(const std::string& line, bool csv) {
    std::vector<std::string> out;
    if (csv) {
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(item);
        }
        if (!line.empty() && line.back() == ',') {
            out.emplace_back();
        }
    } else {
        std::istringstream ss(line);
        std::string item;
        while (ss >> item) {
            out.push_back(item);
        }
    }
    return out;
}

IntTable parse_delimited(const std::string& text, bool csv) {
    std::istringstream in(text);
    std::string line;
    IntTable t;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_fields(line, csv);
        if (header) {
            t.columns = std::move(fields);
            header = false;
            continue;
        }
        if (fields.size() != t.columns.size()) {
            throw ParameterError("table row has " + std::to_string(fields.size()) +
                                 " fields, header has " + std::to_string(t.columns.size()));
        }
        std::vector<long long> row;
        for (const std::string& f : fields) {
            row.push_back(parse_cell(f));
        }
        t.rows.push_back(std::move(row));
    }
    if (header) {
        throw ParameterError("table has no header");
    }
    return t;
}

IntTable parse_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed JSON table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw ParameterError("JSON table needs a top-level \"rows\" array");
    }
    IntTable t;
    bool first = true;
    for (const auto& obj : doc["rows"]) {
        if (!obj.is_object()) {
            throw ParameterError("JSON table rows must be objects");
        }
        std::vector<std::string> keys;
        std::vector<long long> row;
        for (const auto& [key, value] : obj.items()) {
            if (!value.is_number_integer()) {
                throw ParameterError("JSON table cell '" + key + "' is not an integer");
            }
            keys.push_back(key);
            row.push_back(value.get<long long>());
        }
        if (first) {
            t.columns = keys;
            first = false;
        } else if (keys != t.columns) {
            throw ParameterError("JSON table rows have different keys");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace

std::string render_table(const IntTable& table, OutputFormat f) {
    switch (f) {
    case OutputFormat::Text:
        return render_text(table);
    case OutputFormat::Csv:
        return render_csv(table);
    case OutputFormat::Json:
        return render_json(table);
    }
    return {};
}

IntTable parse_table(const std::string& text, OutputFormat f) {
    switch (f) {
    case OutputFormat::Text:
        return parse_delimited(text, false);
    case OutputFormat::Csv:
        return parse_delimited(text, true);
    case OutputFormat::Json:
        return parse_json(text);
    }
    return {};
}

std::string young_diagram(const Partition& p) {
    if (p.empty()) {
        return "(empty)\n";
    }
    std::string out;
    for (int part : p.parts()) {
        out += std::string(part, '#') + "\n";
    }
    return out;
}

std::string young_diagram(const Overpartition& p) {
    if (p.base().empty()) {
        return "(empty)\n";
    }
    std::string out;
    int previous = 0;
    for (int part : p.base().parts()) {
        out += std::string(part, '#');
        if (part != previous && p.is_marked(part)) {
            out += "~";
        }
        out += "\n";
        previous = part;
    }
    return out;
}

namespace {

std::string report_title(const VerificationReport& r) {
    std::string out = r.name;
    for (const auto& [key, value] : r.params) {
        out += " " + key + "=" + std::to_string(value);
    }
    return out + " (order " + std::to_string(r.order) + ")";
}

} // namespace

std::string render_report(const VerificationReport& r) {
    std::ostringstream out;
    out << (r.passed() ? "PASS " : "FAIL ") << report_title(r) << "\n";
    for (const std::string& c : r.checks) {
        out << "  check: " << c << "\n";
    }
    if (r.mismatch) {
        const ReportMismatch& m = *r.mismatch;
        out << "  mismatch in \"" << m.comparison << "\" at z^" << m.m << " q^" << m.n
            << ": left " << m.left << ", right " << m.right << "\n";
        if (!r.witnesses.empty()) {
            out << "  enumerated objects of weight " << m.n << ":\n";
            for (const std::string& w : r.witnesses) {
                out << "    " << w << "\n";
            }
        }
    }
    for (const std::string& n : r.notes) {
        out << "  note: " << n << "\n";
    }
    return out.str();
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : reports) {
        ordered_json obj = ordered_json::object();
        obj["name"] = r.name;
        obj["order"] = r.order;
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : r.params) {
            params[key] = value;
        }
        obj["params"] = params;
        obj["passed"] = r.passed();
        obj["checks"] = r.checks;
        if (r.mismatch) {
            obj["mismatch"] = {{"comparison", r.mismatch->comparison},
                               {"n", r.mismatch->n},
                               {"m", r.mismatch->m},
                               {"left", r.mismatch->left},
                               {"right", r.mismatch->right}};
        } else {
            obj["mismatch"] = nullptr;
        }
        obj["witnesses"] = r.witnesses;
        obj["notes"] = r.notes;
        arr.push_back(std::move(obj));
    }
    ordered_json doc = ordered_json::object();
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string render_harness(const HarnessReport& h) {
    std::ostringstream out;
    out << (h.passed() ? "PASS " : "FAIL ") << to_string(h.map) << " r=" << h.r
        << " max-weight=" << h.max_weight << "\n";
    out << "  domain " << h.domain_size << ", codomain " << h.codomain_size << "\n";
    for (const auto& [label, count] : h.case_counts) {
        out << "  " << label << ": " << count << "\n";
    }
    if (!h.passed()) {
        out << "  failures: " << h.failure_count << "\n";
        for (const std::string& f : h.failures) {
            out << "    " << f << "\n";
        }
    }
    return out.str();
}

std::string render_trace(const BijectionTrace& trace) {
    std::ostringstream out;
    for (const TraceStep& step : trace.steps()) {
        if (!step.snapshot) {
            out << "== " << step.label << "\n";
            continue;
        }
        out << step.label << " = " << to_string(*step.snapshot) << "\n";
        std::istringstream rows(young_diagram(*step.snapshot));
        std::string row;
        while (std::getline(rows, row)) {
            out << "  " << row << "\n";
        }
    }
    return out.str();
}

} // namespace eolab
