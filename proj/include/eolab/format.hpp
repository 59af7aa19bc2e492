#pragma once

// Text, CSV and JSON rendering for tables, reports, harness summaries and
// bijection traces. Output is locale independent.

#include <map>
#include <string>
#include <vector>

#include "eolab/bijections.hpp"
#include "eolab/harness.hpp"
#include "eolab/identities.hpp"
#include "eolab/overpartitions.hpp"
#include "eolab/partitions.hpp"

namespace eolab {

enum class OutputFormat { Text, Csv, Json };

// "text", "csv" or "json"; ParameterError otherwise.
OutputFormat parse_output_format(const std::string& name);
std::string to_string(OutputFormat f);

// A rectangular table of integers with named columns.
struct IntTable {
    std::vector<std::string> columns;
    std::vector<std::vector<long long>> rows;

    friend bool operator==(const IntTable&, const IntTable&) = default;
};

IntTable class_count_table(const std::vector<ClassCountRow>& rows);
IntTable crank_table(const std::map<int, long long>& distribution);

// Text is right-aligned columns under a header line; CSV has a header row;
// JSON is {"rows":[{col: value, ...}, ...]} with keys in column order.
std::string render_table(const IntTable& table, OutputFormat f);
// Inverse of render_table. Throws ParameterError on malformed input.
IntTable parse_table(const std::string& text, OutputFormat f);

// One row of '#' per part, largest part on top. The empty partition draws as "(empty)".
std::string young_diagram(const Partition& p);
// Same, with a trailing '~' on the first row of every overlined size.
std::string young_diagram(const Overpartition& p);

std::string render_report(const VerificationReport& report);
std::string report_to_json(const std::vector<VerificationReport>& reports);
std::string render_harness(const HarnessReport& report);
std::string render_trace(const BijectionTrace& trace);

} // namespace eolab
