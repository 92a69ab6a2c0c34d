#ifndef SPECLAB_CLI_REPORTS_HPP
#define SPECLAB_CLI_REPORTS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "speclab/lab.hpp"
#include "speclab/stats.hpp"
#include "speclab/whittle.hpp"

namespace speclab::cli {

/// JSON views of result records. Heavy per-replication arrays stay out of
/// these; they are streamed to CSV instead.
nlohmann::json to_json(const Summary& summary);
nlohmann::json to_json(const KsResult& ks);
nlohmann::json to_json(const McReport& report);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const EstimateResult& result);

/// JSON has no infinity literal; nonfinite values are emitted as strings
/// ("inf", "-inf", "nan") instead of nlohmann's null.
nlohmann::json json_number(double value);

/// Serialized with sorted keys, 2-space indent, trailing newline, and no
/// timestamps: rerunning a config byte-identically reproduces the file.
void write_json(const std::filesystem::path& file, const nlohmann::json& j);

struct CsvColumn {
  std::string name;
  std::vector<double> values;
};

/// Column-oriented CSV with %.17g cells (lossless round-trip). Columns must
/// share one length.
void write_csv(const std::filesystem::path& file,
               const std::vector<CsvColumn>& columns);

}  // namespace speclab::cli

#endif  // SPECLAB_CLI_REPORTS_HPP
