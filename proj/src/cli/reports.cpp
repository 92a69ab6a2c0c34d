#include "speclab/cli/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace speclab::cli {

namespace {

using nlohmann::json;

std::string format_cell(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

json json_number(double value) {
  if (std::isfinite(value)) return value;
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

json to_json(const Summary& summary) {
  return json{{"count", summary.count},   {"mean", json_number(summary.mean)},
              {"sd", json_number(summary.sd)},
              {"se", json_number(summary.se)},
              {"mean_abs", json_number(summary.mean_abs)},
              {"min", json_number(summary.min)},
              {"max", json_number(summary.max)}};
}

json to_json(const KsResult& ks) {
  return json{{"statistic", json_number(ks.statistic)},
              {"p_value", json_number(ks.p_value)}};
}

json to_json(const McReport& report) {
  json out{{"requested", report.requested},
           {"completed", report.completed},
           {"failed", report.failed},
           {"base_seed", report.base_seed},
           {"summary", to_json(report.summary)}};
  if (report.ks) out["ks"] = to_json(*report.ks);
  if (!report.extra.empty()) {
    json extra;
    for (const auto& [key, value] : report.extra) {
      extra[key] = json_number(value);
    }
    out["extra"] = extra;
  }
  return out;
}

json to_json(const ConditionReport& report) {
  json out;
  if (report.covariance_decay.is_exponential) {
    out["alpha"] = "exponential";
  } else {
    out["alpha"] = report.covariance_decay.alpha;
  }
  out["exponential_as_alpha_one"] = report.exponential_as_alpha_one;
  out["beta"] = json_number(report.beta);
  out["gamma"] = json_number(report.gamma);
  out["memory"] = to_string(report.memory);
  out["base"] = report.base;
  out["case_i"] = report.case_i;
  out["case_ii"] = report.case_ii;
  out["verdict"] = to_string(report.verdict);
  return out;
}

json to_json(const EstimateResult& result) {
  return json{{"theta_hat", result.theta_hat},
              {"objective", json_number(result.objective)},
              {"converged", result.converged},
              {"boundary_hit", result.boundary_hit},
              {"evals", result.evaluations}};
}

void write_json(const std::filesystem::path& file, const json& j) {
  std::ofstream out(file);
  if (!out) {
    throw std::invalid_argument("cannot write '" + file.string() + "'");
  }
  out << j.dump(2) << "\n";
}

void write_csv(const std::filesystem::path& file,
               const std::vector<CsvColumn>& columns) {
  if (columns.empty()) {
    throw std::invalid_argument("csv: no columns for '" + file.string() + "'");
  }
  const std::size_t rows = columns.front().values.size();
  for (const auto& column : columns) {
    if (column.values.size() != rows) {
      throw std::invalid_argument("csv: ragged columns in '" + file.string() +
                                  "'");
    }
  }
  std::ofstream out(file);
  if (!out) {
    throw std::invalid_argument("cannot write '" + file.string() + "'");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out << ",";
    out << columns[c].name;
  }
  out << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out << ",";
      out << format_cell(columns[c].values[r]);
    }
    out << "\n";
  }
}

}  // namespace speclab::cli
