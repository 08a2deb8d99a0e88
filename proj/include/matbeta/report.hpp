#pragma once

#include <string>

#include "json.hpp"
#include "matbeta/manova.hpp"

namespace matbeta {

// Caller context echoed into the report header: which front end ran, the
// dimensions as supplied (before any parameter swap), and engine settings.
struct ReportMeta {
  std::string command;
  int m = 0;
  int nu_h = 0;
  int nu_e = 0;
  double beta = 1.0;
  double alpha = 0.05;
  SeriesControl control;
};

// Assembles the full result document; layout documented in
// docs/report-schema.md.
nlohmann::json build_report(const ReportMeta& meta, const ManovaResult& res);

// Serializer with every finite double printed at 17 significant digits,
// enough to round-trip IEEE binary64 exactly.  Non-finite values become
// null.  Object keys come out in sorted order, so equal documents produce
// identical text.  indent < 0 gives compact single-line output.
std::string dump_json_17(const nlohmann::json& j, int indent = 2);

}  // namespace matbeta
