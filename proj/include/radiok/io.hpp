#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radiok/dispatcher.hpp"
#include "radiok/labeling.hpp"
#include "radiok/oracle.hpp"

// The CLI's file formats. Labelings travel as JSON
//   {"n", "k", "order", "labels", "span", "provenance", "valid"}
// or as CSV with header "index,vertex,label" preceded by comment lines
// "# n=..., k=..., span=...". Readers accept unordered input (an order/label
// pairing in any sequence, or a vertex->label map) and canonicalize by
// sorting labels ascending and normalizing the smallest label to 0.

namespace radiok {

std::string labeling_to_json(const Labeling& lab);
std::string labeling_to_csv(const Labeling& lab);

/// Parses JSON or CSV (detected from the content). Throws
/// std::invalid_argument on malformed input.
Labeling parse_labeling(const std::string& text);

/// One row of the (n, k) sweep table.
struct TableRow {
  u64 n = 0, k = 0;
  ParityClass parity = ParityClass::SameParity;
  u64 phi_value = 0;
  u64 lb_value = 0;
  u64 lower = 0;
  std::optional<u64> upper;
  std::optional<u64> exact;
  std::optional<u64> construction_span;
  std::string provenance;
};

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);

std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string scan_to_json(const std::vector<ScanRow>& rows);

/// Inverse of scan_to_csv; throws std::invalid_argument on malformed input.
std::vector<ScanRow> parse_scan_csv(const std::string& text);

std::string rn_status_to_json(u64 n, u64 k, const RnStatus& st);
std::string audit_to_json(const AuditReport& report);

}  // namespace radiok
