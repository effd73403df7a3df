#include "radiok/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace radiok {

namespace {

using nlohmann::json;

// Pair up (vertex, label), sort by label (vertex breaks ties), and shift
// the smallest label to 0. This is the canonical ordered form.
Labeling canonicalize(u64 n, u64 k, std::vector<std::pair<u64, u64>> vertex_label,
                      std::string provenance) {
  std::sort(vertex_label.begin(), vertex_label.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.second, a.first) < std::tie(b.second, b.first);
            });
  Labeling lab;
  lab.n = n;
  lab.k = k;
  lab.provenance = std::move(provenance);
  lab.order.reserve(vertex_label.size());
  lab.labels.reserve(vertex_label.size());
  const u64 base = vertex_label.empty() ? 0 : vertex_label.front().second;
  for (const auto& [v, f] : vertex_label) {
    lab.order.push_back(v);
    lab.labels.push_back(f - base);
  }
  validate_shape(lab);
  return lab;
}

u64 get_u64(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw std::invalid_argument(std::string("labeling JSON: missing or non-integer \"") + key +
                                "\"");
  return j[key].get<u64>();
}

Labeling parse_labeling_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("labeling JSON: ") + e.what());
  }
  const u64 n = get_u64(j, "n");
  const u64 k = get_u64(j, "k");
  std::string provenance = j.value("provenance", std::string("external"));
  std::vector<std::pair<u64, u64>> pairs;

  if (j.contains("order") || j.contains("labels")) {
    if (!j.contains("order") || !j.contains("labels") || !j["order"].is_array() ||
        !j["labels"].is_array() || j["order"].size() != j["labels"].size())
      throw std::invalid_argument("labeling JSON: \"order\" and \"labels\" must be equal-length arrays");
    for (std::size_t i = 0; i < j["order"].size(); ++i)
      pairs.emplace_back(j["order"][i].get<u64>(), j["labels"][i].get<u64>());
  } else if (j.contains("labels_by_vertex") && j["labels_by_vertex"].is_object()) {
    for (const auto& [key, value] : j["labels_by_vertex"].items())
      pairs.emplace_back(std::stoull(key), value.get<u64>());
  } else {
    throw std::invalid_argument(
        "labeling JSON: need \"order\"+\"labels\" or \"labels_by_vertex\"");
  }
  return canonicalize(n, k, std::move(pairs), std::move(provenance));
}

Labeling parse_labeling_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<u64> n, k;
  std::string provenance = "external";
  std::vector<std::pair<u64, u64>> pairs;
  bool header_seen = false;

  auto parse_comment_field = [](const std::string& s, const std::string& key) -> std::optional<u64> {
    const auto pos = s.find(key + "=");
    if (pos == std::string::npos) return std::nullopt;
    return std::stoull(s.substr(pos + key.size() + 1));
  };

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (auto v = parse_comment_field(line, "n")) n = v;
      if (auto v = parse_comment_field(line, "k")) k = v;
      const auto pos = line.find("provenance=");
      if (pos != std::string::npos) provenance = line.substr(pos + 11);
      continue;
    }
    if (!header_seen) {
      if (line != "index,vertex,label")
        throw std::invalid_argument("labeling CSV: expected header \"index,vertex,label\"");
      header_seen = true;
      continue;
    }
    u64 fields[3];
    std::size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      const auto comma = line.find(',', start);
      const bool last = f == 2;
      if (last != (comma == std::string::npos))
        throw std::invalid_argument("labeling CSV: row needs exactly 3 fields: " + line);
      const std::string cell = line.substr(start, last ? std::string::npos : comma - start);
      try {
        fields[f] = std::stoull(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("labeling CSV: non-integer field \"" + cell + "\"");
      }
      start = comma + 1;
    }
    pairs.emplace_back(fields[1], fields[2]);
  }
  if (!n || !k) throw std::invalid_argument("labeling CSV: missing \"# n=..., k=...\" comment");
  if (!header_seen) throw std::invalid_argument("labeling CSV: missing header");
  return canonicalize(*n, *k, std::move(pairs), std::move(provenance));
}

std::string opt_cell(const std::optional<u64>& v) {
  return v ? std::to_string(*v) : std::string();
}

json opt_json(const std::optional<u64>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string labeling_to_json(const Labeling& lab) {
  json j;
  j["n"] = lab.n;
  j["k"] = lab.k;
  j["order"] = lab.order;
  j["labels"] = lab.labels;
  j["span"] = lab.span();
  j["provenance"] = lab.provenance;
  j["valid"] = true;
  return j.dump(2) + "\n";
}

std::string labeling_to_csv(const Labeling& lab) {
  std::string out = "# n=" + std::to_string(lab.n) + ", k=" + std::to_string(lab.k) +
                    ", span=" + std::to_string(lab.span()) + "\n";
  if (!lab.provenance.empty()) out += "# provenance=" + lab.provenance + "\n";
  out += "index,vertex,label\n";
  for (u64 i = 0; i < lab.n; ++i)
    out += std::to_string(i) + "," + std::to_string(lab.order[i]) + "," +
           std::to_string(lab.labels[i]) + "\n";
  return out;
}

Labeling parse_labeling(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("labeling file is empty");
  return text[first] == '{' ? parse_labeling_json(text) : parse_labeling_csv(text);
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,k,parity_case,phi,lb,lower,upper,exact,provenance,construction_span\n";
  for (const TableRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + to_string(r.parity) + "," +
           std::to_string(r.phi_value) + "," + std::to_string(r.lb_value) + "," +
           std::to_string(r.lower) + "," + opt_cell(r.upper) + "," + opt_cell(r.exact) + "," +
           r.provenance + "," + opt_cell(r.construction_span) + "\n";
  }
  return out;
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const TableRow& r : rows) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["parity_case"] = to_string(r.parity);
    j["phi"] = r.phi_value;
    j["lb"] = r.lb_value;
    j["lower"] = r.lower;
    j["upper"] = opt_json(r.upper);
    j["exact"] = opt_json(r.exact);
    j["provenance"] = r.provenance;
    j["construction_span"] = opt_json(r.construction_span);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::string out = "n,k,h,p,lb,conjectured,oracle_value,verdict\n";
  for (const ScanRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.h) + "," +
           std::to_string(r.p) + "," + std::to_string(r.lb_value) + "," +
           std::to_string(r.conjectured) + "," + opt_cell(r.oracle_value) + "," +
           to_string(r.verdict) + "\n";
  }
  return out;
}

std::string scan_to_json(const std::vector<ScanRow>& rows) {
  json arr = json::array();
  for (const ScanRow& r : rows) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["h"] = r.h;
    j["p"] = r.p;
    j["lb"] = r.lb_value;
    j["conjectured"] = r.conjectured;
    j["oracle_value"] = opt_json(r.oracle_value);
    j["verdict"] = to_string(r.verdict);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ScanRow> parse_scan_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ScanRow> rows;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "n,k,h,p,lb,conjectured,oracle_value,verdict")
        throw std::invalid_argument("scan CSV: unexpected header: " + line);
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 8) throw std::invalid_argument("scan CSV: row needs 8 fields: " + line);
    ScanRow r;
    r.n = std::stoull(cells[0]);
    r.k = std::stoull(cells[1]);
    r.h = std::stoull(cells[2]);
    r.p = std::stoull(cells[3]);
    r.lb_value = std::stoull(cells[4]);
    r.conjectured = std::stoull(cells[5]);
    if (!cells[6].empty()) r.oracle_value = std::stoull(cells[6]);
    if (cells[7] == "Match") r.verdict = ScanVerdict::Match;
    else if (cells[7] == "Mismatch") r.verdict = ScanVerdict::Mismatch;
    else if (cells[7] == "Inconclusive") r.verdict = ScanVerdict::Inconclusive;
    else throw std::invalid_argument("scan CSV: unknown verdict \"" + cells[7] + "\"");
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("scan CSV: missing header");
  return rows;
}

std::string rn_status_to_json(u64 n, u64 k, const RnStatus& st) {
  json j;
  j["n"] = n;
  j["k"] = k;
  j["kind"] = st.exact() ? "exact" : "bounds";
  if (st.exact()) j["value"] = st.value;
  j["lower"] = st.lower;
  j["upper"] = opt_json(st.upper);
  j["provenance"] = st.provenance;
  j["construction_available"] = st.construction_available;
  return j.dump(2) + "\n";
}

std::string audit_to_json(const AuditReport& report) {
  json j;
  j["n_max"] = report.n_max;
  j["oracle_n_max"] = report.oracle_n_max;
  j["instances_checked"] = report.instances_checked;
  j["contradictions"] = json::array();
  for (const AuditEntry& e : report.contradictions) {
    json c;
    c["n"] = e.n;
    c["k"] = e.k;
    c["detail"] = e.detail;
    j["contradictions"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace radiok
