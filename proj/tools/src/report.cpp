#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace koszulcat::cli {

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["parameters"] = Json::object();
  doc_["window"] = nullptr;
  doc_["tables"] = Json::array();
  doc_["certificates"] = Json::array();
  doc_["witnesses"] = Json::array();
  doc_["notes"] = Json::array();
}

void Report::set_window(std::optional<int> w) {
  if (w) doc_["window"] = *w;
  else doc_["window"] = nullptr;
}

void Report::add_table(const std::string& title, const std::vector<GradedEntry>& rows, const CategoryPresentation& c,
                       bool with_p) {
  Json t;
  t["title"] = title;
  t["rows"] = Json::array();
  for (const auto& e : rows) {
    Json r;
    if (with_p) r["p"] = e.p;
    r["object"] = c.objects[e.object];
    if (e.degree) r["degree"] = *e.degree;
    else r["degree"] = nullptr;
    r["dim"] = e.dim;
    t["rows"].push_back(std::move(r));
  }
  doc_["tables"].push_back(std::move(t));
}

void Report::add_certificate(const Certificate& c) {
  Json j;
  j["statement"] = c.statement;
  j["pass"] = c.pass();
  j["checks"] = Json::array();
  for (const auto& ch : c.checks) {
    Json k;
    k["name"] = ch.name;
    k["pass"] = ch.pass;
    k["detail"] = ch.detail;
    j["checks"].push_back(std::move(k));
  }
  doc_["certificates"].push_back(std::move(j));
}

void Report::add_witness(const RegularityWitness& w, const Representation& r, const std::string& element) {
  Json j;
  j["element"] = element;
  j["object"] = r.cat->objects[w.object];
  if (w.degree) j["degree"] = *w.degree;
  else j["degree"] = nullptr;
  j["kills"] = w.description;
  Json coords = Json::array();
  for (const auto& v : w.vector.column_values(0)) coords.push_back(r.field().format(v));
  j["coordinates"] = std::move(coords);
  doc_["witnesses"].push_back(std::move(j));
}

void Report::add_note(const std::string& note) { doc_["notes"].push_back(note); }

void Report::set_problem(const std::string& path, const std::string& text) {
  doc_["problem"] = {{"path", path}, {"text", text}};
}

bool Report::pass() const {
  if (forced_fail_) return false;
  for (const auto& c : doc_["certificates"]) {
    if (!c["pass"].get<bool>()) return false;
  }
  return true;
}

Json Report::finish() const {
  Json out;
  out["command"] = doc_["command"];
  out["verdict"] = pass() ? "pass" : "fail";
  for (const char* k : {"parameters", "window", "tables", "certificates", "witnesses", "notes"}) out[k] = doc_[k];
  if (doc_.contains("problem")) out["problem"] = doc_["problem"];
  return out;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Json out;
  out["command"] = command;
  out["verdict"] = "input-error";
  out["error"] = {{"kind", kind}, {"message", message}};
  return out;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(std::ostringstream& out, const Json& t) {
  out << t["title"].get<std::string>() << "\n";
  const auto& rows = t["rows"];
  if (rows.empty()) {
    out << "  (empty)\n";
    return;
  }
  const bool with_p = rows[0].contains("p");
  // Row key (p, object) in first-seen order; columns are degrees.
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> grid;
  std::vector<std::string> degrees;
  std::set<std::string> seen_deg;
  std::vector<int> numeric;
  bool all_numeric = true;
  for (const auto& r : rows) {
    const std::pair<std::string, std::string> key{with_p ? cell(r["p"]) : "", cell(r["object"])};
    if (!grid.count(key)) keys.push_back(key);
    const std::string d = cell(r["degree"]);
    grid[key][d] = cell(r["dim"]);
    if (seen_deg.insert(d).second) {
      degrees.push_back(d);
      all_numeric = all_numeric && !r["degree"].is_null();
    }
  }
  if (all_numeric) {
    std::sort(degrees.begin(), degrees.end(), [](const std::string& a, const std::string& b) {
      return std::stoi(a) < std::stoi(b);
    });
  }
  std::size_t w = 3;
  for (const auto& d : degrees) w = std::max(w, d.size() + 1);
  for (const auto& [k, row] : grid) {
    for (const auto& [d, v] : row) w = std::max(w, v.size() + 1);
  }
  std::size_t ow = 6;
  for (const auto& k : keys) ow = std::max(ow, k.second.size());
  out << "  " << (with_p ? "p   " : "") << std::left << std::setw(static_cast<int>(ow)) << "object" << " |";
  for (const auto& d : degrees) out << std::right << std::setw(static_cast<int>(w)) << (d == "-" ? "dim" : d);
  out << "\n";
  for (const auto& k : keys) {
    out << "  ";
    if (with_p) out << std::left << std::setw(4) << k.first;
    out << std::left << std::setw(static_cast<int>(ow)) << k.second << " |";
    for (const auto& d : degrees) {
      const auto it = grid[k].find(d);
      out << std::right << std::setw(static_cast<int>(w)) << (it == grid[k].end() ? "." : it->second);
    }
    out << "\n";
  }
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream out;
  out << r["command"].get<std::string>();
  if (r.contains("problem")) out << "  " << r["problem"]["path"].get<std::string>();
  out << "\n";
  if (r.contains("error")) {
    out << "error (" << r["error"]["kind"].get<std::string>() << "): " << r["error"]["message"].get<std::string>()
        << "\n";
    return out.str();
  }
  for (const auto& [k, v] : r["parameters"].items()) out << "  " << k << ": " << v.dump() << "\n";
  if (!r["window"].is_null()) out << "  certified window: degrees <= " << r["window"].dump() << "\n";
  for (const auto& t : r["tables"]) {
    out << "\n";
    render_table(out, t);
  }
  for (const auto& c : r["certificates"]) {
    out << "\n[" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << c["statement"].get<std::string>() << "\n";
    for (const auto& k : c["checks"]) {
      out << "    " << (k["pass"].get<bool>() ? "ok  " : "FAIL") << "  " << k["name"].get<std::string>();
      const std::string d = k["detail"].get<std::string>();
      if (!d.empty()) out << "  (" << d << ")";
      out << "\n";
    }
  }
  if (!r["witnesses"].empty()) {
    out << "\nwitnesses\n";
    for (const auto& w : r["witnesses"]) {
      out << "  " << w["element"].get<std::string>() << " kills " << w["kills"].get<std::string>() << " at "
          << w["object"].get<std::string>();
      if (!w["degree"].is_null()) out << ", degree " << w["degree"].dump();
      out << "\n";
    }
  }
  if (!r["notes"].empty()) {
    out << "\n";
    for (const auto& n : r["notes"]) out << "note: " << n.get<std::string>() << "\n";
  }
  out << "\nverdict: " << r["verdict"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace koszulcat::cli
