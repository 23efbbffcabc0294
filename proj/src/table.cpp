// SPDX-License-Identifier: Apache-2.0
#include "table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "error.hpp"
#include "json.hpp"

#ifndef SYMDPP_BUILD_ID
#define SYMDPP_BUILD_ID "unknown"
#endif

namespace symdpp {

using json = nlohmann::ordered_json;

const char* build_id() { return SYMDPP_BUILD_ID; }

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) fail(Status::structural, "row width differs from the header");
  rows.push_back(std::move(row));
}

void Table::set_meta(const std::string& key, Cell v) {
  for (auto& kv : meta) {
    if (kv.first == key) {
      kv.second = std::move(v);
      return;
    }
  }
  meta.emplace_back(key, std::move(v));
}

const Cell* Table::find_meta(const std::string& key) const {
  for (const auto& kv : meta)
    if (kv.first == key) return &kv.second;
  return nullptr;
}

int Table::column(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

double Table::number(std::size_t row, int col) const {
  const Cell& c = rows.at(row).at(col);
  if (auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  if (auto* d = std::get_if<double>(&c)) return *d;
  fail(Status::structural, "cell is not numeric");
}

namespace {

bool same_cell(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return false;
  if (auto* x = std::get_if<double>(&a)) {
    double y = std::get<double>(b);
    return (std::isnan(*x) && std::isnan(y)) || *x == y;
  }
  return a == b;
}

}  // namespace

bool Table::operator==(const Table& o) const {
  if (columns != o.columns || rows.size() != o.rows.size() || meta.size() != o.meta.size()) return false;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < columns.size(); ++c)
      if (!same_cell(rows[r][c], o.rows[r][c])) return false;
  for (size_t i = 0; i < meta.size(); ++i)
    if (meta[i].first != o.meta[i].first || !same_cell(meta[i].second, o.meta[i].second)) return false;
  return true;
}

std::string cell_text(const Cell& c, int precision) {
  if (auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (auto* s = std::get_if<std::string>(&c)) return *s;
  double d = std::get<double>(c);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, d);
  std::string s(buf);
  // keep a marker so the reader does not mistake an integral double for an integer
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

Cell parse_cell(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::int64_t i = 0;
  auto [pi, ei] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ei == std::errc() && pi == s.data() + s.size() && !s.empty()) return i;
  double d = 0;
  auto [pd, ed] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ed == std::errc() && pd == s.data() + s.size() && !s.empty()) return d;
  return s;
}

json to_json(const Cell& c) {
  if (auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (auto* s = std::get_if<std::string>(&c)) return *s;
  double d = std::get<double>(c);
  if (!std::isfinite(d)) return nullptr;  // JSON has no NaN
  return d;
}

Cell from_json(const json& v) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return static_cast<std::int64_t>(v.get<bool>());
  fail(Status::structural, "unsupported JSON value in table");
}

}  // namespace

void write_csv(const Table& t, std::ostream& os, int precision) {
  for (size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_quote(t.columns[c]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_quote(cell_text(row[c], precision));
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os, int indent) {
  json j;
  json meta = json::object();
  for (const auto& [k, v] : t.meta) meta[k] = to_json(v);
  j["metadata"] = meta;
  j["columns"] = t.columns;
  json data = json::object();
  for (size_t c = 0; c < t.columns.size(); ++c) {
    json col = json::array();
    for (const auto& row : t.rows) col.push_back(to_json(row[c]));
    data[t.columns[c]] = std::move(col);
  }
  j["data"] = std::move(data);
  os << j.dump(indent) << '\n';
}

Table read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(Status::structural, "empty CSV");
  Table t(csv_split(line));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto parts = csv_split(line);
    std::vector<Cell> row;
    for (const auto& p : parts) row.push_back(parse_cell(p));
    t.add(std::move(row));
  }
  return t;
}

Table read_json(std::istream& is) {
  json j = json::parse(is);
  Table t(j.at("columns").get<std::vector<std::string>>());
  const json& data = j.at("data");
  size_t nrows = t.columns.empty() ? 0 : data.at(t.columns[0]).size();
  for (size_t r = 0; r < nrows; ++r) {
    std::vector<Cell> row;
    for (const auto& c : t.columns) row.push_back(from_json(data.at(c).at(r)));
    t.add(std::move(row));
  }
  for (auto it = j.at("metadata").begin(); it != j.at("metadata").end(); ++it) t.meta.emplace_back(it.key(), from_json(it.value()));
  return t;
}

}  // namespace symdpp
