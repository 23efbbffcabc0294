// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symdpp {

using Cell = std::variant<std::int64_t, double, std::string>;

// Column-ordered result table. CSV gets the header row and values only; JSON
// mirrors each column as an array next to a metadata object.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  explicit Table(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}
  void add(std::vector<Cell> row);
  void set_meta(const std::string& key, Cell v);
  const Cell* find_meta(const std::string& key) const;
  int column(const std::string& name) const;  // -1 when absent
  double number(std::size_t row, int col) const;

  bool operator==(const Table& o) const;
};

std::string cell_text(const Cell& c, int precision = 17);

void write_csv(const Table& t, std::ostream& os, int precision = 17);
void write_json(const Table& t, std::ostream& os, int indent = 2);
Table read_csv(std::istream& is);
Table read_json(std::istream& is);

// Identifier baked in at configure time.
const char* build_id();

}  // namespace symdpp
