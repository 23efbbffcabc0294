// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "params.hpp"

namespace symdpp {

// Partition with rows[0] >= rows[1] >= ... > 0 (trailing zeros dropped),
// confined to an n x k box.
struct YoungDiagram {
  std::vector<int> rows;
  int n = 0;
  int k = 0;

  int row(int i) const { return i < static_cast<int>(rows.size()) ? rows[i] : 0; }
  int size() const;
  bool operator==(const YoungDiagram& o) const { return rows == o.rows; }
  bool operator<(const YoungDiagram& o) const { return rows < o.rows; }
  std::string str() const;
};

YoungDiagram make_diagram(std::vector<int> rows, int n, int k);
YoungDiagram transpose(const YoungDiagram& d);
// Complement in the n x k box rotated by 180 degrees, then transposed.
// The result lives in a k x n box.
YoungDiagram complement_transpose(const YoungDiagram& d);
std::vector<YoungDiagram> diagrams_in_box(int n, int k);

// Signed letters 1 < 1bar < 2 < 2bar < ...; letter i -> 2i-1, ibar -> 2i.
using Letter = std::uint16_t;
constexpr Letter letter(int i, bool barred) { return static_cast<Letter>(2 * i - 1 + (barred ? 1 : 0)); }
constexpr int letter_index(Letter x) { return (x + 1) / 2; }
constexpr bool letter_barred(Letter x) { return x % 2 == 0; }
std::string letter_str(Letter x);

struct KingTableau {
  std::vector<std::vector<Letter>> rows;
  int rank = 0;

  YoungDiagram shape(int box_k) const;
  bool operator==(const KingTableau& o) const { return rows == o.rows; }
  bool operator<(const KingTableau& o) const { return rows < o.rows; }
  std::string str() const;
};

// Empty string when t satisfies both King conditions, otherwise a description.
std::string king_violation(const KingTableau& t);

struct BinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;

  BinaryMatrix() = default;
  BinaryMatrix(int r, int c) : rows(r), cols(c), bits(static_cast<size_t>(r) * c, 0) {}
  std::uint8_t at(int i, int j) const { return bits[static_cast<size_t>(i) * cols + j]; }
  std::uint8_t& at(int i, int j) { return bits[static_cast<size_t>(i) * cols + j]; }
};

// Flat-storage Berele insertion engine used by every entry point below.
class BereleTableau {
 public:
  BereleTableau(int rank, int max_width);
  explicit BereleTableau(const KingTableau& t, int max_width);

  // Returns the boundary cell removed by a cancellation, if one happened.
  std::optional<std::pair<int, int>> insert(Letter x);

  int rank() const { return rank_; }
  int num_rows() const { return nrows_; }
  int row_length(int r) const { return len_[r]; }
  Letter at(int r, int c) const { return cells_[static_cast<size_t>(r) * stride_ + c]; }
  void clear();
  KingTableau tableau() const;

 private:
  Letter& cell(int r, int c) { return cells_[static_cast<size_t>(r) * stride_ + c]; }
  std::pair<int, int> slide_out(int r, int c);
  void grow(int width);

  int rank_;
  int stride_;
  int nrows_ = 0;
  std::vector<int> len_;
  std::vector<Letter> cells_;
};

struct InsertResult {
  KingTableau tableau;
  std::optional<std::pair<int, int>> vacated;
};

InsertResult berele_insert(const KingTableau& t, Letter x);

struct ProctorResult {
  KingTableau P;
  KingTableau Q;
};

ProctorResult proctor_from_matrix(const BinaryMatrix& m, const EnsembleParams& prm);

// Shape of P only; skips the Q bookkeeping.
YoungDiagram proctor_shape(const BinaryMatrix& m, const EnsembleParams& prm);

// Counter-based generator: the stream for (seed, index) is fixed.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next();

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

BinaryMatrix random_matrix(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t index);
YoungDiagram sample_diagram(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t index = 0);

// Reusable sampler; avoids reallocating the tableau per draw.
class DiagramSampler {
 public:
  explicit DiagramSampler(const EnsembleParams& prm);
  // Writes particle coordinates a_i = lambda_i + n - i + 1 (i = 1..n).
  void sample_particles(std::uint64_t seed, std::uint64_t index, std::vector<int>& coords);
  YoungDiagram sample(std::uint64_t seed, std::uint64_t index);

 private:
  void run(std::uint64_t seed, std::uint64_t index);
  EnsembleParams prm_;
  BereleTableau t_;
  std::vector<std::uint64_t> words_;
};

struct BijectionReport {
  std::uint64_t matrices = 0;
  std::map<YoungDiagram, std::uint64_t> counts;
  bool multiplicities_ok = false;
  bool pairs_distinct = false;
  bool tableaux_valid = false;
  std::string detail;
  bool ok() const { return multiplicities_ok && pairs_distinct && tableaux_valid; }
};

// Exhaustive over all 2^(2nk) matrices; requires 2nk <= 24.
BijectionReport validate_bijection(const EnsembleParams& prm);

}  // namespace symdpp
