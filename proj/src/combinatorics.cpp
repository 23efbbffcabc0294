// SPDX-License-Identifier: Apache-2.0
#include "combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "error.hpp"
#include "measure.hpp"

namespace symdpp {

int YoungDiagram::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

std::string YoungDiagram::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << ')';
  return os.str();
}

YoungDiagram make_diagram(std::vector<int> rows, int n, int k) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (static_cast<int>(rows.size()) > n) fail(Status::domain, "diagram has more than n rows");
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] > k) fail(Status::domain, "diagram row outside the box");
    if (i && rows[i] > rows[i - 1]) fail(Status::domain, "diagram rows must weakly decrease");
  }
  return YoungDiagram{std::move(rows), n, k};
}

YoungDiagram transpose(const YoungDiagram& d) {
  std::vector<int> t(d.row(0), 0);
  for (int c = 0; c < d.row(0); ++c)
    for (int r : d.rows)
      if (r > c) ++t[c];
  return YoungDiagram{std::move(t), d.k, d.n};
}

YoungDiagram complement_transpose(const YoungDiagram& d) {
  std::vector<int> hat(d.n);
  for (int i = 0; i < d.n; ++i) hat[i] = d.k - d.row(d.n - 1 - i);
  YoungDiagram c = make_diagram(hat, d.n, d.k);
  return transpose(c);
}

std::vector<YoungDiagram> diagrams_in_box(int n, int k) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int mx) {
    if (i == n) {
      out.push_back(make_diagram(cur, n, k));
      return;
    }
    for (int v = mx; v >= 0; --v) {
      cur.push_back(v);
      rec(i + 1, v);
      cur.pop_back();
    }
  };
  rec(0, k);
  return out;
}

std::string letter_str(Letter x) {
  return std::to_string(letter_index(x)) + (letter_barred(x) ? "'" : "");
}

YoungDiagram KingTableau::shape(int box_k) const {
  std::vector<int> r;
  for (auto& row : rows) r.push_back(static_cast<int>(row.size()));
  return make_diagram(r, rank, box_k);
}

std::string KingTableau::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    for (size_t c = 0; c < rows[r].size(); ++c) os << (c ? " " : "") << letter_str(rows[r][c]);
  }
  return os.str();
}

std::string king_violation(const KingTableau& t) {
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return "empty row " + std::to_string(r + 1);
    if (r && row.size() > t.rows[r - 1].size()) return "rows not weakly decreasing";
    for (size_t c = 0; c < row.size(); ++c) {
      Letter x = row[c];
      if (x < 1 || letter_index(x) > t.rank) return "letter outside alphabet";
      if (c && row[c - 1] > x) return "row not weakly increasing at row " + std::to_string(r + 1);
      if (r && t.rows[r - 1][c] >= x) return "column not strictly increasing at row " + std::to_string(r + 1);
      if (letter_index(x) < static_cast<int>(r) + 1)
        return "symplectic condition broken by " + letter_str(x) + " in row " + std::to_string(r + 1);
    }
  }
  return {};
}

BereleTableau::BereleTableau(int rank, int max_width)
    : rank_(rank), stride_(std::max(1, max_width)), len_(rank + 1, 0),
      cells_(static_cast<size_t>(rank + 1) * stride_, 0) {}

BereleTableau::BereleTableau(const KingTableau& t, int max_width)
    : BereleTableau(t.rank, std::max<int>(max_width, t.rows.empty() ? 1 : static_cast<int>(t.rows[0].size()) + 1)) {
  if (auto v = king_violation(t); !v.empty()) fail(Status::structural, "malformed King tableau: " + v);
  if (static_cast<int>(t.rows.size()) > rank_) fail(Status::structural, "tableau has more rows than its rank");
  for (size_t r = 0; r < t.rows.size(); ++r) {
    for (size_t c = 0; c < t.rows[r].size(); ++c) cell(static_cast<int>(r), static_cast<int>(c)) = t.rows[r][c];
    len_[r] = static_cast<int>(t.rows[r].size());
  }
  nrows_ = static_cast<int>(t.rows.size());
}

void BereleTableau::clear() {
  std::fill(len_.begin(), len_.end(), 0);
  nrows_ = 0;
}

void BereleTableau::grow(int width) {
  int ns = std::max(width, 2 * stride_);
  std::vector<Letter> nc(static_cast<size_t>(rank_ + 1) * ns, 0);
  for (int r = 0; r < nrows_; ++r)
    std::copy_n(&cells_[static_cast<size_t>(r) * stride_], len_[r], &nc[static_cast<size_t>(r) * ns]);
  cells_.swap(nc);
  stride_ = ns;
}

std::optional<std::pair<int, int>> BereleTableau::insert(Letter x) {
  if (x < 1 || letter_index(x) > rank_) fail(Status::domain, "letter outside the alphabet");
  int r = 0;
  // Bump paths move weakly left, so row r+1 is searched only up to column c+1.
  int limit = stride_;
  for (;;) {
    if (r == nrows_) {
      if (r >= rank_) fail(Status::algorithm, "insertion created a row beyond the rank");
      cell(r, 0) = x;
      len_[r] = 1;
      ++nrows_;
      return std::nullopt;
    }
    Letter* b = &cell(r, 0);
    const int len = len_[r];
    const int lim = std::min(len, limit);
    int c;
    if (r == 0) {
      c = static_cast<int>(std::upper_bound(b, b + len, x) - b);
    } else {
      // the new position is usually a few cells left of the previous one
      c = lim;
      while (c > 0 && b[c - 1] > x) --c;
    }
    if (c == len) {
      if (len_[r] == stride_) grow(stride_ + 1);
      cell(r, len_[r]++) = x;
      return std::nullopt;
    }
    Letter y = b[c];
    // i would push ibar out of row i: both letters cancel.
    if (!letter_barred(x) && y == x + 1 && letter_index(x) == r + 1) return slide_out(r, c);
    b[c] = x;
    x = y;
    limit = c + 1;
    ++r;
  }
}

std::pair<int, int> BereleTableau::slide_out(int r, int c) {
  for (;;) {
    bool has_right = c + 1 < len_[r];
    bool has_below = r + 1 < nrows_ && c < len_[r + 1];
    if (!has_right && !has_below) {
      --len_[r];
      if (len_[r] == 0) --nrows_;
      return {r, c};
    }
    if (has_below && (!has_right || cell(r + 1, c) <= cell(r, c + 1))) {
      cell(r, c) = cell(r + 1, c);
      ++r;
    } else {
      cell(r, c) = cell(r, c + 1);
      ++c;
    }
  }
}

KingTableau BereleTableau::tableau() const {
  KingTableau t;
  t.rank = rank_;
  for (int r = 0; r < nrows_; ++r) {
    const Letter* b = &cells_[static_cast<size_t>(r) * stride_];
    t.rows.emplace_back(b, b + len_[r]);
  }
  return t;
}

InsertResult berele_insert(const KingTableau& t, Letter x) {
  BereleTableau e(t, 1);
  auto v = e.insert(x);
  return {e.tableau(), v};
}

namespace {

template <class OnStep>
void run_proctor(const BinaryMatrix& m, const EnsembleParams& prm, BereleTableau& t, OnStep&& on_step) {
  if (m.rows != prm.n || m.cols != 2 * prm.k) fail(Status::structural, "matrix must be n x 2k");
  std::vector<std::pair<int, int>> vac;
  for (int r = 0; r < prm.k; ++r) {
    vac.clear();
    for (int i = prm.n; i >= 1; --i) {
      int a = m.at(i - 1, 2 * r), b = m.at(i - 1, 2 * r + 1);
      if (a == 0 && b == 0) {
        if (auto v = t.insert(letter(i, false))) vac.push_back(*v);
      } else if (a == 1 && b == 0) {
        if (auto v = t.insert(letter(i, true))) vac.push_back(*v);
        if (auto v = t.insert(letter(i, false))) vac.push_back(*v);
      } else if (a == 1 && b == 1) {
        if (auto v = t.insert(letter(i, true))) vac.push_back(*v);
      }
    }
    on_step(r, vac);
  }
}

}  // namespace

ProctorResult proctor_from_matrix(const BinaryMatrix& m, const EnsembleParams& prm) {
  const int n = prm.n, k = prm.k;
  BereleTableau t(n, k + 1);
  std::vector<int> prev(n, 0), mu(n, 0);
  std::vector<Letter> qgrid(static_cast<size_t>(n) * k, 0);
  run_proctor(m, prm, t, [&](int r, const std::vector<std::pair<int, int>>& vac) {
    const int R = r + 1;
    for (int x = 0; x < n; ++x) {
      int lam = x < t.num_rows() ? t.row_length(x) : 0;
      if (lam > prev[x] + 1 || lam > R) fail(Status::algorithm, "step did not add a vertical strip");
      for (auto& v : vac)
        if (v.first == x && v.second < lam) fail(Status::algorithm, "erased box was refilled");
      int a = n - 1 - x;
      int newmu = R - lam;
      for (int b = mu[a]; b < newmu; ++b) {
        int y = R - 1 - b;
        bool erased = std::find(vac.begin(), vac.end(), std::make_pair(x, y)) != vac.end();
        qgrid[static_cast<size_t>(a) * k + b] = letter(R, erased);
      }
      mu[a] = newmu;
      prev[x] = lam;
    }
  });
  ProctorResult res;
  res.P = t.tableau();
  res.Q.rank = k;
  for (int b = 0; b < k; ++b) {
    std::vector<Letter> row;
    for (int a = 0; a < n && mu[a] > b; ++a) row.push_back(qgrid[static_cast<size_t>(a) * k + b]);
    if (row.empty()) break;
    res.Q.rows.push_back(std::move(row));
  }
  return res;
}

YoungDiagram proctor_shape(const BinaryMatrix& m, const EnsembleParams& prm) {
  BereleTableau t(prm.n, prm.k + 1);
  run_proctor(m, prm, t, [](int, const std::vector<std::pair<int, int>>&) {});
  return t.tableau().shape(prm.k);
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t index)
    : key_(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ mix64(index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL)) {}

std::uint64_t StreamRng::next() { return mix64(key_ + (++ctr_) * 0x9e3779b97f4a7c15ULL); }

BinaryMatrix random_matrix(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t index) {
  require_half(prm, "random_matrix");
  BinaryMatrix m(prm.n, 2 * prm.k);
  StreamRng rng(seed, index);
  std::uint64_t w = 0;
  for (size_t b = 0; b < m.bits.size(); ++b) {
    if (b % 64 == 0) w = rng.next();
    m.bits[b] = static_cast<std::uint8_t>((w >> (b % 64)) & 1u);
  }
  return m;
}

YoungDiagram sample_diagram(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t index) {
  DiagramSampler s(prm);
  return s.sample(seed, index);
}

DiagramSampler::DiagramSampler(const EnsembleParams& prm) : prm_(prm), t_(prm.n, prm.k + 1) {
  require_half(prm, "sampling");
  words_.resize((static_cast<size_t>(2) * prm.n * prm.k + 63) / 64);
}

void DiagramSampler::run(std::uint64_t seed, std::uint64_t index) {
  StreamRng rng(seed, index);
  for (auto& w : words_) w = rng.next();
  t_.clear();
  const int n = prm_.n, k = prm_.k;
  for (int r = 0; r < k; ++r) {
    for (int i = n; i >= 1; --i) {
      // Same bit layout as random_matrix: row-major over an n x 2k matrix.
      size_t bit = static_cast<size_t>(i - 1) * 2 * k + 2 * r;
      unsigned a = (words_[bit / 64] >> (bit % 64)) & 1u;
      unsigned b = (words_[(bit + 1) / 64] >> ((bit + 1) % 64)) & 1u;
      if (a == 0 && b == 0) {
        t_.insert(letter(i, false));
      } else if (a == 1) {
        t_.insert(letter(i, true));
        if (b == 0) t_.insert(letter(i, false));
      }
    }
  }
}

void DiagramSampler::sample_particles(std::uint64_t seed, std::uint64_t index, std::vector<int>& coords) {
  run(seed, index);
  const int n = prm_.n;
  coords.resize(n);
  for (int i = 0; i < n; ++i) coords[i] = (i < t_.num_rows() ? t_.row_length(i) : 0) + n - i;
}

YoungDiagram DiagramSampler::sample(std::uint64_t seed, std::uint64_t index) {
  run(seed, index);
  std::vector<int> rows;
  for (int i = 0; i < t_.num_rows(); ++i) rows.push_back(t_.row_length(i));
  return make_diagram(std::move(rows), prm_.n, prm_.k);
}

namespace {

std::string pair_key(const ProctorResult& pr) {
  std::string s;
  for (auto& row : pr.P.rows) {
    for (Letter x : row) s.push_back(static_cast<char>(x));
    s.push_back('\xff');
  }
  s.push_back('\xfe');
  for (auto& row : pr.Q.rows) {
    for (Letter x : row) s.push_back(static_cast<char>(x));
    s.push_back('\xff');
  }
  return s;
}

}  // namespace

BijectionReport validate_bijection(const EnsembleParams& prm) {
  require_half(prm, "validate_bijection");
  const int nbits = 2 * prm.n * prm.k;
  if (nbits > 24) fail(Status::resource, "validate_bijection needs 2nk <= 24");
  if (prm.n > 120 || prm.k > 120) fail(Status::resource, "rank too large for pair keys");
  BijectionReport rep;
  rep.tableaux_valid = true;
  // Exact keys for small cases; 64-bit digests beyond 2^16 matrices to bound memory.
  std::unordered_set<std::string> seen;
  std::vector<std::uint64_t> digests;
  bool distinct = true;
  BinaryMatrix m(prm.n, 2 * prm.k);
  const std::uint64_t total = std::uint64_t{1} << nbits;
  const bool exact_keys = nbits <= 16;
  if (exact_keys) seen.reserve(total);
  else digests.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int b = 0; b < nbits; ++b) m.bits[b] = static_cast<std::uint8_t>((mask >> b) & 1u);
    ProctorResult pr = proctor_from_matrix(m, prm);
    YoungDiagram lam = pr.P.shape(prm.k);
    if (rep.tableaux_valid) {
      std::string why = king_violation(pr.P);
      if (why.empty()) why = king_violation(pr.Q);
      if (why.empty() && !(pr.Q.shape(prm.n) == complement_transpose(lam))) why = "Q shape is not the complementary shape";
      if (!why.empty()) {
        rep.tableaux_valid = false;
        rep.detail = "matrix " + std::to_string(mask) + ": " + why;
      }
    }
    ++rep.counts[lam];
    if (exact_keys) {
      if (distinct && !seen.insert(pair_key(pr)).second) {
        distinct = false;
        if (rep.detail.empty()) rep.detail = "matrix " + std::to_string(mask) + " repeats a (P,Q) pair";
      }
    } else {
      digests.push_back(std::hash<std::string>{}(pair_key(pr)));
    }
    ++rep.matrices;
  }
  if (!exact_keys) {
    std::sort(digests.begin(), digests.end());
    if (std::adjacent_find(digests.begin(), digests.end()) != digests.end()) {
      distinct = false;
      if (rep.detail.empty()) rep.detail = "two matrices share a (P,Q) digest";
    }
  }
  rep.pairs_distinct = distinct;
  rep.multiplicities_ok = true;
  for (const auto& lam : diagrams_in_box(prm.n, prm.k)) {
    mpz_class want = sp_dimension(lam, prm.n) * sp_dimension(complement_transpose(lam), prm.k);
    auto it = rep.counts.find(lam);
    std::uint64_t got = it == rep.counts.end() ? 0 : it->second;
    if (want != mpz_class(std::to_string(got))) {
      rep.multiplicities_ok = false;
      if (rep.detail.empty())
        rep.detail = "shape " + lam.str() + ": " + std::to_string(got) + " matrices, expected " + want.get_str();
    }
  }
  return rep;
}

}  // namespace symdpp
