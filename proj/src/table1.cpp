// SPDX-License-Identifier: Apache-2.0
#include "error.hpp"
#include "orthopoly.hpp"

namespace symdpp {

namespace {

ExactPoly make(std::vector<mpq_class> v) { return ExactPoly(std::move(v)); }

}  // namespace

ExactPoly table1_printed(char family, int m, int K, int n) {
  if (m < 0 || m > 6) fail(Status::domain, "the table lists degrees 0..6");
  if (n < 1 || K <= 2 * n || K % 2 != 0) fail(Status::invalid_argument, "need even K > 2n >= 2");
  const mpq_class k(K), n2(n * n), n4 = n2 * n2, n6 = n4 * n2;
  const mpq_class one(1);
  if (family == 'K') {
    switch (m) {
      case 0: return make({one});
      case 1: return make({0, one});
      case 2: return make({-k / (4 * n2), 0, one});
      case 3: return make({0, -(3 * k - 2) / (4 * n2), 0, one});
      case 4: return make({(3 * k * k - 6 * k) / (16 * n4), 0, -(3 * k - 4) / (2 * n2), 0, one});
      case 5: return make({0, (15 * k * k - 50 * k + 24) / (16 * n4), 0, -5 * (k - 2) / (2 * n2), 0, one});
      default:
        return make({-(15 * k * k * k + 90 * k * k - 120 * k) / (64 * n6), 0, (45 * k * k - 210 * k + 184) / (16 * n4), 0,
                     -5 * (3 * k - 8) / (4 * n2), 0, one});
    }
  }
  if (family != 'G') fail(Status::invalid_argument, "family must be K or G");
  const mpq_class d3 = 3 * k - 2, d5 = 15 * k * k - 50 * k + 24;
  switch (m) {
    case 0: return make({one});
    case 1: return make({0, one});
    case 2: return make({-(3 * k + 2) / (4 * n2), 0, one});
    case 3: return make({0, -(15 * k * k - 30 * k + 16) / (4 * d3 * n2), 0, one});
    case 4: return make({d5 / (16 * n4), 0, -5 * (k - 2) / (2 * n2), 0, one});
    case 5:
      return make({0, (525 * k * k * k * k - 4200 * k * k * k + 11340 * k * k - 11840 * k + 4416) / (16 * d5 * n4), 0,
                   -5 * (21 * k * k * k - 126 * k * k + 224 * k - 96) / (2 * d5 * n2), 0, one});
    default:
      return make({-mpq_class(3, 64) * (35 * k * k * k - 280 * k * k + 588 * k - 240) / n6, 0,
                   mpq_class(7, 16) * (15 * k * k - 90 * k + 112) / n4, 0, (70 - 21 * k) / (4 * n2), 0, one});
  }
}

std::vector<Table1Row> check_table1(int K, int n) {
  if (K % 2 != 0 || K <= 2 * n) fail(Status::invalid_argument, "need even K > 2n");
  const auto prm = EnsembleParams::make(n, K / 2 - n);
  const auto kt = monic_krawtchouk_table(6, prm);
  const auto gt = symplectic_table(6, prm);
  std::vector<Table1Row> rows;
  for (char f : {'K', 'G'}) {
    for (int m = 0; m <= 6; ++m) {
      Table1Row r;
      r.family = f;
      r.m = m;
      r.printed = table1_printed(f, m, K, n);
      r.computed = f == 'K' ? kt[m] : gt[m];
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace symdpp
