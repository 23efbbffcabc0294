// SPDX-License-Identifier: Apache-2.0
#include "params.hpp"

#include "error.hpp"

namespace symdpp {

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid_argument: return "invalid argument";
    case Status::domain: return "domain error";
    case Status::structural: return "structural error";
    case Status::algorithm: return "algorithm error";
    case Status::numeric: return "numeric error";
    case Status::degenerate: return "degenerate parameters";
    case Status::consistency: return "consistency error";
    case Status::region: return "outside oscillatory region";
    case Status::resource: return "resource limit";
  }
  return "unknown";
}

EnsembleParams EnsembleParams::make(int n, int k, const mpq_class& p) {
  if (n < 1 || k < 1) fail(Status::invalid_argument, "n and k must be positive");
  if (n > 1 << 14 || k > 1 << 14) fail(Status::resource, "n or k too large");
  if (p <= 0 || p >= 1) fail(Status::invalid_argument, "p must lie in (0,1)");
  EnsembleParams e;
  e.n = n;
  e.k = k;
  e.K = 2 * n + 2 * k;
  e.H = mpq_class(n, e.K);
  e.H.canonicalize();
  e.p = p;
  e.p.canonicalize();
  return e;
}

std::string EnsembleParams::describe() const {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " K=" + std::to_string(K) +
         " p=" + p.get_str();
}

void require_half(const EnsembleParams& prm, const char* where) {
  if (!prm.half()) fail(Status::invalid_argument, std::string(where) + " requires p = 1/2");
}

}  // namespace symdpp
