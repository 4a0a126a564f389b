#include "ecg/bounds.hpp"

#include <stdexcept>

#include "ecg/constructions.hpp"

namespace ecg {
namespace {

long long c2(long long x) { return x * (x - 1) / 2; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

long long disjoint_clique_sum_threshold(int k, int m, int n) {
  require(k >= 3, "disjoint_clique_sum_threshold: need k >= 3");
  require(m >= 1, "disjoint_clique_sum_threshold: need m >= 1");
  require(n >= static_cast<long long>(k) * m, "disjoint_clique_sum_threshold: need n >= k*m");
  long long kk = k, mm = m, nn = n;
  long long core = nn - kk * (mm - 1);  // order left after peeling m-1 cliques
  return c2(core) + anti_ramsey_rb(static_cast<int>(core), k) + kk * (mm - 1) * (2 * nn - 1) -
         kk * kk * (mm - 1) * (mm - 1);
}

long long refuted_mk3_conjecture_threshold(int n, int m) {
  require(n >= 1 && m >= 1, "refuted_mk3_conjecture_threshold: need n, m >= 1");
  return c2(n + 1) + 6LL * m - 6;
}

BoundThreshold bound_value(const BoundQuery& q) {
  require(q.n >= 1, "bound_value: need n >= 1");
  switch (q.id) {
    case BoundId::thm11:
      return {c2(q.n + 1), false, BoundTarget::edges_plus_colors};
    case BoundId::thm12:
      require(q.k >= 4, "bound_value: thm12 needs k >= 4");
      require(q.n >= q.k, "bound_value: thm12 needs n >= k");
      return {c2(q.n) + turan_edges(q.n, q.k - 2) + 2, false, BoundTarget::edges_plus_colors};
    case BoundId::cor13:
      require(q.k >= 3, "bound_value: cor13 needs k >= 3");
      require(q.n >= q.k, "bound_value: cor13 needs n >= k");
      return {c2(q.n) + anti_ramsey_rb(q.n, q.k), false, BoundTarget::edges_plus_colors};
    case BoundId::prop14_f:
      return {disjoint_clique_sum_threshold(q.k, q.m, q.n), false,
              BoundTarget::edges_plus_colors};
    case BoundId::thm15:
      require(q.m >= 1, "bound_value: thm15 needs m >= 1");
      return {static_cast<long long>(q.m) * q.n - c2(q.m + 1), true, BoundTarget::colors};
    case BoundId::conj14:
      require(q.m >= 1, "bound_value: conj14 needs m >= 1");
      return {c2(q.n) + static_cast<long long>(q.m) * q.n - c2(q.m + 1), true,
              BoundTarget::edges_plus_colors};
    case BoundId::lili_edge_disjoint:
      require(q.k >= 1, "bound_value: lili_edge_disjoint needs k >= 1");
      return {c2(q.n + 1) + 3LL * q.k - 3, false, BoundTarget::edges_plus_colors};
  }
  throw std::invalid_argument("bound_value: unknown bound id");
}

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::thm11: return "thm11";
    case BoundId::thm12: return "thm12";
    case BoundId::cor13: return "cor13";
    case BoundId::prop14_f: return "prop14_f";
    case BoundId::thm15: return "thm15";
    case BoundId::conj14: return "conj14";
    case BoundId::lili_edge_disjoint: return "lili_edge_disjoint";
  }
  return "?";
}

std::optional<BoundId> bound_id_from_string(const std::string& s) {
  if (s == "thm11") return BoundId::thm11;
  if (s == "thm12") return BoundId::thm12;
  if (s == "cor13") return BoundId::cor13;
  if (s == "prop14_f") return BoundId::prop14_f;
  if (s == "thm15") return BoundId::thm15;
  if (s == "conj14") return BoundId::conj14;
  if (s == "lili_edge_disjoint") return BoundId::lili_edge_disjoint;
  return std::nullopt;
}

}  // namespace ecg
