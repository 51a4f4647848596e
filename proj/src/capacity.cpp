#include "subseq/capacity.hpp"

#include "subseq/greedy_recovery.hpp"
#include "subseq/qbonacci.hpp"
#include "subseq/sequences.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subseq {

std::size_t best_p(std::size_t q, std::size_t n) {
  if (q < 2) throw std::invalid_argument("best_p requires q >= 2");
  if (n == 0) throw std::invalid_argument("best_p requires n >= 1");
  std::size_t best = 2;
  double best_score = -std::numeric_limits<double>::infinity();
  // Compared in log space; phi_p^n overflows doubles for large n.
  for (std::size_t p = 2; p <= q; ++p) {
    const double score = std::log(static_cast<double>(q + 1 - p)) +
                         static_cast<double>(n) * std::log(phi(p).value);
    if (score > best_score) {
      best_score = score;
      best = p;
    }
  }
  return best;
}

double best_p_heuristic(std::size_t q, std::size_t n) {
  return std::log2(static_cast<double>(q) * static_cast<double>(n));
}

CapacityReport capacity_report(std::size_t q, std::size_t t, std::size_t n, bool exact, const Budget& budget) {
  if (n == 0) throw std::invalid_argument("capacity report requires n >= 1");
  if (q < 2) throw std::invalid_argument("capacity report requires q >= 2");
  CapacityReport r;
  r.params = {q, t, n};
  r.tuple_census = tuple_bounds(q, t, n);
  r.upper_bits = log2_big(r.tuple_census.upper);
  for (const auto& [p, lower] : r.tuple_census.lowers) r.lower_bits_by_p[p] = log2_big(lower);
  r.best_p = best_p(q, n);
  if (exact) {
    r.exact = count_tuples_exact(Alphabet::standard(q), t, n, budget);
    r.tuple_census.exact = r.exact;
    r.exact_bits = log2_big(*r.exact);
  }
  if (n % 2 == 1) {
    const MasterlessBounds m = masterless_bounds(q, t, n);
    r.set_upper_bits = log2_big(m.set_upper);
    for (const auto& [p, lower] : m.set_lowers) r.set_lower_bits_by_p[p] = log2_rational(lower);
  }

  const double nd = static_cast<double>(n);
  r.growth.phi_q = phi(q).value;
  for (std::size_t p = 2; p <= q; ++p) {
    r.growth.phi_p[p] = phi(p).value;
    r.growth.lower_base[p] = static_cast<double>(q + 1 - p) * std::pow(r.growth.phi_p[p], nd);
  }
  r.growth.upper_base = static_cast<double>(q) * std::pow(r.growth.phi_q, nd);
  r.growth.best_p_heuristic = best_p_heuristic(q, n);
  return r;
}

}  // namespace subseq
