#include "subseq/runtime.hpp"

#include "subseq/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string_view>

namespace subseq {

namespace {

template <class T>
bool parse_env(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return false;
  const std::string_view text(raw);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return false;
  out = value;
  return true;
}

}  // namespace

unsigned worker_count() {
  unsigned workers = 0;
  if (parse_env("SUBSEQ_WORKERS", workers) && workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

double budget_limit() {
  double limit = 0;
  if (parse_env("SUBSEQ_BUDGET", limit) && limit > 0) return limit;
  return kDefaultBudget;
}

void Budget::check(const std::string& what, double estimated) const {
  if (unlimited) return;
  const double cap = effective();
  if (estimated > cap) throw BudgetExceeded(what, estimated, cap);
}

}  // namespace subseq
