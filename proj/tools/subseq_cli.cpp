// Command-line front end for the subsequence census library.
//
// Exit status: 0 success, 1 usage error, 2 verification failure,
// 3 budget exceeded.

#include "subseq/capacity.hpp"
#include "subseq/greedy_recovery.hpp"
#include "subseq/master_census.hpp"
#include "subseq/qbonacci.hpp"
#include "subseq/report.hpp"
#include "subseq/sequences.hpp"
#include "subseq/subseq_census.hpp"
#include "subseq/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace subseq;
using report::Json;

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string format = "table";
  bool no_budget = false;
  double budget = 0;
};

Budget make_budget(const Options& o) { return Budget{o.budget, o.no_budget}; }

/// Symbols in order of first appearance across the inputs.
Alphabet infer_alphabet(const std::vector<std::string>& texts) {
  bool comma = false;
  for (const auto& t : texts) comma = comma || t.find(',') != std::string::npos;
  std::vector<std::string> symbols;
  auto add = [&](const std::string& token) {
    if (!token.empty() && std::find(symbols.begin(), symbols.end(), token) == symbols.end()) symbols.push_back(token);
  };
  for (const auto& text : texts) {
    if (comma) {
      std::size_t start = 0;
      while (true) {
        const auto pos = text.find(',', start);
        add(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
    } else {
      for (char ch : text) add(std::string(1, ch));
    }
  }
  if (symbols.empty()) symbols.emplace_back("A");
  return Alphabet(std::move(symbols));
}

Alphabet resolve_alphabet(const std::string& explicit_alphabet, const std::vector<std::string>& texts) {
  if (!explicit_alphabet.empty()) return Alphabet::parse(explicit_alphabet);
  return infer_alphabet(texts);
}

Json big_list(const std::vector<BigCount>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(report::big(v));
  return out;
}

void emit(const Json& doc, const Options& o) { std::cout << report::render(doc, report::parse_format(o.format)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact subsequence and synthesis-capacity censuses"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-budget", opts.no_budget, "Disable enumeration budget guards");
  app.add_option("--budget", opts.budget, "Enumeration budget in elementary steps (default: SUBSEQ_BUDGET or 1e9)");

  std::function<int()> action;

  // qbonacci
  auto* qb = app.add_subcommand("qbonacci", "q-bonacci number F_q(t)");
  std::size_t qb_q = 0;
  std::int64_t qb_t = 0;
  bool qb_sum = false;
  qb->add_option("--q", qb_q, "Order q")->required();
  qb->add_option("--t", qb_t, "Index t")->required();
  qb->add_flag("--sum", qb_sum, "Also report S_q(t) = F_q(0) + ... + F_q(t)");
  qb->callback([&] {
    action = [&] {
      Json result = {{"fib", report::big(fib_q(qb_q, qb_t))}};
      if (qb_sum) result["partial_sum"] = report::big(partial_sum_fib(qb_q, qb_t));
      emit(report::document("qbonacci", {{"q", qb_q}, {"t", qb_t}}, result), opts);
      return 0;
    };
  });

  // phi
  auto* ph = app.add_subcommand("phi", "Growth root of z = 2 - z^-q");
  std::size_t ph_q = 0;
  std::string ph_method = "bisect";
  double ph_tol = 1e-13;
  std::size_t ph_iter = 200;
  ph->add_option("--q", ph_q, "Order q")->required();
  ph->add_option("--method", ph_method)->check(CLI::IsMember({"bisect", "cfrac"}))->capture_default_str();
  ph->add_option("--tol", ph_tol, "Bisection tolerance")->capture_default_str();
  ph->add_option("--iterations", ph_iter, "Continued-fraction iterations")->capture_default_str();
  ph->callback([&] {
    action = [&] {
      const RootResult r = ph_method == "bisect" ? phi(ph_q, ph_tol) : phi_cfrac(ph_q, ph_iter);
      Json result = {{"value", r.value},
                     {"method", ph_method},
                     {"residual", r.residual},
                     {"iterations", r.iterations}};
      const double qd = static_cast<double>(ph_q);
      Json diagnostics = {{"interval_low", 2.0 * (1.0 - std::exp2(-qd))},
                          {"interval_high", 2.0},
                          {"z_root", z_root(ph_q)}};
      emit(report::document("phi", {{"q", ph_q}, {"method", ph_method}}, result, Json::object(), diagnostics), opts);
      return 0;
    };
  });

  // count
  auto* ct = app.add_subcommand("count", "Distinct subsequences of a lineup");
  std::string ct_master, ct_alphabet;
  bool ct_tau = false, ct_len = false;
  ct->add_option("--master", ct_master, "Master lineup")->required();
  ct->add_option("--alphabet", ct_alphabet, "Alphabet (default: symbols in order of appearance)");
  auto* by_tau = ct->add_flag("--by-tau", ct_tau, "Histogram by synthesis time");
  ct->add_flag("--by-length", ct_len, "Histogram by length")->excludes(by_tau);
  ct->callback([&] {
    action = [&] {
      const Alphabet alphabet = resolve_alphabet(ct_alphabet, {ct_master});
      const Strand m = parse_strand(ct_master, alphabet);
      Json result = {{"distinct_subsequences", report::big(distinct_subsequences(m))}};
      if (ct_tau) result["by_tau"] = big_list(tau_histogram(m).counts);
      if (ct_len) result["by_length"] = big_list(length_histogram(m).counts);
      emit(report::document("count", {{"master", ct_master}, {"alphabet", alphabet.to_string()}}, result), opts);
      return 0;
    };
  });

  // tau
  auto* ta = app.add_subcommand("tau", "Synthesis time of a strand");
  std::string ta_strand, ta_master, ta_cyclic, ta_alphabet;
  ta->add_option("--strand", ta_strand, "Strand")->required();
  auto* ta_m = ta->add_option("--master", ta_master, "Finite master lineup");
  auto* ta_c = ta->add_option("--cyclic", ta_cyclic, "Alphabet whose cyclic lineup is used");
  ta_m->excludes(ta_c);
  ta->add_option("--alphabet", ta_alphabet, "Alphabet for --master (default: inferred)");
  ta->callback([&] {
    if (ta_master.empty() == ta_cyclic.empty() && ta_m->count() + ta_c->count() != 1)
      throw CLI::ValidationError("tau", "exactly one of --master or --cyclic is required");
    action = [&] {
      std::optional<Alphabet> alphabet;
      std::optional<MasterLineup> lineup;
      Json params;
      if (ta_c->count() > 0) {
        alphabet = Alphabet::parse(ta_cyclic);
        lineup = MasterLineup::cyclic(cyclic_lineup(*alphabet, alphabet->size()));
        params = {{"strand", ta_strand}, {"cyclic", alphabet->to_string()}};
      } else {
        alphabet = resolve_alphabet(ta_alphabet, {ta_master, ta_strand});
        lineup = MasterLineup::finite(parse_strand(ta_master, *alphabet));
        params = {{"strand", ta_strand}, {"master", ta_master}};
      }
      const auto value = tau(parse_strand(ta_strand, *alphabet), *lineup);
      Json result = {{"tau", value ? Json(*value) : Json(nullptr)}};
      emit(report::document("tau", params, result), opts);
      return 0;
    };
  });

  // census
  auto* ce = app.add_subcommand("census", "Counts over lineups and strand collections");
  ce->require_subcommand(1);
  struct CensusArgs {
    std::size_t q = 2, t = 0, n = 1, p = 2;
    bool exact = false, bounds = false, multiset = false;
  } ca;
  auto add_common = [&](CLI::App* sub, bool needs_q, bool needs_n) {
    if (needs_q) sub->add_option("--q", ca.q, "Alphabet size")->required();
    sub->add_option("--t", ca.t, "Lineup length")->required();
    if (needs_n) sub->add_option("--n", ca.n, "Number of strands")->required();
    sub->add_flag("--exact", ca.exact, "Exhaustive exact count");
    sub->add_flag("--bounds", ca.bounds, "Closed-form bounds");
  };
  auto* ce_pairs = ce->add_subcommand("pairs", "(M, x) pairs");
  add_common(ce_pairs, true, false);
  auto* ce_tuples = ce->add_subcommand("tuples", "(M, x^1..x^n) tuples");
  add_common(ce_tuples, true, true);
  auto* ce_mat = ce->add_subcommand("matrices", "Valid t x n selection matrices");
  add_common(ce_mat, false, true);
  ce_mat->add_option("--p", ca.p, "Forbidden zero-run length")->required();
  auto* ce_mt = ce->add_subcommand("masterless-tuples", "Ordered strand tuples with SCS length <= t");
  add_common(ce_mt, true, true);
  auto* ce_ms = ce->add_subcommand("masterless-sets", "Unordered strand sets with SCS length <= t");
  add_common(ce_ms, true, true);
  ce_ms->add_flag("--multiset", ca.multiset, "Allow repeated strands");

  ce_pairs->callback([&] {
    action = [&] {
      const bool want_bounds = ca.bounds || !ca.exact;
      Json params = {{"q", ca.q}, {"t", ca.t}, {"n", 1}};
      Json result = Json::object(), bounds = Json::object();
      CensusResult r = want_bounds ? pair_bounds(ca.q, ca.t) : CensusResult{};
      if (ca.exact) {
        r.exact = count_pairs_exact(Alphabet::standard(ca.q), ca.t, make_budget(opts));
        result["exact"] = report::big(*r.exact);
      }
      if (want_bounds) bounds = report::census_bounds(r);
      Json diag = Json::object();
      if (want_bounds && ca.q >= 2) {
        diag["upper_growth"] = upper_growth_constant(ca.q);
        for (std::size_t p = 2; p <= ca.q; ++p) diag["lower_growth_" + std::to_string(p)] = lower_growth_constant(ca.q, p);
      }
      emit(report::document("census pairs", params, result, bounds, diag), opts);
      return 0;
    };
  });
  ce_tuples->callback([&] {
    action = [&] {
      const bool want_bounds = ca.bounds || !ca.exact;
      Json params = {{"q", ca.q}, {"t", ca.t}, {"n", ca.n}};
      Json result = Json::object(), bounds = Json::object();
      CensusResult r = want_bounds ? tuple_bounds(ca.q, ca.t, ca.n) : CensusResult{};
      if (ca.exact) {
        r.exact = count_tuples_exact(Alphabet::standard(ca.q), ca.t, ca.n, make_budget(opts));
        result["exact"] = report::big(*r.exact);
      }
      if (want_bounds) bounds = report::census_bounds(r);
      emit(report::document("census tuples", params, result, bounds), opts);
      return 0;
    };
  });
  ce_mat->callback([&] {
    action = [&] {
      Json params = {{"t", ca.t}, {"n", ca.n}, {"p", ca.p}};
      Json result = Json::object();
      Json bounds = {{"bound_lower", report::rational(Rational(pow_big(fib_q(ca.p, static_cast<std::int64_t>(ca.t) + 1), ca.n),
                                                               pow_big(2, ca.t)))}};
      if (ca.exact) result = report::matrix_census(count_valid_matrices(ca.t, ca.n, ca.p, make_budget(opts)));
      emit(report::document("census matrices", params, result, bounds), opts);
      return 0;
    };
  });
  auto masterless = [&](bool sets) {
    const bool want_bounds = ca.bounds || !ca.exact;
    Json params = {{"q", ca.q}, {"t", ca.t}, {"n", ca.n}};
    if (sets) params["kind"] = ca.multiset ? "multiset" : "set";
    Json result = Json::object(), bounds = Json::object();
    if (ca.exact) {
      const Alphabet alphabet = Alphabet::standard(ca.q);
      const BigCount count = sets ? count_masterless_sets(alphabet, ca.t, ca.n,
                                                          ca.multiset ? SetKind::multiset : SetKind::distinct,
                                                          make_budget(opts))
                                  : count_masterless_tuples(alphabet, ca.t, ca.n, make_budget(opts));
      result["exact"] = report::big(count);
    }
    if (want_bounds) bounds = report::masterless_bounds(masterless_bounds(ca.q, ca.t, ca.n));
    emit(report::document(sets ? "census masterless-sets" : "census masterless-tuples", params, result, bounds), opts);
    return 0;
  };
  ce_mt->callback([&] { action = [&] { return masterless(false); }; });
  ce_ms->callback([&] { action = [&] { return masterless(true); }; });

  // greedy
  auto* gr = app.add_subcommand("greedy", "Majority-vote greedy common supersequence");
  std::string gr_strands, gr_alphabet;
  gr->add_option("--strands", gr_strands, "Comma-separated strands over single-character symbols")->required();
  gr->add_option("--alphabet", gr_alphabet, "Alphabet (default: symbols in order of appearance)");
  gr->callback([&] {
    action = [&] {
      std::vector<std::string> texts;
      std::size_t start = 0;
      while (true) {
        const auto pos = gr_strands.find(',', start);
        texts.push_back(gr_strands.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      std::string joined;
      for (const auto& t : texts) joined += t;
      const Alphabet alphabet = resolve_alphabet(gr_alphabet, {joined});
      if (!alphabet.single_char()) throw std::invalid_argument("greedy --strands requires single-character symbols");
      std::vector<Strand> strands;
      for (const auto& t : texts) strands.push_back(parse_strand(t, alphabet));
      const Strand scs = greedy_scs(strands, alphabet);
      Json result = {{"supersequence", format_strand(scs, alphabet)}, {"length", scs.size()}};
      Json diag = Json::object();
      try {
        diag["scs_length"] = scs_length(strands);
      } catch (const BudgetExceeded&) {
        diag["scs_length"] = nullptr;
      }
      Json votes = Json::array();
      for (const auto& step : greedy_trace(strands, alphabet))
        votes.push_back(Json{{"letter", alphabet.symbol(step.letter)}, {"votes", step.votes}, {"live", step.live}});
      diag["trace"] = std::move(votes);
      emit(report::document("greedy", {{"strands", gr_strands}, {"alphabet", alphabet.to_string()}}, result,
                            Json::object(), diag),
           opts);
      return 0;
    };
  });

  // capacity
  auto* cp = app.add_subcommand("capacity", "Capacity report in bits");
  std::size_t cp_q = 0, cp_t = 0, cp_n = 0;
  bool cp_exact = false;
  cp->add_option("--q", cp_q, "Alphabet size")->required();
  cp->add_option("--t", cp_t, "Lineup length")->required();
  cp->add_option("--n", cp_n, "Number of strands")->required();
  cp->add_flag("--exact", cp_exact, "Include the exhaustive tuple census");
  cp->callback([&] {
    action = [&] {
      const CapacityReport r = capacity_report(cp_q, cp_t, cp_n, cp_exact, make_budget(opts));
      Json diag = {{"phi_q", r.growth.phi_q}, {"upper_base", r.growth.upper_base},
                   {"best_p_heuristic_log2_qn", r.growth.best_p_heuristic}};
      for (const auto& [p, v] : r.growth.phi_p) diag["phi_" + std::to_string(p)] = v;
      for (const auto& [p, v] : r.growth.lower_base) diag["lower_base_" + std::to_string(p)] = v;
      diag["bits_note"] = "bits are log2 of exact counts from bit length plus a 63-bit mantissa";
      emit(report::document("capacity", {{"q", cp_q}, {"t", cp_t}, {"n", cp_n}}, report::capacity(r),
                            report::census_bounds(r.tuple_census), diag),
           opts);
      return 0;
    };
  });

  // verify
  auto* vf = app.add_subcommand("verify", "Replay every acceptance criterion");
  std::string vf_scale = "small";
  std::vector<int> vf_only;
  vf->add_option("--scale", vf_scale)->check(CLI::IsMember({"small", "full"}))->capture_default_str();
  vf->add_option("--only", vf_only, "Criterion ids to run")->delimiter(',');
  vf->callback([&] {
    action = [&] {
      const VerifyReport r = verify_suite(vf_scale == "full" ? VerifyScale::full : VerifyScale::small, vf_only);
      if (opts.format == "table") {
        for (const auto& o : r.outcomes)
          std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << o.id << "] " << o.name << " (" << o.seconds << " s)  "
                    << o.detail << '\n';
      } else {
        emit(report::document("verify", {{"scale", vf_scale}}, report::verify(r)), opts);
      }
      return r.all_passed() ? 0 : kExitVerify;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n(set SUBSEQ_BUDGET, --budget or --no-budget to override)\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
