// Command-line front end: decide, construct, count and verify Skolem-type
// sequences. JSON on stdout for machine consumption; sequence witnesses and
// tables as plain text.
//
// Exit codes: 0 answered (including "none"), 1 usage error, 2 resource
// ceiling exceeded, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "skolem/conditions.hpp"
#include "skolem/constructions.hpp"
#include "skolem/displacement.hpp"
#include "skolem/enumeration.hpp"
#include "skolem/jsonio.hpp"
#include "skolem/model.hpp"
#include "skolem/solver.hpp"

namespace {

using nlohmann::json;

void print_witness(const std::optional<skolem::Pairing>& witness, const std::string& format) {
  if (!witness) {
    std::cout << (format == "json" ? R"({"result":"none"})" : "none") << "\n";
    return;
  }
  if (format == "json") {
    json out = skolem::to_json(*witness);
    out["sequence"] = skolem::render(*witness).str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << skolem::render(*witness).str() << "\n";
  }
}

json witness_json(const skolem::SetWithWitness& out) {
  json j;
  j["set"] = out.set.values();
  j["pairs"] = skolem::to_json(out.pairing)["pairs"];
  j["sequence"] = skolem::render(out.pairing).str();
  return j;
}

json mismatches_json(const std::vector<skolem::ConjectureMismatch>& mismatches) {
  json arr = json::array();
  for (const auto& m : mismatches)
    arr.push_back({{"set", m.set}, {"predicted", m.predicted}, {"solvable", m.solvable}});
  return arr;
}

int run_check(const std::vector<int>& diff_values, const std::vector<int>& position_values) {
  const skolem::DiffMultiset diffs{std::vector<int>(diff_values)};
  json out;
  if (!position_values.empty()) {
    const skolem::PositionSet positions{std::vector<int>(position_values)};
    out = skolem::to_json(skolem::general_conditions(positions, diffs));
  } else {
    out = skolem::to_json(skolem::necessary_conditions_perfect(diffs));
    if (const auto verdict = skolem::classify_classical(diffs)) {
      out["classical"] = {{"family", skolem::classical_family_name(verdict->family)},
                         {"solvable", verdict->solvable}};
    }
    if (diffs.is_set()) out["conjectured_solvable"] = skolem::conjecture2_predicate(diffs);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_count(const std::string& family_name, int order, int jobs) {
  const auto family = skolem::family_from_name(family_name);
  if (!family) throw std::invalid_argument("unknown family: " + family_name);
  std::cout << skolem::to_json(skolem::count_family(*family, order, jobs)).dump() << "\n";
  return 0;
}

int run_tables(const std::string& family_name, int max_order, int jobs) {
  const auto family = skolem::family_from_name(family_name);
  if (!family) throw std::invalid_argument("unknown family: " + family_name);
  std::vector<std::string> orders, counts;
  for (int n = 1; n <= max_order; ++n) {
    orders.push_back(std::to_string(n));
    counts.push_back(skolem::count_family(*family, n, jobs).count.to_decimal());
  }
  std::cout << "family: " << family_name << "\n";
  std::string order_row = "order ", count_row = "count ";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const std::size_t width = std::max(orders[i].size(), counts[i].size());
    order_row += "  " + std::string(width - orders[i].size(), ' ') + orders[i];
    count_row += "  " + std::string(width - counts[i].size(), ' ') + counts[i];
  }
  std::cout << order_row << "\n" << count_row << "\n";
  return 0;
}

int run_verify(const std::string& conjecture, int max, int jobs) {
  json out;
  if (conjecture == "2") {
    const auto report = skolem::verify_conjecture2(max);
    out["mismatches"] = mismatches_json(report.mismatches);
    out["accepting_per_order"] = json::array();
    for (std::uint64_t c : report.accepting_per_order)
      out["accepting_per_order"].push_back(std::to_string(c));
  } else if (conjecture == "two-missing") {
    const auto report = skolem::two_missing_sweep(max);
    out["mismatches"] = mismatches_json(report.mismatches);
    out["density_exceptions"] = report.density_exceptions;
  } else if (conjecture == "extremal") {
    out["mismatches"] = mismatches_json(skolem::verify_extremal_conjecture(max));
  } else {  // mod4
    std::vector<int> orders;
    for (int n = 1; n <= max; ++n) orders.push_back(n);
    out = json::array();
    for (const auto& entry : skolem::mod4_check(orders, jobs))
      out.push_back({{"order", entry.order},
                     {"count", entry.count.to_decimal()},
                     {"residue", entry.residue}});
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_construct(const std::string& method, const std::vector<int>& diff_values, int hook,
                  const std::vector<int>& a_values, const std::vector<int>& b_values, int defect) {
  auto extremal_ingredient = [](const std::vector<int>& values) {
    const skolem::DiffMultiset set{std::vector<int>(values)};
    auto witness = skolem::is_perfect_extremal(set);
    if (!witness) return std::optional<skolem::SetWithWitness>{};
    return std::optional<skolem::SetWithWitness>{{set, *witness}};
  };

  std::optional<skolem::SetWithWitness> result;
  if (method == "from-skolem") {
    const skolem::DiffMultiset diffs{std::vector<int>(diff_values)};
    const auto witness = skolem::is_perfect_multi_skolem_set(diffs);
    if (witness) result = skolem::extremal_from_skolem(diffs, *witness);
  } else if (method == "from-k-extended") {
    const skolem::DiffMultiset diffs{std::vector<int>(diff_values)};
    const int len = 2 * diffs.order() + 1;
    if (hook < 1 || hook > len) throw std::invalid_argument("--k out of range");
    const auto witness =
        skolem::decide(skolem::PositionSet::contiguous_without(len, hook), diffs);
    if (witness) result = skolem::extremal_from_k_extended(diffs, hook, *witness);
  } else if (method == "near-langford") {
    if (defect < 1) throw std::invalid_argument("--defect must be positive");
    result = skolem::near_langford_extremal(defect);
  } else {  // compose-c / compose-d / compose-e
    const auto a = extremal_ingredient(a_values);
    const auto b = extremal_ingredient(b_values);
    if (a && b) {
      const skolem::ComposeVariant variant = method == "compose-c" ? skolem::ComposeVariant::C
                                             : method == "compose-d" ? skolem::ComposeVariant::D
                                                                     : skolem::ComposeVariant::E;
      result = skolem::compose(*a, *b, variant);
    }
  }

  if (!result) {
    std::cout << R"({"result":"none"})" << "\n";
    return 0;
  }
  std::cout << witness_json(*result).dump() << "\n";
  return 0;
}

int run_displacement(const std::string& pattern_text, bool count) {
  const skolem::DisplacementPattern pattern = skolem::pattern_from_string(pattern_text);
  json out;
  out["pattern"] = skolem::pattern_to_string(pattern);
  if (count) {
    out["count"] = skolem::count_realizations(pattern).to_decimal();
  } else {
    const auto realized = skolem::realize_pattern(pattern);
    out["realizable"] = realized.has_value();
    out["permutation"] = realized ? json(realized->images()) : json(nullptr);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skolem-type sequences: decide, construct, enumerate, verify"};
  app.require_subcommand(1);

  std::vector<int> diff_args, position_args, a_args, b_args;
  std::string family = "skolem", format = "text", conjecture, method, pattern_text;
  int order = 1, max = 1, jobs = 1, hook = 1, defect = 1;
  bool count_flag = false;

  auto* check = app.add_subcommand("check", "conditions report for a difference multiset");
  check->add_option("diffs", diff_args, "difference values")->required();
  check->add_option("--positions", position_args, "explicit position set (default {1..2n})")
      ->delimiter(',');

  auto* decide_cmd = app.add_subcommand("decide", "find a pairing of P into A, or report none");
  decide_cmd->add_option("--positions", position_args, "position set")->delimiter(',')->required();
  decide_cmd->add_option("--diffs", diff_args, "difference multiset")->delimiter(',')->required();
  decide_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* perfect = app.add_subcommand("perfect", "decide over positions {1..2n}");
  perfect->add_option("diffs", diff_args, "difference values")->required();
  perfect->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* extremal = app.add_subcommand("extremal", "decide with the straddling restriction");
  extremal->add_option("diffs", diff_args, "difference values (sum must be n^2)")->required();
  extremal->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* count = app.add_subcommand("count", "exact count of one family at one order");
  count->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"skolem", "perfect", "perfect-extremal", "perfect-sets", "multi",
                             "extremal-multi"}));
  count->add_option("--order", order)->required();
  count->add_option("--jobs", jobs, "worker pool size (never changes the count)");

  auto* tables = app.add_subcommand("tables", "family counts for orders 1..N as an aligned table");
  tables->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"skolem", "perfect", "perfect-extremal", "perfect-sets", "multi",
                             "extremal-multi"}));
  tables->add_option("--max", max)->required();
  tables->add_option("--jobs", jobs);

  auto* verify = app.add_subcommand("verify", "conjecture verification sweeps");
  verify->add_option("--conjecture", conjecture)
      ->required()
      ->check(CLI::IsMember({"2", "two-missing", "extremal", "mod4"}));
  verify->add_option("--max", max)->required();
  verify->add_option("--jobs", jobs);

  auto* construct = app.add_subcommand("construct", "build extremal sets with explicit witnesses");
  construct->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"from-skolem", "from-k-extended", "compose-c", "compose-d",
                             "compose-e", "near-langford"}));
  construct->add_option("--diffs", diff_args, "ingredient set for from-skolem/from-k-extended")
      ->delimiter(',');
  construct->add_option("--k", hook, "hook position for from-k-extended");
  construct->add_option("--a-diffs", a_args, "first extremal ingredient for compose-*")
      ->delimiter(',');
  construct->add_option("--b-diffs", b_args, "second extremal ingredient for compose-*")
      ->delimiter(',');
  construct->add_option("--defect", defect, "defect for near-langford");

  auto* displacement = app.add_subcommand("displacement", "realize or count a displacement pattern");
  displacement->add_option("--pattern", pattern_text, "e.g. \"(4,1,0,-2,-3)\"")->required();
  displacement->add_flag("--count", count_flag, "count realizations instead of finding one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(check)) return run_check(diff_args, position_args);
    if (app.got_subcommand(decide_cmd)) {
      print_witness(skolem::decide(skolem::PositionSet{std::vector<int>(position_args)},
                                   skolem::DiffMultiset{std::vector<int>(diff_args)}),
                    format);
      return 0;
    }
    if (app.got_subcommand(perfect)) {
      print_witness(
          skolem::is_perfect_multi_skolem_set(skolem::DiffMultiset{std::vector<int>(diff_args)}),
          format);
      return 0;
    }
    if (app.got_subcommand(extremal)) {
      print_witness(skolem::is_perfect_extremal(skolem::DiffMultiset{std::vector<int>(diff_args)}),
                    format);
      return 0;
    }
    if (app.got_subcommand(count)) return run_count(family, order, jobs);
    if (app.got_subcommand(tables)) return run_tables(family, max, jobs);
    if (app.got_subcommand(verify)) return run_verify(conjecture, max, jobs);
    if (app.got_subcommand(construct))
      return run_construct(method, diff_args, hook, a_args, b_args, defect);
    if (app.got_subcommand(displacement)) return run_displacement(pattern_text, count_flag);
  } catch (const skolem::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const skolem::ValidationError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
