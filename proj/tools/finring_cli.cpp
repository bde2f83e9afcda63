// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "finring/analysis.hpp"
#include "finring/enumeration.hpp"
#include "finring/error.hpp"
#include "finring/report.hpp"
#include "finring/table_ring.hpp"
#include "finring/theorems.hpp"

namespace {

using namespace finring;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  bool json = false;
  int jobs = 0;
  Index eager_cap = kEagerOrder;
  Index stream_cap = Index{1} << 20;

  Budget budget() const {
    Budget b;
    b.eager_order = eager_cap;
    b.stream_order = stream_cap;
    b.threads = jobs;
    return b;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Emit JSON");
  cmd->add_option("--jobs", c.jobs, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--eager-cap", c.eager_cap, "Largest ring whose tables may be built");
  cmd->add_option("--stream-cap", c.stream_cap, "Largest ring whose elements may be scanned");
}

void emit(const Json& doc, bool json) {
  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << render_text(doc);
  }
}

int cmd_report(const std::string& ring, const Common& c) {
  emit(ring_report(ring, c.budget()), c.json);
  return kExitOk;
}

int cmd_unit_sum(const std::string& ring, const Common& c) {
  emit(unit_sum_report(ring, c.budget()), c.json);
  return kExitOk;
}

int cmd_gl_order(std::uint64_t n, std::uint64_t q, bool brute, const Common& c) {
  const auto order = gl_order(n, q);
  Json doc;
  doc["n"] = n;
  doc["q"] = q;
  doc["gl_order"] = order.str();
  if (brute) doc["brute_force"] = brute_force_gl_count(n, q);
  if (c.json) {
    std::cout << doc.dump(2) << '\n';
  } else if (brute) {
    std::cout << render_text(doc);
  } else {
    std::cout << order.str() << '\n';
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::uint64_t order = 0;
  bool up_to_iso = false;
  bool reverse = false;
  std::string out;
  std::optional<std::uint64_t> budget;
  std::string resume;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& c) {
  EnumerationOptions opts;
  opts.up_to_iso = a.up_to_iso;
  opts.search = a.reverse ? SearchOrder::kReverse : SearchOrder::kForward;
  opts.threads = c.jobs;
  opts.node_budget = a.budget;
  opts.resume_token = a.resume;
  const auto result = enumerate_unital_rings(a.order, opts);

  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw Error("cannot write " + a.out);
    for (const auto& ring : result.rings) file << serialize(ring);
  }
  const Json doc = enumeration_json(a.order, a.up_to_iso, result);
  if (c.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "order " << a.order << (a.up_to_iso ? " up to isomorphism" : " labeled") << ": "
              << result.rings.size() << " rings" << (result.complete ? "" : " (incomplete)") << '\n';
    for (const auto& r : doc["rings"]) {
      std::cout << "R" << r["index"].get<std::size_t>() << "  type " << r["additive_type"].dump()
                << "  char " << r["characteristic"] << "  units " << r["unit_count"]
                << "  commutative " << (r["commutative"].get<bool>() ? "yes" : "no")
                << "  boolean " << (r["boolean"].get<bool>() ? "yes" : "no") << '\n';
    }
  }
  if (!result.complete) {
    std::cerr << "enumeration incomplete; resume with --resume " << result.resume_token << '\n';
    return kExitResource;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  bool all = false;
  std::uint64_t max_order = 8;
  std::optional<std::uint64_t> budget;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  CheckParams params;
  params.max_order = a.max_order;
  params.node_budget = a.budget;
  params.budget = c.budget();

  std::vector<TheoremReport> reports;
  if (a.all) {
    reports = run_all(params);
  } else {
    const auto id = parse_check_id(a.theorem);
    if (!id) throw ParseError(1, {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "main"}, a.theorem);
    reports.push_back(run_check(*id, params));
  }

  bool failed = false, incomplete = false;
  Json docs = Json::array();
  for (const auto& r : reports) {
    failed |= !r.passed;
    incomplete |= !r.complete;
    docs.push_back(theorem_report_json(r));
  }
  if (c.json) {
    std::cout << Json{{"max_order", a.max_order}, {"reports", docs}}.dump(2) << '\n';
  } else {
    for (const auto& d : docs) {
      std::cout << d["id"].get<std::string>() << "  " << d["status"].get<std::string>() << "  "
                << d["claim"].get<std::string>() << '\n'
                << "    population: " << d["population"].get<std::string>() << " (premise holds for "
                << d["premise_count"] << " of " << d["population_count"] << ")\n";
      if (!d["counterexample"].is_null()) {
        const auto& cx = d["counterexample"];
        std::cout << "    counterexample: " << cx["ring"].get<std::string>() << ": "
                  << cx["detail"].get<std::string>() << '\n';
        if (cx.contains("table")) std::cout << cx["table"].get<std::string>();
      }
      for (const auto& n : d["notes"]) std::cout << "    " << n.get<std::string>() << '\n';
    }
  }
  if (failed) return kExitFailed;
  return incomplete ? kExitResource : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  CLI::App app{"Finite unital rings: invariants, unit sums, enumeration, and checks", "finring"};
  app.require_subcommand(1);

  Common common;
  std::string ring;

  auto* report = app.add_subcommand("report", "Structural report for one ring");
  report->add_option("--ring", ring, "Ring expression, e.g. \"M(2, GF(4))\"")->required();
  add_common(report, common);

  auto* unit_sum = app.add_subcommand("unit-sum", "Unit count and unit sum");
  unit_sum->add_option("--ring", ring, "Ring expression")->required();
  add_common(unit_sum, common);

  std::uint64_t gl_n = 0, gl_q = 0;
  bool gl_brute = false;
  auto* gl = app.add_subcommand("gl-order", "|GL_n(F_q)|");
  gl->add_option("n", gl_n)->required()->check(CLI::PositiveNumber);
  gl->add_option("q", gl_q)->required();
  gl->add_flag("--brute-force", gl_brute, "Also count invertible matrices one by one");
  add_common(gl, common);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "All unital rings of a given order");
  enumerate->add_option("order", enum_args.order)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", enum_args.up_to_iso, "One ring per isomorphism class");
  enumerate->add_flag("--reverse", enum_args.reverse, "Reverse value order in the search");
  enumerate->add_option("--out", enum_args.out, "Write the table rings to FILE");
  enumerate->add_option("--budget", enum_args.budget, "Search-node budget");
  enumerate->add_option("--resume", enum_args.resume, "Resume token from an incomplete run");
  add_common(enumerate, common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  auto* theorem_opt = verify->add_option("--theorem", verify_args.theorem, "T1..T9 or main");
  auto* all_opt = verify->add_flag("--all", verify_args.all, "Run every check");
  theorem_opt->excludes(all_opt);
  verify->add_option("--max-order", verify_args.max_order, "Largest enumerated order");
  verify->add_option("--budget", verify_args.budget, "Search-node budget per enumeration");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (verify->parsed() && verify_args.theorem.empty() && !verify_args.all) {
    std::cerr << "verify: one of --theorem or --all is required\n";
    return kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(ring, common);
    if (unit_sum->parsed()) return cmd_unit_sum(ring, common);
    if (gl->parsed()) return cmd_gl_order(gl_n, gl_q, gl_brute, common);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, common);
    if (verify->parsed()) return cmd_verify(verify_args, common);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
