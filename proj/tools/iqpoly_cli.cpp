// Copyright 2026 The iqpoly Authors.
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

// iqpoly: command-line front end for enumeration, operator application,
// relation verification and the closed-orbit cross-check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iqpoly/combinat/combinat.hpp"
#include "iqpoly/errors.hpp"
#include "iqpoly/exactring/serialize.hpp"
#include "iqpoly/kconv/kconv.hpp"
#include "iqpoly/polyrep/polyrep.hpp"
#include "iqpoly/relcheck/verify.hpp"

namespace {

using iqpoly::Variant;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string variant = "c-odd";
  int n = 1;
  int d = 1;
  std::string format = "text";
  std::string out;
  bool force = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--variant", c.variant, "c-odd or d-even")->check(CLI::IsMember({"c-odd", "d-even"}));
  sub->add_option("--n", c.n, "rank parameter n");
  sub->add_option("--d", c.d, "number of torus variables");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", c.out, "write the report here instead of stdout");
  sub->add_flag("--force", c.force, "lift the n <= 3, d <= 4 guardrail");
}

Variant make_variant(const Common& c) {
  if (c.n > 3 || c.d > 4) {
    if (!c.force)
      throw iqpoly::InvalidArgument("n <= 3 and d <= 4 keep exact arithmetic at desk scale; pass --force to go beyond");
    std::cerr << "warning: running beyond the n <= 3, d <= 4 guardrail\n";
  }
  return Variant::make(Variant::parse_kind(c.variant), c.n, c.d);
}

void emit(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw iqpoly::InvalidArgument("cannot open " + c.out + " for writing");
  f << body;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int worker_count() {
  if (const char* env = std::getenv("IQPOLY_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw iqpoly::InvalidArgument(std::string("IQPOLY_WORKERS must be an integer, got '") + env + "'");
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// ---------------------------------------------------------------- enum

struct EnumOpts {
  std::string row, col;
};

int cmd_enum(const Common& c, const EnumOpts& o) {
  const Variant var = make_variant(c);
  const auto comps = iqpoly::enum_compositions(var);
  std::vector<std::pair<iqpoly::Composition, iqpoly::Composition>> classes;
  if (!o.row.empty() || !o.col.empty()) {
    const auto ro = iqpoly::parse_composition(o.row.empty() ? o.col : o.row);
    const auto co = iqpoly::parse_composition(o.col.empty() ? o.row : o.col);
    classes.emplace_back(ro, co);
  } else {
    for (const auto& v : comps) classes.emplace_back(v, v);
  }

  json j;
  j["schema_version"] = iqpoly::serial::kSchemaVersion;
  j["variant"] = var.kind_name();
  j["n"] = var.n;
  j["d"] = var.d;
  j["compositions"] = json::array();
  for (const auto& v : comps) j["compositions"].push_back(v);
  j["margin_classes"] = json::array();
  std::ostringstream text;
  text << var.to_string() << ": " << comps.size() << " compositions\n";
  for (const auto& v : comps) text << "  (" << iqpoly::to_string(v) << ")\n";
  for (const auto& [ro, co] : classes) {
    const auto cls = iqpoly::enum_margin_class(var, ro, co);
    const auto edges = iqpoly::hasse(var, cls);
    json entry = {{"row", ro}, {"col", co}, {"matrices", json::array()}, {"hasse", json::array()}};
    text << "margin class row=(" << iqpoly::to_string(ro) << ") col=(" << iqpoly::to_string(co) << "): " << cls.size()
         << " matrices\n";
    for (std::size_t k = 0; k < cls.size(); ++k) {
      entry["matrices"].push_back(cls[k].to_string());
      text << "  [" << k << "] " << cls[k].to_string() << "\n";
    }
    for (const auto& [a, b] : edges) {
      entry["hasse"].push_back({a, b});
      text << "  " << a << " < " << b << "\n";
    }
    j["margin_classes"].push_back(std::move(entry));
  }
  emit(c, c.format == "json" ? dump(j) : text.str());
  return 0;
}

// ---------------------------------------------------------------- apply

struct ApplyOpts {
  std::vector<std::string> word;
  std::string vector_id;
  int degree_bound = 3;
  bool list = false;
};

int cmd_apply(const Common& c, const ApplyOpts& o) {
  const Variant var = make_variant(c);
  iqpoly::Representation rep(var);
  iqpoly::relcheck::CheckConfig cfg;
  cfg.degree_bound = o.degree_bound;

  if (o.list) {
    json j = {{"schema_version", iqpoly::serial::kSchemaVersion}, {"vectors", json::array()}};
    std::ostringstream text;
    for (const auto& tv : iqpoly::relcheck::test_vectors(rep, cfg)) {
      j["vectors"].push_back({{"id", tv.id}, {"f", tv.f.to_string()}});
      text << tv.id << "  " << tv.f.to_string() << "\n";
    }
    emit(c, c.format == "json" ? dump(j) : text.str());
    return 0;
  }
  if (o.vector_id.empty()) throw iqpoly::InvalidArgument("apply needs --vector (see --list)");
  if (o.word.empty()) throw iqpoly::InvalidArgument("apply needs at least one generator mode");

  iqpoly::Word w;
  for (const auto& s : o.word) {
    w.push_back(iqpoly::GeneratorMode::parse(s));
    w.back().validate(var);
  }
  const auto tv = iqpoly::relcheck::find_vector(rep, o.vector_id, o.degree_bound);
  const auto input = iqpoly::ModuleElement::single(var, tv.v, tv.f);
  const auto result = rep.apply_word(w, input);

  json j = {{"schema_version", iqpoly::serial::kSchemaVersion},
            {"variant", var.kind_name()},
            {"n", var.n},
            {"d", var.d},
            {"word", iqpoly::to_string(w)},
            {"vector", tv.id},
            {"input", input.to_json()},
            {"result", result.to_json()},
            {"zero", result.is_zero()}};
  std::ostringstream text;
  text << "input  " << input.to_string() << "\n";
  text << "word   " << iqpoly::to_string(w) << "  (rightmost acts first)\n";
  text << "result " << result.to_string();
  if (result.is_zero()) text << "  (no target component)";
  text << "\n";
  emit(c, c.format == "json" ? dump(j) : text.str());
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  std::string relations = "all";
  int mode_window = -1;
  int degree_bound = 3;
  std::uint64_t seed = 0;
  int max_vectors = 0;
  bool no_crosscheck = false;
  bool include_timing = false;
};

std::string verify_text(const json& r) {
  std::ostringstream os;
  const auto& cfg = r["config"];
  os << "verify " << cfg["variant"].get<std::string>() << " n=" << cfg["n"] << " d=" << cfg["d"] << "\n";
  std::map<std::string, std::pair<int, int>> per;  // name -> (checks, failures)
  std::vector<std::string> order;
  auto scan = [&](const char* key) {
    if (!r.contains(key)) return;
    for (const auto& x : r[key]) {
      const std::string name = x.contains("relation") ? x["relation"].get<std::string>() : std::string(key);
      if (!per.count(name)) order.push_back(name);
      auto& [n, f] = per[name];
      ++n;
      f += x["status"] != "pass";
    }
  };
  scan("results");
  scan("theta_lemma");
  scan("theta1_identities");
  for (const auto& name : order) {
    const auto [n, f] = per[name];
    os << "  " << name << std::string(name.size() < 22 ? 22 - name.size() : 1, ' ') << n << " checks  "
       << (f ? std::to_string(f) + " FAILED" : "pass") << "\n";
  }
  if (r.contains("crosscheck")) {
    int fails = 0;
    for (const auto& x : r["crosscheck"]) fails += x["status"] != "pass";
    os << "  crosscheck            " << r["crosscheck"].size() << " entries, "
       << r["summary"]["crosscheck_instances"] << " instances  " << (fails ? std::to_string(fails) + " FAILED" : "pass")
       << "\n";
  }
  const auto& wd = r["well_definedness"];
  os << "  well-definedness      " << wd["b_evaluations"] << " B evaluations, " << wd["denominator_failures"]
     << " denominator failures, " << wd["invariance_failures"] << " invariance failures\n";
  for (const char* key : {"results", "theta_lemma", "theta1_identities"}) {
    if (!r.contains(key)) continue;
    for (const auto& x : r[key]) {
      if (x["status"] == "pass") continue;
      os << "FAIL " << x.dump() << "\n";
    }
  }
  const auto& s = r["summary"];
  os << (s["all_pass"].get<bool>() ? "ALL PASS" : "FAILURES") << ": " << s["passed"] << "/" << s["checks"]
     << " checks passed";
  if (s.contains("wall_time_s")) os << " in " << s["wall_time_s"].get<double>() << " s";
  os << "\n";
  return os.str();
}

int cmd_verify(const Common& c, const VerifyOpts& o) {
  iqpoly::relcheck::VerifyConfig cfg;
  cfg.var = make_variant(c);
  if (o.relations != "all") {
    std::stringstream ss(o.relations);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.relations.push_back(iqpoly::relcheck::parse_relation(item));
  }
  if (o.mode_window >= 0) {
    cfg.check.mode_window = o.mode_window;
    cfg.check.three_var_window = o.mode_window;
  }
  cfg.check.degree_bound = o.degree_bound;
  cfg.check.seed = o.seed;
  cfg.check.max_vectors_per_component = o.max_vectors;
  cfg.check.workers = worker_count();
  cfg.crosscheck = !o.no_crosscheck;
  cfg.include_timing = o.include_timing;
  const auto res = iqpoly::relcheck::run_verify(cfg);
  emit(c, c.format == "json" ? dump(res.report) : verify_text(res.report));
  return res.all_pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------- crosscheck

struct CrossOpts {
  int degree_bound = 3;
  int r_lo = -2;
  int r_hi = 2;
};

int cmd_crosscheck(const Common& c, const CrossOpts& o) {
  const Variant var = make_variant(c);
  iqpoly::Representation rep(var);
  const auto entries = iqpoly::crosscheck(rep, o.degree_bound, o.r_lo, o.r_hi);
  json j = {{"schema_version", iqpoly::serial::kSchemaVersion},
            {"variant", var.kind_name()},
            {"n", var.n},
            {"d", var.d},
            {"entries", json::array()}};
  int instances = 0, fails = 0;
  std::ostringstream text;
  for (const auto& e : entries) {
    j["entries"].push_back(iqpoly::to_json(e));
    instances += e.vectors;
    fails += !e.pass();
    text << (e.pass() ? "pass " : "FAIL ") << "i=" << e.i << " r=" << e.r << " v=(" << iqpoly::to_string(e.v)
         << ") vectors=" << e.vectors;
    if (!e.pass()) text << " " << e.first_mismatch;
    text << "\n";
  }
  j["summary"] = {{"entries", entries.size()}, {"instances", instances}, {"failed", fails}};
  text << instances << " instances, " << fails << " failing entries\n";
  emit(c, c.format == "json" ? dump(j) : text.str());
  return fails ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iqpoly: exact checks of the polynomial representation of affine iquantum groups"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with one section per subcommand");

  Common ec, ac, vc, cc;
  EnumOpts eo;
  ApplyOpts ao;
  VerifyOpts vo;
  CrossOpts co;

  auto* e = app.add_subcommand("enum", "list compositions, margin classes and their Hasse diagrams");
  add_common(e, ec);
  e->add_option("--row", eo.row, "row margin of the class to list, e.g. 0,2,0");
  e->add_option("--col", eo.col, "column margin (defaults to the row margin)");

  auto* a = app.add_subcommand("apply", "apply a word of generator modes to a spanning vector");
  add_common(a, ac);
  a->add_option("word", ao.word, "modes such as B:1:0 Theta:1:2 K:2; the last one acts first");
  a->add_option("--vector", ao.vector_id, "spanning vector id such as 0,2,0:1");
  a->add_option("--degree-bound", ao.degree_bound, "exponent bound of the spanning set");
  a->add_flag("--list", ao.list, "print the spanning vector ids and exit");

  auto* v = app.add_subcommand("verify", "check the relation catalogue and the closed-orbit cross-check");
  add_common(v, vc);
  v->add_option("--relations", vo.relations, "comma-separated relation ids, or all");
  v->add_option("--mode-window", vo.mode_window, "per-variable degree window for every relation");
  v->add_option("--degree-bound", vo.degree_bound, "exponent bound of the spanning vectors");
  v->add_option("--seed", vo.seed, "seed for vector sampling");
  v->add_option("--max-vectors", vo.max_vectors, "sample at most this many vectors per component (0 = all)");
  v->add_flag("--no-crosscheck", vo.no_crosscheck, "skip the closed-orbit cross-check");
  v->add_flag("--include-timing", vo.include_timing, "add wall time to the summary (breaks byte-identity)");

  auto* x = app.add_subcommand("crosscheck", "compare closed-orbit convolution with the B operators");
  add_common(x, cc);
  x->add_option("--degree-bound", co.degree_bound, "exponent bound of the spanning sets");
  x->add_option("--r-lo", co.r_lo, "lowest mode r");
  x->add_option("--r-hi", co.r_hi, "highest mode r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*e) return cmd_enum(ec, eo);
    if (*a) return cmd_apply(ac, ao);
    if (*v) return cmd_verify(vc, vo);
    if (*x) return cmd_crosscheck(cc, co);
  } catch (const iqpoly::InvalidArgument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
