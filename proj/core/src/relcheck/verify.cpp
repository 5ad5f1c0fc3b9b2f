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

#include "iqpoly/relcheck/verify.hpp"

#include <chrono>

#include "iqpoly/exactring/serialize.hpp"
#include "iqpoly/kconv/kconv.hpp"

namespace iqpoly::relcheck {

VerifyOutcome run_verify(const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Representation rep(cfg.var);
  const auto specs = catalogue(cfg.var, cfg.relations);

  nlohmann::json relation_names = nlohmann::json::array();
  for (auto id : cfg.relations) relation_names.push_back(relation_name(id));
  if (cfg.relations.empty()) relation_names = "all";

  nlohmann::json out;
  out["schema_version"] = serial::kSchemaVersion;
  out["config"] = {
      {"variant", cfg.var.kind_name()},
      {"n", cfg.var.n},
      {"d", cfg.var.d},
      {"relations", relation_names},
      {"mode_window", cfg.check.mode_window},
      {"three_var_window", cfg.check.three_var_window},
      {"degree_bound", cfg.check.degree_bound},
      {"max_vectors_per_component", cfg.check.max_vectors_per_component},
      {"seed", cfg.check.seed},
      {"crosscheck", cfg.crosscheck},
  };

  int checks = 0, passed = 0;
  auto tally = [&](const std::vector<CheckReport>& rs, nlohmann::json& dst) {
    dst = nlohmann::json::array();
    for (const auto& r : rs) {
      ++checks;
      passed += r.pass();
      dst.push_back(to_json(r));
    }
  };

  tally(check_relations(rep, specs, cfg.check), out["results"]);

  const bool extras = cfg.extras && cfg.relations.empty() && cfg.var.kind == VariantKind::kCOdd;
  if (extras) {
    tally(check_theta_lemma(rep, cfg.check), out["theta_lemma"]);
    tally(check_theta1_identities(3), out["theta1_identities"]);
  }

  int instances = 0, agreeing = 0;
  if (cfg.crosscheck) {
    nlohmann::json cc = nlohmann::json::array();
    for (const auto& e : crosscheck(rep, cfg.check.degree_bound, cfg.crosscheck_r_lo, cfg.crosscheck_r_hi)) {
      ++checks;
      passed += e.pass();
      instances += e.vectors;
      if (e.pass()) agreeing += e.vectors;
      cc.push_back(to_json(e));
    }
    out["crosscheck"] = std::move(cc);
  }

  const auto& st = rep.stats();
  const bool well_defined = st.denominator_failures == 0 && st.invariance_failures == 0;
  out["well_definedness"] = {
      {"b_evaluations", st.evaluations.load()},
      {"denominator_failures", st.denominator_failures.load()},
      {"invariance_failures", st.invariance_failures.load()},
  };

  VerifyOutcome res;
  res.all_pass = passed == checks && well_defined;
  out["summary"] = {
      {"checks", checks},
      {"passed", passed},
      {"failed", checks - passed},
      {"crosscheck_instances", instances},
      {"crosscheck_agreeing", agreeing},
      {"all_pass", res.all_pass},
  };
  if (cfg.include_timing)
    out["summary"]["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.report = std::move(out);
  return res;
}

}  // namespace iqpoly::relcheck
