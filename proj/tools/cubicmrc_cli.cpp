/*
   Copyright 2026 The cubicmrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// cubicmrc: predict, verify and link resolutions of points on a cubic surface.
//
//   cubicmrc predict --z 22
//   cubicmrc verify --family m --a 4 --trials 5 --out report.json
//   cubicmrc link --a 3 --seed 7
//   cubicmrc chain --from 3 --to 6
//
// Exit codes: 0 pass, 1 fail, 2 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cubicmrc/json_io.hpp"

namespace {

using namespace cubicmrc;

struct Options {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  std::string family;
  int a = 0;
  std::optional<std::int64_t> z;
  int trials = 1;
  std::string surface = "fermat";
  std::string out;
  std::string points_file;
  int chain_from = 3;
  int chain_to = 3;
};

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open output file " + out);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("failed writing " + out);
}

SurfaceKind surface_kind(const std::string& s) {
  if (s == "fermat") return SurfaceKind::fermat;
  if (s == "random") return SurfaceKind::random;
  throw std::invalid_argument("unknown surface '" + s + "'");
}

int cmd_predict(const Options& o) {
  Prediction p;
  if (!o.family.empty()) {
    if (o.z) throw std::invalid_argument("predict: give either --family/--a or --z");
    p = family_prediction(parse_family(o.family), o.a);
  } else if (o.z) {
    p = predicted_diagram(*o.z);
    p.source = {};
  } else {
    throw std::invalid_argument("predict: --z or --family with --a is required");
  }
  std::cerr << "z=" << p.z << " r=" << p.r << '\n' << p.diagram.to_string();
  emit(to_json(p), o.out);
  return 0;
}

int cmd_verify(const Options& o) {
  ExperimentConfig cfg;
  cfg.prime = o.prime;
  cfg.seed = o.seed;
  if (!o.family.empty()) cfg.family = parse_family(o.family);
  cfg.a = o.a;
  cfg.z = o.z;
  cfg.trials = o.trials;
  cfg.surface = surface_kind(o.surface);
  if (!o.points_file.empty()) {
    std::ifstream in(o.points_file);
    if (!in) throw std::runtime_error("cannot open point file " + o.points_file);
    cfg.points = read_points(in, PrimeField{o.prime});
  }
  const RunReport rep = run_experiment(cfg);
  for (const auto& t : rep.trials) {
    std::cerr << "trial " << t.index << ": " << (t.pass ? "PASS" : "FAIL") << " (" << t.seconds << " s"
              << (t.resampled ? ", resampled" : "") << ")\n";
  }
  std::cerr << "summary: " << (rep.pass ? "PASS" : "FAIL") << '\n';
  emit(to_json(rep), o.out);
  return rep.pass ? 0 : 1;
}

int cmd_link(const Options& o) {
  const FirstLinkReport rep = run_first_link_experiment(o.a, o.seed, o.prime, surface_kind(o.surface));
  std::cerr << "first link a=" << rep.a << ": " << rep.n << " + " << rep.deg_residual << " = " << rep.deg_ci << ", "
            << (rep.pass ? "PASS" : "FAIL") << '\n';
  emit(to_json(rep), o.out);
  return rep.pass ? 0 : 1;
}

int cmd_chain(const Options& o) {
  const auto steps = link_chain(o.chain_from, o.chain_to);
  bool pass = true;
  for (const auto& s : steps) {
    std::cerr << "link " << s.spec.index << " a=" << s.spec.a << ": " << s.output.to_string() << "  "
              << (s.matches ? "PASS" : "FAIL") << '\n';
    pass = pass && s.matches;
  }
  emit(chain_to_json(o.chain_from, o.chain_to, steps), o.out);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal free resolutions of points on a smooth cubic surface"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", o.prime, "prime field characteristic")->capture_default_str();
    sub->add_option("--seed", o.seed, "master seed")->capture_default_str();
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "point family")->check(CLI::IsMember({"m", "n", "o", "p"}));
    sub->add_option("--a", o.a, "family parameter a");
    sub->add_option("--z", o.z, "explicit number of points");
  };

  auto* predict = app.add_subcommand("predict", "predicted Betti diagram (JSON)");
  common(predict);
  family_opts(predict);

  auto* verify = app.add_subcommand("verify", "sample points, resolve, compare with the prediction");
  common(verify);
  family_opts(verify);
  verify->add_option("--trials", o.trials, "number of trials")->capture_default_str();
  verify->add_option("--surface", o.surface, "cubic surface")->check(CLI::IsMember({"fermat", "random"}))->capture_default_str();
  verify->add_option("--points-file", o.points_file, "fixed point set (one 'x0,x1,x2,x3' per line)");

  auto* link = app.add_subcommand("link", "first-link experiment: CI(3,a,a) residual of m(a) points");
  common(link);
  link->add_option("--a", o.a, "family parameter a")->required();
  link->add_option("--surface", o.surface, "cubic surface")->check(CLI::IsMember({"fermat", "random"}))->capture_default_str();

  auto* chain = app.add_subcommand("chain", "symbolic four-link chain report");
  chain->add_option("--from", o.chain_from, "starting a")->capture_default_str();
  chain->add_option("--to", o.chain_to, "final a")->capture_default_str();
  chain->add_option("--out", o.out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*predict) return cmd_predict(o);
    if (*verify) return cmd_verify(o);
    if (*link) return cmd_link(o);
    if (*chain) return cmd_chain(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
