// Copyright 2026 The QET Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: catalog, verification, distances, constructions,
// search and simulation.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qet/qet.hpp"

namespace {

using namespace qet;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCapLimited = 3 };

struct Globals {
  std::size_t threads = 0;
  bool json = false;
};

/// A parse error already annotated with its position and file name.
struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

/// A code file path, or a catalog name such as "7q" or "toric:3".
CatalogCode load_code(const std::string& spec) {
  if (is_file(spec)) {
    try {
      return {spec, parse_code(read_file(spec)), std::nullopt};
    } catch (const ParseError& e) {
      throw FileParseError(spec + ": " + e.what());
    }
  }
  return load_catalog(spec);
}

/// A file of classes, an inline comma list, or the catalog default.
AdmissibleSet load_admissible(const std::string& spec, const CatalogCode& code) {
  if (spec.empty()) {
    if (code.admissible) return *code.admissible;
    throw std::invalid_argument("--admissible is required for " + code.name);
  }
  if (is_file(spec)) return parse_admissible(read_file(spec), code.code.k);
  return parse_admissible_list(spec, code.code.k);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void emit(const Globals& g, const Report& r, const std::string& headline = "") {
  if (g.json) {
    std::cout << r.to_json() << "\n";
    return;
  }
  if (!headline.empty()) std::cout << headline << "\n";
  std::cout << r.to_text();
}

std::uint64_t seed_or_random(std::optional<std::uint64_t> seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

Purity parse_purity(const std::string& s) {
  if (s.empty() || s == "any") return Purity::kAny;
  if (s == "x" || s == "X") return Purity::kPureX;
  if (s == "z" || s == "Z") return Purity::kPureZ;
  throw std::invalid_argument("--pure must be x or z");
}

ChannelModel parse_model(const std::string& s, std::size_t n) {
  if (s == "uniform1") return ChannelModel::uniform_single(n);
  if (s == "identity") return ChannelModel::identity();
  if (s.rfind("depolarizing:", 0) == 0) return ChannelModel::depolarizing(std::stod(s.substr(13)));
  if (s.rfind("file:", 0) == 0) {
    // One "<pauli> <probability>" pair per line.
    std::vector<std::pair<PauliOp, double>> terms;
    std::istringstream in(read_file(s.substr(5)));
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string op;
      double p;
      if (!(ls >> op >> p)) throw ParseError("channel line must be \"<pauli> <probability>\"", no);
      terms.emplace_back(parse_pauli(op), p);
    }
    return ChannelModel::explicit_list(std::move(terms));
  }
  throw std::invalid_argument("unknown model \"" + s + "\" (uniform1, identity, depolarizing:<p>, file:<path>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-transmutation analysis for stabilizer codes"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_flag("--json", g.json, "Emit reports as JSON");

  int exit_code = kPass;

  // catalog ---------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "Built-in codes");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries")->callback([&] {
    for (const auto& e : catalog()) {
      std::string names = e.name;
      for (const auto& a : e.aliases) names += ", " + a;
      std::cout << names << "\n    " << e.description << "\n";
    }
  });
  std::string emit_name, emit_out;
  auto* cat_emit = cat->add_subcommand("emit", "Write a catalog code in the code file format");
  cat_emit->add_option("name", emit_name, "Entry, optionally with a parameter (toric:5)")->required();
  cat_emit->add_option("-o,--output", emit_out, "Output path (default stdout)");
  cat_emit->callback([&] { write_output(emit_out, render_code(load_catalog(emit_name).code)); });
  cat->add_subcommand("selftest", "Re-verify every entry's expected properties")->callback([&] {
    bool all = true;
    Report r;
    for (const auto& line : catalog_selftest(resolve_threads(g.threads))) {
      all = all && line.pass;
      std::string key = line.entry + " / " + line.what;
      std::replace(key.begin(), key.end(), ':', ' ');
      r.set(key, line.pass ? std::string("pass") : "FAIL " + line.detail);
    }
    r.set("selftest", all ? "pass" : "fail");
    emit(g, r);
    exit_code = all ? kPass : kFail;
  });

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check error-correction or error-transmutation conditions");
  verify->require_subcommand(1);
  struct VerifyOpts {
    std::string code, admissible;
    std::size_t max_weight = 1;
    bool relabel = false, group = false;
  } vo;
  auto run_verify = [&](bool qec) {
    auto code = load_code(vo.code);
    AdmissibleSet m = qec ? AdmissibleSet(code.code.k) : load_admissible(vo.admissible, code);
    auto errs = errors_up_to_weight(code.code.n, vo.max_weight);
    std::size_t threads = resolve_threads(g.threads);
    Report r;
    r.set("code", code.name);
    r.set("max_weight", vo.max_weight);
    r.set("admissible", [&] {
      std::string s;
      for (const auto& c : m.classes()) s += (s.empty() ? "" : ",") + render(c);
      return s;
    }());
    Verdict v;
    if (vo.relabel) {
      auto found = relabel_search(code.code, m, errs, threads);
      r.set("relabel", found ? "found" : "none");
      if (found) {
        v = found->verdict;
        std::string xs, zs;
        for (const auto& p : found->code.logical_x) xs += (xs.empty() ? "" : ",") + render(p);
        for (const auto& p : found->code.logical_z) zs += (zs.empty() ? "" : ",") + render(p);
        r.set("logical_x", xs);
        r.set("logical_z", zs);
      } else {
        v.pass = false;
        v.num_errors = errs.size();
      }
    } else if (qec || vo.group) {
      v = check_group_qet(code.code, m, errs, threads);
    } else {
      v = check_general_qet(code.code, m, errs, threads);
      r.set("strong", strong_conditions_hold(code.code, m, errs));
    }
    add_verdict(r, v);
    emit(g, r);
    exit_code = v.pass ? kPass : kFail;
  };
  for (const char* mode : {"qec", "qet"}) {
    bool qec = std::string(mode) == "qec";
    auto* sub = verify->add_subcommand(mode, qec ? "Exact correction of all errors up to the weight"
                                                 : "Transmutation into the admissible set");
    sub->add_option("--code", vo.code, "Code file or catalog name")->required();
    if (!qec) {
      sub->add_option("--admissible", vo.admissible, "Admissible classes: file or comma list (e.g. ZI,IZ)");
      sub->add_flag("--relabel", vo.relabel, "Search logical bases for one that passes");
      sub->add_flag("--group", vo.group, "Use the group checker (admissible set must be closed)");
    }
    sub->add_option("--max-weight", vo.max_weight, "Check every error up to this weight");
    sub->callback([&, qec] { run_verify(qec); });
  }

  // distance --------------------------------------------------------------
  struct DistOpts {
    std::string code, cls, pure;
    std::size_t cap = 0;
    bool exact = false;
  } dopt;
  auto* dist = app.add_subcommand("distance", "Minimum weight of a nontrivial logical (or of one class)");
  dist->add_option("--code", dopt.code, "Code file or catalog name")->required();
  dist->add_option("--class", dopt.cls, "Target class, e.g. Z1Z2 or ZZ");
  dist->add_option("--pure", dopt.pure, "Restrict to x or z operators");
  dist->add_option("--cap", dopt.cap, "Largest weight searched")->required();
  dist->add_flag("--exact", dopt.exact, "Exit 3 when the cap prevents an exact answer");
  dist->callback([&] {
    auto code = load_code(dopt.code);
    Purity purity = parse_purity(dopt.pure);
    std::size_t threads = resolve_threads(g.threads);
    DistanceResult d;
    if (!dopt.cls.empty()) {
      d = min_weight_in_class(code.code, parse_logical_class(dopt.cls, code.code.k), dopt.cap, purity, threads);
    } else {
      d = min_weight_search(code.code, dopt.cap, [](const LogicalClass& c) { return !c.is_zero(); }, purity, threads);
      if (code.code.k == 0) d.kind = DistanceResult::Kind::kUnbounded;
    }
    Report r;
    r.set("code", code.name);
    if (!dopt.cls.empty()) r.set("class", dopt.cls);
    add_distance(r, "d", d);
    emit(g, r, "d = " + d.describe());
    exit_code = (dopt.exact && d.kind == DistanceResult::Kind::kLowerBound) ? kCapLimited : kPass;
  });

  // deff ------------------------------------------------------------------
  struct DeffOpts {
    std::string code, admissible;
    std::size_t cap = 2;
    bool exact = false, lower = false;
  } eo;
  auto* deff = app.add_subcommand("deff", "Effective distance for an admissible set");
  deff->add_option("--code", eo.code, "Code file or catalog name")->required();
  deff->add_option("--admissible", eo.admissible, "Admissible classes: file or comma list");
  deff->add_option("--cap", eo.cap, "Largest error weight checked");
  deff->add_flag("--lower-bound", eo.lower, "Also report the minimum weight outside the admissible set");
  deff->add_flag("--exact", eo.exact, "Exit 3 when the cap prevents an exact answer");
  deff->callback([&] {
    auto code = load_code(eo.code);
    auto m = load_admissible(eo.admissible, code);
    std::size_t threads = resolve_threads(g.threads);
    auto d = effective_distance(code.code, m, eo.cap, threads);
    Report r;
    r.set("code", code.name);
    add_distance(r, "d_eff", d);
    if (eo.lower) {
      auto lb = deff_lower_bound(code.code, m, std::min(code.code.n, 2 * eo.cap + 1), threads);
      r.set("excluded_min_weight", lb.kind == DistanceResult::Kind::kUnbounded ? std::string("inf") : std::to_string(lb.value));
      r.set("excluded_min_weight_kind", kind_name(lb.kind));
    }
    emit(g, r, "d_eff = " + d.describe());
    exit_code = (eo.exact && d.kind == DistanceResult::Kind::kLowerBound) ? kCapLimited : kPass;
  });

  // css / classical -------------------------------------------------------
  struct CssOpts {
    std::size_t n = 0, dual_rows = 0;
    std::string c1, c2, c2_dual, out;
  } co;
  auto* css = app.add_subcommand("css", "CSS construction from cyclic codes");
  css->require_subcommand(1);
  auto* css_b = css->add_subcommand("build", "Build a CSS code; X checks from C1, Z checks from C2");
  css_b->add_option("--n", co.n, "Block length")->required();
  css_b->add_option("--c1", co.c1, "Generator polynomial of C1")->required();
  auto* c2opt = css_b->add_option("--c2", co.c2, "Generator polynomial of C2");
  auto* c2d = css_b->add_option("--c2-dual", co.c2_dual, "C2 given by its dual: spanned by cyclic shifts of this polynomial");
  css_b->add_option("--c2-dual-rows", co.dual_rows, "Number of shifts spanning the dual of C2");
  c2opt->excludes(c2d);
  css_b->add_option("-o,--output", co.out, "Output path (default stdout)");
  css_b->callback([&] {
    auto c1 = cyclic_code(co.n, parse_poly(co.c1));
    LinearCode c2;
    if (!co.c2.empty()) {
      c2 = cyclic_code(co.n, parse_poly(co.c2));
    } else if (!co.c2_dual.empty()) {
      if (co.dual_rows == 0) throw CLI::ValidationError("--c2-dual-rows", "required with --c2-dual");
      c2 = dual(LinearCode::from_generator(cyclic_shifts(co.n, parse_poly(co.c2_dual), co.dual_rows)));
    } else {
      throw CLI::ValidationError("--c2", "give --c2 or --c2-dual");
    }
    write_output(co.out, render_code(css_build(c1, c2)));
  });

  struct ClassOpts {
    std::size_t n = 0, cap = 0;
    std::string poly;
    bool dual = false;
  } clo;
  auto* cls = app.add_subcommand("classical", "Classical cyclic codes");
  cls->require_subcommand(1);
  auto* cls_d = cls->add_subcommand("distance", "Minimum distance of a cyclic code");
  cls_d->add_option("--n", clo.n, "Block length")->required();
  cls_d->add_option("--poly", clo.poly, "Generator polynomial")->required();
  cls_d->add_flag("--dual", clo.dual, "Use the dual code");
  cls_d->add_option("--cap", clo.cap, "Weight cap when the dimension exceeds 25");
  cls_d->callback([&] {
    auto c = cyclic_code(clo.n, parse_poly(clo.poly));
    if (clo.dual) c = dual(c);
    auto d = classical_distance(c, clo.cap ? clo.cap : clo.n);
    Report r;
    r.set("n", c.n);
    r.set("k", c.k);
    r.set("d", d.kind == DistanceResult::Kind::kUnbounded ? std::string("inf") : std::to_string(d.value));
    r.set("d_kind", kind_name(d.kind));
    if (d.codeword) r.set("codeword", d.codeword->to_string());
    emit(g, r, "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + r.get("d").value() + "]");
  });

  // lattice ---------------------------------------------------------------
  struct LatOpts {
    std::string cell, dims, out;
  } lo;
  auto* lat = app.add_subcommand("lattice", "Translation-invariant codes");
  lat->require_subcommand(1);
  auto* lat_c = lat->add_subcommand("check", "Validate a unit cell symbolically");
  lat_c->add_option("--cell", lo.cell, "Unit-cell file, or tile3 / tile2")->required();
  auto load_cell = [&] {
    if (lo.cell == "tile3") return tile3_cell();
    if (lo.cell == "tile2") return tile2_cell();
    try {
      return parse_unit_cell(read_file(lo.cell));
    } catch (const ParseError& e) {
      throw FileParseError(lo.cell + ": " + e.what());
    }
  };
  lat_c->callback([&] {
    auto u = load_cell();
    auto d = validate_unit_cell(u);
    Report r;
    r.set("n", u.n);
    r.set("s", u.s());
    r.set("logical_pairs", u.a.size());
    r.set("valid", d.ok());
    for (std::size_t i = 0; i < d.problems.size(); ++i) r.set("problem_" + std::to_string(i + 1), d.problems[i]);
    emit(g, r);
    exit_code = d.ok() ? kPass : kFail;
  });
  auto* lat_t = lat->add_subcommand("torus", "Instantiate a unit cell on a periodic torus");
  lat_t->add_option("--cell", lo.cell, "Unit-cell file, or tile3 / tile2")->required();
  lat_t->add_option("--L", lo.dims, "Torus size as Lx,Ly")->required();
  lat_t->add_option("-o,--output", lo.out, "Write the code file here; summary goes to stdout");
  lat_t->callback([&] {
    auto u = load_cell();
    auto comma = lo.dims.find(',');
    std::size_t lx = std::stoul(lo.dims.substr(0, comma));
    std::size_t ly = comma == std::string::npos ? lx : std::stoul(lo.dims.substr(comma + 1));
    auto t = instantiate_torus(u, lx, ly);
    if (lo.out.empty()) {
      std::cout << render_code(t.code);
      return;
    }
    write_output(lo.out, render_code(t.code));
    Report r;
    r.set("n", t.code.n);
    r.set("k", t.code.k);
    r.set("rows", t.all_rows.size());
    r.set("dependent_rows_dropped", t.dropped);
    r.set("logical_basis", t.cell_logicals ? "cell translates" : "standard form");
    emit(g, r);
  });

  // concat ----------------------------------------------------------------
  struct ConcatOpts {
    std::string outer, inner, out, admissible;
    std::size_t scan = 0;
  } cco;
  auto* concat = app.add_subcommand("concat", "Concatenate an outer code with a one-qubit inner code");
  concat->add_option("--outer", cco.outer, "Outer code file or catalog name")->required();
  concat->add_option("--inner", cco.inner, "Inner [n,1] code file or catalog name")->required();
  concat->add_option("-o,--output", cco.out, "Write the code file here; summary goes to stdout");
  concat->add_option("--admissible", cco.admissible, "Outer admissible set for the bound scan");
  concat->add_option("--scan", cco.scan, "Search excluded logicals up to this weight");
  concat->callback([&] {
    auto outer = load_code(cco.outer);
    auto inner = load_code(cco.inner);
    auto cc = concatenate(outer.code, inner.code);
    if (cco.out.empty() && cco.scan == 0) {
      std::cout << render_code(cc.result);
      return;
    }
    if (!cco.out.empty()) write_output(cco.out, render_code(cc.result));
    Report r;
    r.set("n", cc.result.n);
    r.set("k", cc.result.k);
    if (cco.scan) {
      auto m = cc.lift(load_admissible(cco.admissible, outer));
      auto lb = deff_lower_bound(cc.result, m, cco.scan, resolve_threads(g.threads));
      add_distance(r, "excluded_min_weight", lb);
    }
    emit(g, r);
  });

  // search ----------------------------------------------------------------
  struct SearchOpts {
    std::size_t n = 0, k = 0, error_weight = 1, max_results = 1;
    std::string pattern, mode = "random", checkpoint;
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = 10000;
    bool no_detect = false, progress = false;
  } so;
  auto* search = app.add_subcommand("search", "Search standard-form codes for a transmutation pattern");
  search->add_option("--n", so.n, "Physical qubits")->required();
  search->add_option("--k", so.k, "Logical qubits")->required();
  search->add_option("--pattern", so.pattern, "Admissible pattern: file or comma list")->required();
  search->add_option("--mode", so.mode, "random or exhaustive")->check(CLI::IsMember({"random", "exhaustive"}));
  search->add_option("--seed", so.seed, "Random seed (printed when generated)");
  search->add_option("--budget", so.budget, "Samples (random) or parameter indices (exhaustive)");
  search->add_option("--error-weight", so.error_weight, "Errors checked up to this weight");
  search->add_option("--max-results", so.max_results, "Stop after this many hits (0 = all)");
  search->add_option("--checkpoint", so.checkpoint, "Checkpoint file for exhaustive runs");
  search->add_flag("--no-detect", so.no_detect, "Drop the weight-1 detection requirement");
  search->add_flag("--progress", so.progress, "Print progress to stderr");
  search->callback([&] {
    SearchSpec spec;
    spec.n = so.n;
    spec.k = so.k;
    spec.pattern = is_file(so.pattern) ? parse_admissible(read_file(so.pattern), so.k)
                                       : parse_admissible_list(so.pattern, so.k);
    spec.error_weight = so.error_weight;
    spec.require_detection = !so.no_detect;
    spec.mode = so.mode == "exhaustive" ? SearchSpec::Mode::kExhaustive : SearchSpec::Mode::kRandom;
    spec.seed = seed_or_random(so.seed);
    spec.budget = so.budget;
    spec.max_results = so.max_results;
    spec.threads = resolve_threads(g.threads);
    spec.checkpoint_path = so.checkpoint;
    if (so.progress)
      spec.progress = [](std::uint64_t done, std::uint64_t total, std::size_t found) {
        std::cerr << "searched " << done << " / " << total << ", found " << found << "\n";
      };
    auto res = run_search(spec);
    Report r;
    r.set("mode", so.mode);
    r.set("seed", spec.seed);
    r.set("examined", res.examined);
    r.set("detected", res.detected);
    if (res.total) r.set("space", res.total);
    r.set("complete", res.complete);
    r.set("found", res.hits.size());
    for (std::size_t i = 0; i < res.hits.size(); ++i) {
      const auto& h = res.hits[i];
      std::string p = "hit" + std::to_string(i + 1) + "_";
      r.set(p + "index", h.index);
      std::string gens;
      for (const auto& x : h.code.generators) gens += (gens.empty() ? "" : ",") + render(x);
      r.set(p + "generators", gens);
      std::string xs, zs;
      for (const auto& x : h.code.logical_x) xs += (xs.empty() ? "" : ",") + render(x);
      for (const auto& z : h.code.logical_z) zs += (zs.empty() ? "" : ",") + render(z);
      r.set(p + "logical_x", xs);
      r.set(p + "logical_z", zs);
    }
    emit(g, r);
    exit_code = res.hits.empty() ? kFail : kPass;
  });

  // simulate --------------------------------------------------------------
  struct SimOpts {
    std::string code, admissible, model = "uniform1", mixture = "prefer-identity";
    std::uint64_t trials = 100000;
    std::optional<std::uint64_t> seed;
    std::size_t max_weight = 1;
  } sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of the recovery table");
  simulate->add_option("--code", sim.code, "Code file or catalog name")->required();
  simulate->add_option("--admissible", sim.admissible, "Admissible classes: file or comma list");
  simulate->add_option("--model", sim.model, "uniform1, identity, depolarizing:<p> or file:<path>");
  simulate->add_option("--trials", sim.trials, "Number of samples");
  simulate->add_option("--seed", sim.seed, "Random seed (printed when generated)");
  simulate->add_option("--max-weight", sim.max_weight, "Verified error set: all errors up to this weight");
  simulate->add_option("--mixture", sim.mixture, "prefer-identity or uniform")
      ->check(CLI::IsMember({"prefer-identity", "uniform"}));
  simulate->callback([&] {
    auto code = load_code(sim.code);
    auto m = load_admissible(sim.admissible, code);
    std::size_t threads = resolve_threads(g.threads);
    auto v = check_general_qet(code.code, m, errors_up_to_weight(code.code.n, sim.max_weight), threads);
    Report r;
    r.set("code", code.name);
    if (!v.pass) {
      add_verdict(r, v);
      emit(g, r);
      exit_code = kFail;
      return;
    }
    auto policy = sim.mixture == "uniform" ? MixturePolicy::kUniform : MixturePolicy::kPreferIdentity;
    auto table = build_recovery(code.code, m, v, {}, policy);
    auto model = parse_model(sim.model, code.code.n);
    std::uint64_t seed = seed_or_random(sim.seed);
    auto rep = run_trials(code.code, table, model, sim.trials, seed, threads);
    r.set("model", sim.model);
    r.set("seed", seed);
    r.set("trials", rep.trials);
    r.set("uncovered", rep.uncovered);
    r.set("violations", rep.violations);
    r.set("admissibility_rate", rep.admissibility_rate());
    r.set("occupied_syndromes", rep.syndrome_counts.size());
    for (const auto& [cls, count] : rep.class_counts) r.set("class_" + render(cls), count);
    if (std::holds_alternative<ChannelModel::Explicit>(model.kind))
      r.set("total_variation", total_variation(rep, exact_class_distribution(code.code, table, model)));
    emit(g, r);
    exit_code = rep.violations == 0 ? kPass : kFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return exit_code;
}
