#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <thread>

#include "lpbp/bijections.hpp"
#include "lpbp/closed_forms.hpp"
#include "lpbp/errors.hpp"
#include "lpbp/oracle.hpp"
#include "svg.hpp"
#include "sweep.hpp"

namespace lpbp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string comp;
  std::string to;
  std::vector<std::string> paths;
  std::string word;
  std::optional<int> shift;
  bool all_shifts = false;
  std::optional<int> corners;
  bool json = false;
  std::string out_file;
  int max_n = 5;
  int max_m = 3;
  unsigned seed = 0;
  std::optional<std::size_t> sample;
  std::size_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  bool trace = false;
  std::optional<int> a, b, n, s, t, k, c, m, l, bucket, level, rank;
  std::string formula_name;
  std::string bijection_kind;
};

std::string big(const BigInt& v) { return v.to_string(); }
std::string pt(Point p) { return p.to_string(); }

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

Composition need_comp(const Options& o) {
  if (o.comp.empty()) throw UsageError("missing required option --comp");
  try {
    return Composition::parse(o.comp);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--comp: ") + e.what());
  }
}

Point need_point(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required option ") + flag);
  try {
    return Point::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

LatticePath need_path(const std::string& word, Point origin, const char* flag) {
  try {
    return LatticePath::from_word(word, origin);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

const std::string& single_path(const Options& o) {
  if (o.paths.size() != 1) throw UsageError("expected exactly one --path");
  return o.paths.front();
}

Json report_json(const CountReport& r) { return Json{{"all", big(r.all)}, {"bad", big(r.bad)}, {"good", big(r.good)}}; }

Json histogram_json(const std::vector<BigCount>& h) {
  Json arr = Json::array();
  for (const auto& v : h) arr.push_back(big(v));
  return arr;
}

// ---- commands -------------------------------------------------------------

void cmd_count(const Options& o, Json& input, Json& result) {
  const Composition a = need_comp(o);
  const Point t = need_point(o.to, "--to");
  input = {{"comp", a.to_string()}, {"to", pt(t)}};
  if (o.shift) {
    if (*o.shift < 0 || *o.shift >= a.parts_count()) throw DomainError("--shift must lie in [0, m)");
    input["shift"] = *o.shift;
    const Composition s = shift_composition(a, *o.shift);
    result = {{"boundary", s.to_string()}, {"dominated", big(count_dominated(s, t))}};
  } else if (o.all_shifts) {
    input["all_shifts"] = true;
    Json rows = Json::array();
    BigCount total(0);
    for (int j = 0; j < a.parts_count(); ++j) {
      const Composition s = shift_composition(a, j);
      const BigCount d = count_dominated(s, t);
      total += d;
      rows.push_back({{"shift", j}, {"boundary", s.to_string()}, {"dominated", big(d)}});
    }
    result = {{"per_shift", rows}, {"total", big(total)}};
  } else {
    result = report_json(count_lpbp(a, t));
  }
  if (o.corners) {
    input["corners"] = *o.corners;
    result["good_upright_corners"] = big(count_good_by_upright_corners(a, t, *o.corners, o.cap));
    result["good_rightup_corners"] = big(count_good_by_rightup_corners(a, t, *o.corners, o.cap));
  }
}

void cmd_formula(const Options& o, Json& input, Json& result) {
  const std::string& f = o.formula_name;
  input = {{"formula", f}};
  if (f == "theorem1") {
    const Composition a = need_comp(o);
    const Point t = need_point(o.to, "--to");
    input["comp"] = a.to_string();
    input["to"] = pt(t);
    result = report_json(lpbp_counts_formula(a, t));
  } else if (f == "total") {
    const int n = need(o.n, "--n"), m = need(o.m, "--m");
    input["n"] = n;
    input["m"] = m;
    result = {{"good", big(total_over_shifts_formula(n, m))}};
  } else if (f == "ballot") {
    const int slope = need(o.a, "--a");
    const Point t = need_point(o.to, "--to");
    input["a"] = slope;
    input["to"] = pt(t);
    result = {{"paths", big(ballot_formula(slope, t.x, t.y))}};
  } else if (f == "gencat") {
    const int a = need(o.a, "--a"), m = need(o.m, "--m");
    input["a"] = a;
    input["m"] = m;
    result = {{"paths", big(generalized_catalan(a, m))}};
  } else if (f == "corners" || f == "corners2") {
    const Composition a = need_comp(o);
    const Point t = need_point(o.to, "--to");
    input["comp"] = a.to_string();
    input["to"] = pt(t);
    auto eval = [&](int c) { return f == "corners" ? upright_corners_formula(a, t, c) : rightup_corners_formula(a, t, c); };
    if (o.corners) {
      input["corners"] = *o.corners;
      result = {{"good", big(eval(*o.corners))}};
    } else {
      std::vector<BigCount> all;
      for (int c = 0; c <= std::min(t.x, t.y) + 1; ++c) all.push_back(eval(c));
      result = {{"by_corners", histogram_json(all)}};
    }
  } else if (f == "periodic") {
    const PeriodicSpec spec(need(o.a, "--a"), need(o.b, "--b"), need(o.n, "--n"));
    input["a"] = spec.a;
    input["b"] = spec.b;
    input["n"] = spec.n;
    const auto mn = periodic_MN(spec);
    const auto pc = periodic_counts(spec);
    result = {{"p", pt(spec.p())},          {"q", pt(spec.q())},           {"M", big(mn.m)},
              {"N", mn.n.to_string()},      {"Q_ab", big(pc.q_ab)},        {"Q_ba", big(pc.q_ba)},
              {"P_ab", big(pc.p_ab)},       {"P_ba", big(pc.p_ba)}};
  } else if (f == "halfslope") {
    const int c = need(o.c, "--c"), n = need(o.n, "--n");
    input["c"] = c;
    input["n"] = n;
    result = {{"paths", big(half_slope_formula(c, n))}};
  } else if (f == "cat-staircase") {
    const int n = need(o.n, "--n");
    input["n"] = n;
    const auto cs = catalan_staircase_counts(n);
    result = {{"to_odd", big(cs.to_odd)}, {"to_even", big(cs.to_even)},
              {"under_uurr", cs.under_uurr ? Json(big(*cs.under_uurr)) : Json(nullptr)}};
  } else if (f == "staircase") {
    const int s = need(o.s, "--s"), t = need(o.t, "--t"), n = need(o.n, "--n");
    input.update({{"s", s}, {"t", t}, {"n", n}});
    result = {{"paths", big(staircase_theorem_formula(s, t, n))}};
  } else if (f == "kcat") {
    const int n = need(o.n, "--n"), k = need(o.k, "--k");
    input.update({{"n", n}, {"k", k}});
    result = {{"paths", big(k_catalan_formula(n, k))}};
  } else if (f == "avoid") {
    const int s = need(o.s, "--s"), t = need(o.t, "--t"), n = need(o.n, "--n");
    input.update({{"s", s}, {"t", t}, {"n", n}});
    result = {{"paths", big(staircase_avoidance_count(s, t, n))}};
  } else if (f == "avoid-corners") {
    const int s = need(o.s, "--s"), t = need(o.t, "--t"), n = need(o.n, "--n"), c = need(o.corners, "--corners");
    input.update({{"s", s}, {"t", t}, {"n", n}, {"corners", c}});
    result = {{"paths", big(staircase_avoidance_corners(s, t, n, c))}};
  } else if (f == "gstar") {
    const int n = need(o.n, "--n"), m = need(o.m, "--m"), l = need(o.l, "--l");
    input.update({{"n", n}, {"m", m}, {"l", l}});
    result = {{"good", big(gstar_count(n, m, l))}};
  } else if (f == "right-edge") {
    const Composition a = need_comp(o);
    const int l = need(o.l, "--l");
    input.update({{"comp", a.to_string()}, {"l", l}});
    result = {{"good", big(good_at_right_edge(a, l))}};
  } else {
    throw UsageError("unknown formula '" + f + "'");
  }
}

SweepOptions sweep_options(const Options& o, Json& input) {
  SweepOptions s;
  s.max_n = o.max_n;
  s.max_m = o.max_m;
  s.threads = o.threads;
  s.sample = o.sample;
  s.seed = o.seed;
  s.cap = o.cap;
  input = {{"max_n", s.max_n}, {"max_m", s.max_m}};
  if (s.sample) input.update({{"sample", *s.sample}, {"seed", s.seed}});
  return s;
}

bool cmd_verify(const Options& o, Json& input, Json& result) {
  const auto report = verify_identities(sweep_options(o, input));
  Json checks = Json::object();
  for (const auto& [name, count] : report.checks) checks[name] = count;
  const bool ok = report.failures.empty();
  result = {{"compositions", report.compositions},
            {"checks", checks},
            {"failures", report.failures},
            {"status", ok ? "all identities hold" : std::to_string(report.failures.size()) + " identity checks failed"}};
  return ok;
}

bool cmd_sweep(const Options& o, Json& input, Json& result) {
  const auto rows = sweep_counts(sweep_options(o, input));
  Json arr = Json::array();
  long applicable = 0, mismatches = 0;
  for (const auto& r : rows) {
    applicable += r.applicable ? 1 : 0;
    mismatches += r.match ? 0 : 1;
    arr.push_back({{"comp", r.composition.to_string()},
                   {"to", pt(r.terminus)},
                   {"all", big(r.oracle.all)},
                   {"bad", big(r.oracle.bad)},
                   {"good", big(r.oracle.good)},
                   {"formula", r.applicable ? (r.match ? "match" : "mismatch") : "n/a"}});
  }
  result = {{"rows", arr}, {"termini", rows.size()}, {"applicable", applicable}, {"mismatches", mismatches}};
  return mismatches == 0;
}

void cmd_bijection(const Options& o, Json& input, Json& result) {
  const std::string& kind = o.bijection_kind;
  const Composition a = need_comp(o);
  input = {{"kind", kind}, {"comp", a.to_string()}};
  if (kind == "psi") {
    const auto path = need_path(single_path(o), {0, 0}, "--path");
    const int j = need(o.shift, "--shift");
    input.update({{"path", path.word()}, {"shift", j}});
    const auto tr = psi_trace(Lpbp(path, a, j), path.terminus());
    result = {{"origin", pt(tr.result.origin())},
              {"path", tr.result.word()},
              {"terminus", pt(tr.result.terminus())},
              {"bucket", tr.location.column},
              {"level", tr.location.level}};
    if (o.trace) {
      result["trace"] = {{"bad_step_index", tr.location.step_index},
                         {"landing", pt(tr.location.landing)},
                         {"before", tr.before.word()},
                         {"after", tr.after.word()},
                         {"reflected", tr.reflected.word()}};
    }
  } else if (kind == "phi") {
    const auto path = need_path(single_path(o), {-1, 1}, "--path");
    const int i = need(o.bucket, "--bucket"), j = need(o.level, "--level");
    const Point t = o.to.empty() ? path.terminus() : need_point(o.to, "--to");
    input.update({{"path", path.word()}, {"bucket", i}, {"level", j}, {"to", pt(t)}});
    const Lpbp pair = phi(path, a, i, j, t);
    result = {{"path", pair.path.word()}, {"shift", pair.shift_index}, {"boundary", pair.boundary().to_string()}};
    if (o.trace) {
      const auto ctx = bad_step_context(a, i);
      Json bs = Json::array();
      for (Point p : ctx.b) bs.push_back(pt(p));
      result["trace"] = {{"p_i", pt(ctx.base)}, {"s_i", ctx.offset}, {"b", bs}, {"b_minus1", pt(ctx.b_minus1)}};
    }
  } else if (kind == "omega") {
    if (o.word.empty()) throw UsageError("missing required option --word");
    const int k = need(o.rank, "--rank");
    input.update({{"word", o.word}, {"rank", k}});
    const auto tr = omega_trace(a, o.word, k);
    result = {{"path", tr.result.path.word()},
              {"shift", tr.result.shift_index},
              {"boundary", tr.result.boundary().to_string()},
              {"terminus", pt(tr.result.path.terminus())}};
    if (o.trace) {
      Json blocks = Json::array();
      for (const auto& bl : tr.blocks) blocks.push_back(bl.empty() ? "-" : bl);
      result["trace"] = {{"blocks", blocks}, {"u", tr.u}, {"good_starts", tr.good_starts}, {"start", tr.start}};
    }
  } else if (kind == "omega-inv") {
    const auto path = need_path(single_path(o), {0, 0}, "--path");
    const int j = need(o.shift, "--shift");
    input.update({{"path", path.word()}, {"shift", j}});
    const auto pre = omega_inverse(Lpbp(path, a, j));
    result = {{"word", pre.word}, {"rank", pre.rank}};
  } else {
    throw UsageError("unknown bijection '" + kind + "'");
  }
}

void write_file(const std::string& file, const std::string& text) {
  std::ofstream f(file, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + file + "' for writing");
  f << text;
  f.flush();
  if (!f) throw std::ios_base::failure("failed writing '" + file + "'");
}

void cmd_render(const Options& o, Json& input, Json& result, std::string& raw) {
  const Composition a = need_comp(o);
  std::vector<LatticePath> paths;
  for (const auto& w : o.paths) paths.push_back(need_path(w, {0, 0}, "--path"));
  input = {{"comp", a.to_string()}, {"all_shifts", o.all_shifts}, {"paths", o.paths}};
  const std::string svg = render_svg(a, o.all_shifts, paths);
  if (!o.out_file.empty()) {
    write_file(o.out_file, svg);
    result = {{"out", o.out_file}, {"bytes", svg.size()}};
  } else if (o.json) {
    result = {{"svg", svg}};
  } else {
    raw = svg;
  }
}

// ---- output ---------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
    return s.empty() ? "(none)" : s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : "  ") + k + "=" + scalar_text(e);
    return s;
  }
  return v.dump();
}

void print_text(const Json& obj, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : obj.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      print_text(v, os, indent + 2);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.size() > 16 || v.front().is_array())) {
      os << pad << key << ":\n";
      for (const auto& e : v) os << pad << "  " << scalar_text(e) << "\n";
    } else {
      os << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

void add_sweep_flags(CLI::App* sub, Options& o) {
  sub->add_option("--max-n", o.max_n, "largest composition total")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-m", o.max_m, "largest number of parts")->check(CLI::PositiveNumber);
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--sample", o.sample, "check a random subset of this many compositions");
  sub->add_option("--seed", o.seed, "seed for --sample");
  sub->add_option("--cap", o.cap, "enumeration cap")->check(CLI::PositiveNumber);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "structured output");
  sub->add_option("--out", o.out_file, "write output to FILE");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lattice paths under cyclically shifted boundaries", "lpbp"};
  app.require_subcommand(1, 1);

  auto* count = app.add_subcommand("count", "oracle counts of dominated paths and boundary pairs");
  count->add_option("--comp", o.comp, "weak composition, e.g. 1,2,3");
  count->add_option("--to", o.to, "terminus x,y");
  auto* shift_opt = count->add_option("--shift", o.shift, "count paths under one shift j");
  shift_opt->excludes(count->add_flag("--all-shifts", o.all_shifts, "list every shift and the total"));
  count->add_option("--corners", o.corners, "also count good pairs with this many corners");
  count->add_option("--cap", o.cap, "enumeration cap")->check(CLI::PositiveNumber);
  add_common(count, o);

  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  formula->add_option("name", o.formula_name, "formula name")
      ->required()
      ->check(CLI::IsMember({"theorem1", "total", "ballot", "gencat", "corners", "corners2", "periodic", "halfslope",
                             "cat-staircase", "staircase", "kcat", "avoid", "avoid-corners", "gstar", "right-edge"}));
  formula->add_option("--comp", o.comp, "weak composition");
  formula->add_option("--to", o.to, "terminus x,y");
  formula->add_option("--corners", o.corners, "corner count c");
  for (auto [flag, slot] : std::vector<std::pair<const char*, std::optional<int>*>>{
           {"--a", &o.a}, {"--b", &o.b}, {"--n", &o.n}, {"--s", &o.s}, {"--t", &o.t},
           {"--k", &o.k}, {"--c", &o.c}, {"--m", &o.m}, {"--l", &o.l}}) {
    formula->add_option(flag, *slot, "integer parameter");
  }
  add_common(formula, o);

  auto* verify = app.add_subcommand("verify", "check every identity against the oracle over a sweep");
  add_sweep_flags(verify, o);
  add_common(verify, o);

  auto* sweep = app.add_subcommand("sweep", "tabulate oracle counts and formula agreement over a sweep");
  add_sweep_flags(sweep, o);
  add_common(sweep, o);

  auto* bijection = app.add_subcommand("bijection", "apply psi, phi, omega or omega-inv");
  bijection->add_option("kind", o.bijection_kind, "which map")
      ->required()
      ->check(CLI::IsMember({"psi", "phi", "omega", "omega-inv"}));
  bijection->add_option("--comp", o.comp, "weak composition");
  bijection->add_option("--path", o.paths, "path word over R,U");
  bijection->add_option("--word", o.word, "word for omega");
  bijection->add_option("--shift", o.shift, "shift index j");
  bijection->add_option("--to", o.to, "terminus x,y (phi)");
  bijection->add_option("--bucket", o.bucket, "column i (phi)");
  bijection->add_option("--level", o.level, "level j (phi)");
  bijection->add_option("--rank", o.rank, "k (omega)");
  bijection->add_flag("--trace", o.trace, "show intermediate data");
  add_common(bijection, o);

  auto* render = app.add_subcommand("render", "draw the boundary and paths as SVG");
  render->add_option("--comp", o.comp, "weak composition");
  render->add_flag("--all-shifts", o.all_shifts, "draw every distinct shift");
  render->add_option("--path", o.paths, "path word from the origin (repeatable)");
  add_common(render, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Json input, result;
    std::string raw;
    bool ok = true;
    if (command == "count") {
      cmd_count(o, input, result);
    } else if (command == "formula") {
      cmd_formula(o, input, result);
    } else if (command == "verify") {
      ok = cmd_verify(o, input, result);
    } else if (command == "sweep") {
      ok = cmd_sweep(o, input, result);
    } else if (command == "bijection") {
      cmd_bijection(o, input, result);
    } else {
      cmd_render(o, input, result, raw);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (!raw.empty()) {
      text = raw;
    } else if (o.json) {
      const Json doc = {{"command", command}, {"input", input}, {"result", result}, {"elapsed_ms", ms}};
      text = doc.dump(2) + "\n";
    } else {
      std::ostringstream os;
      print_text(result, os, 0);
      text = os.str();
    }
    if (!o.out_file.empty() && command != "render") {
      write_file(o.out_file, text);
    } else {
      out << text;
    }
    return ok ? kExitOk : kExitDomain;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << chosen->help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace lpbp::cli
