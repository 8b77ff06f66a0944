// mgl: command-line front end for the library.
//
// Exit status: 0 success, 1 a validation failure or property violation,
// 2 a usage error (bad flags, malformed input, enumeration cap exceeded).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mgl/complexes.hpp"
#include "mgl/json_io.hpp"
#include "mgl/operad.hpp"
#include "mgl/orval.hpp"
#include "mgl/sums_sliding.hpp"
#include "mgl/valuated.hpp"

namespace {

using mgl::io::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Common {
  int d = 0;
  int n = 0;
  std::string out = "-";
  std::uint64_t guard = 0;  // 0 keeps the library default
};

void log(const std::string& msg) { std::cerr << "mgl: " << msg << "\n"; }

std::uint64_t guard_or(const Common& c, std::uint64_t fallback) { return c.guard ? c.guard : fallback; }

std::string format_pair(const mgl::ExchangePair& p) {
  return "(X,Y)=(" + mgl::format_subset(p.X) + "," + mgl::format_subset(p.Y) + ")";
}

std::vector<mgl::Rational> parse_weights(const std::string& text) {
  std::vector<mgl::Rational> t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      t.push_back(mgl::parse_rational(item));
    } catch (const mgl::Error& e) {
      throw mgl::io::InputError("bad weight \"" + item + "\": " + e.what());
    }
  }
  return t;
}

std::vector<std::size_t> parse_map(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw mgl::io::InputError("bad map entry \"" + item + "\"");
    }
  }
  return out;
}

// ---- validate ----------------------------------------------------------

int validate(const std::string& kind, const std::string& path) {
  const json j = mgl::io::read_json_file(path);
  if (kind == "matroid") {
    auto c = mgl::io::matroid_from_json(j);
    if (c.support.empty()) {
      std::cout << "invalid: the zero vector is not a matroid\n";
      return kViolation;
    }
    if (auto v = mgl::find_exchange_violation(c)) {
      std::cout << "invalid: basis exchange fails at " << format_pair(v->pair) << ": i=" << v->i
                << " has p(X-i)=p(Y+i)=1 but no other j in X\\Y does\n";
      return kViolation;
    }
    std::cout << "valid matroid with " << c.support.size() << " bases\n";
    return kOk;
  }
  if (kind == "tropical") {
    auto phi = mgl::io::tropical_from_json(j);
    if (phi.is_zero()) {
      std::cout << "invalid: the vector is identically inf\n";
      return kViolation;
    }
    if (auto v = mgl::find_tropical_violation(phi)) {
      std::cout << "invalid: initial datum cardinality < 2 at " << format_pair(*v) << "\n";
      return kViolation;
    }
    std::cout << "valid tropical Plucker vector\n";
    return kOk;
  }
  if (kind == "chirotope") {
    auto chi = mgl::io::chirotope_from_json(j);
    if (chi.is_zero()) {
      std::cout << "invalid: the sign map is identically zero\n";
      return kViolation;
    }
    if (auto v = mgl::find_chirotope_violation(chi)) {
      std::cout << "invalid: three-term values are nonzero and one-signed at " << format_pair(*v)
                << "\n";
      return kViolation;
    }
    std::cout << "valid chirotope\n";
    return kOk;
  }
  if (kind == "orval") {
    auto Phi = mgl::io::orval_from_json(j);
    if (Phi.is_zero()) {
      std::cout << "invalid: the vector is identically zero\n";
      return kViolation;
    }
    if (auto v = mgl::find_oriented_violation(Phi)) {
      std::cout << "invalid: the maximum modulus occurs with one sign only at " << format_pair(*v)
                << "\n";
      return kViolation;
    }
    std::cout << "valid oriented tropical Plucker vector\n";
    return kOk;
  }
  throw mgl::io::InputError("unknown kind \"" + kind + "\"");
}

// ---- enumeration -------------------------------------------------------

int matroids(const Common& c) {
  auto list = mgl::enumerate_matroids(c.d, c.n, guard_or(c, mgl::kMatroidEnumerationGuard));
  json arr = json::array();
  for (const auto& m : list) arr.push_back(mgl::io::matroid_to_json(m));
  log(std::to_string(list.size()) + " matroids of rank " + std::to_string(c.d) + " on " +
      std::to_string(c.n) + " elements");
  mgl::io::write_json({{"d", c.d}, {"n", c.n}, {"count", list.size()}, {"matroids", arr}}, c.out);
  return kOk;
}

int macp(const Common& c) {
  auto P = mgl::enumerate_oriented_matroids(c.d, c.n, guard_or(c, mgl::kOrientedEnumerationGuard));
  log(std::to_string(P.elements.size()) + " oriented matroid classes");
  mgl::io::write_json(mgl::io::macp_to_json(P, c.d, static_cast<std::size_t>(c.n)), c.out);
  return kOk;
}

int dressian(const Common& c) {
  auto cells = mgl::enumerate_dressian_cells(c.d, c.n, guard_or(c, mgl::kDressianEnumerationGuard));
  json arr = json::array();
  for (const auto& cell : cells) arr.push_back(mgl::io::cell_to_json(cell));
  log(std::to_string(cells.size()) + " Dressian cells");
  mgl::io::write_json({{"d", c.d}, {"n", c.n}, {"count", cells.size()}, {"cells", arr}}, c.out);
  return kOk;
}

int orval_cells(const Common& c) {
  auto macp = mgl::enumerate_oriented_matroids(c.d, c.n, guard_or(c, mgl::kOrientedEnumerationGuard));
  auto poset = mgl::oriented_cell_poset(macp);
  json arr = json::array();
  for (std::size_t i = 0; i < poset.cells.size(); ++i) {
    json cell = mgl::io::oriented_cell_to_json(poset.cells[i]);
    cell["class_index"] = poset.class_index[i];
    arr.push_back(std::move(cell));
  }
  json out = mgl::io::poset_to_json(mgl::FinitePoset(poset.leq));
  out["d"] = c.d;
  out["n"] = c.n;
  out["cells"] = std::move(arr);
  log(std::to_string(poset.cells.size()) + " oriented cells over " +
      std::to_string(macp.elements.size()) + " classes");
  mgl::io::write_json(out, c.out);
  return kOk;
}

int closure_check(const Common& c) {
  auto cells = mgl::enumerate_dressian_cells(c.d, c.n, guard_or(c, mgl::kDressianEnumerationGuard));
  auto report = mgl::check_closure_relation(cells);
  mgl::io::write_json({{"d", c.d},
                       {"n", c.n},
                       {"cells", cells.size()},
                       {"pairs_checked", report.pairs_checked},
                       {"containments", report.containments},
                       {"violations", report.violations}},
                      c.out);
  return report.violations.empty() ? kOk : kViolation;
}

int fibers_check(const Common& c, bool corrected) {
  auto macp = mgl::enumerate_oriented_matroids(c.d, c.n, guard_or(c, mgl::kOrientedEnumerationGuard));
  auto poset = mgl::oriented_cell_poset(macp);
  auto report = mgl::check_fiber_finality(poset, macp);
  json out = {{"d", c.d},
              {"n", c.n},
              {"mode", corrected ? "restricted" : "literal"},
              {"fibers_checked", report.fibers_checked},
              {"objects_checked", report.objects_checked},
              {"violations", report.violations},
              {"final_object_not_I", report.final_object_not_I.size()},
              {"final_object_not_I_restricted_to_I_max", report.final_object_not_restriction.size()}};
  // Literal mode: the final object of every fibre category must be I itself.
  // Restricted mode: it must be I ∩ I_max(χ).
  const auto& extra = corrected ? report.final_object_not_restriction : report.final_object_not_I;
  const std::size_t shown = std::min<std::size_t>(extra.size(), 20);
  out["examples"] = std::vector<std::string>(extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(shown));
  mgl::io::write_json(out, c.out);
  const bool ok = report.violations.empty() && extra.empty();
  if (!ok) log("fibre finality fails on " + std::to_string(report.violations.size() + extra.size()) + " objects");
  return ok ? kOk : kViolation;
}

// ---- complexes ---------------------------------------------------------

int nerve(const std::string& path, const Common& c, long max_dim) {
  auto P = mgl::io::poset_from_json(mgl::io::read_json_file(path));
  auto K = max_dim < 0 ? mgl::order_complex(P) : mgl::order_complex(P, static_cast<std::size_t>(max_dim));
  mgl::io::write_json(mgl::io::complex_to_json(K), c.out);
  return kOk;
}

int euler(const std::string& path) {
  auto K = mgl::io::complex_from_json(mgl::io::read_json_file(path));
  std::cout << mgl::euler_characteristic(K) << "\n";
  return kOk;
}

// ---- sums and sliding --------------------------------------------------

int dsum(const std::vector<std::string>& paths, const Common& c) {
  if (paths.empty()) throw mgl::io::InputError("dsum needs at least one input");
  auto acc = mgl::io::orval_from_json(mgl::io::read_json_file(paths[0]));
  for (std::size_t k = 1; k < paths.size(); ++k) {
    acc = mgl::direct_sum(acc, mgl::io::orval_from_json(mgl::io::read_json_file(paths[k])));
  }
  mgl::io::write_json(mgl::io::orval_to_json(acc), c.out);
  return kOk;
}

int slide(const std::string& phi_path, const std::string& family_path, const std::string& t_text,
          const Common& c) {
  auto Phi = mgl::io::orval_from_json(mgl::io::read_json_file(phi_path));
  auto family = mgl::io::family_from_json(mgl::io::read_json_file(family_path));
  auto t = parse_weights(t_text);
  if (t.size() != family.size()) {
    throw mgl::io::InputError("--t lists " + std::to_string(t.size()) + " weights for " +
                              std::to_string(family.size()) + " injections");
  }
  mgl::io::write_json(mgl::io::orval_to_json(mgl::slide(Phi, family, t)), c.out);
  return kOk;
}

// ---- operad ------------------------------------------------------------

int operad_compose(const std::string& gamma_text, const std::vector<std::string>& paths,
                   const Common& c) {
  if (paths.empty()) throw mgl::io::InputError("compose needs the point of E(A) and one point per fibre");
  auto pA = mgl::io::operad_point_from_json(mgl::io::read_json_file(paths[0]));
  std::vector<mgl::OperadPoint> fibres;
  for (std::size_t k = 1; k < paths.size(); ++k) {
    fibres.push_back(mgl::io::operad_point_from_json(mgl::io::read_json_file(paths[k])));
  }
  const std::size_t arity = pA.is_unit() ? 1 : pA.arity();
  if (fibres.size() != arity) {
    throw mgl::io::InputError("expected " + std::to_string(arity) + " fibre points, got " +
                              std::to_string(fibres.size()));
  }
  auto gamma = parse_map(gamma_text);
  mgl::io::write_json(mgl::io::operad_point_to_json(mgl::operad_compose(gamma, pA, fibres)), c.out);
  return kOk;
}

int operad_act(const std::vector<std::string>& paths, const Common& c) {
  if (paths.empty()) throw mgl::io::InputError("act needs a point and its inputs");
  auto p = mgl::io::operad_point_from_json(mgl::io::read_json_file(paths[0]));
  std::vector<mgl::OrientedTropicalVector> inputs;
  for (std::size_t k = 1; k < paths.size(); ++k) {
    inputs.push_back(mgl::io::orval_from_json(mgl::io::read_json_file(paths[k])));
  }
  auto out = mgl::operad_act(p, inputs);
  json j = mgl::io::orval_to_json(out);
  j["valid"] = out.is_zero() || mgl::is_oriented_tropical_plucker(out);
  mgl::io::write_json(j, c.out);
  return j["valid"].get<bool>() ? kOk : kViolation;
}

int check_laws(std::uint64_t seed, std::size_t trials, std::size_t max_window, std::size_t max_set,
               const Common& c) {
  mgl::LawPlan plan;
  plan.seed = seed;
  plan.random_trials = trials;
  plan.max_window = max_window;
  plan.max_set_size = max_set;
  auto report = mgl::check_operad_laws(plan);
  mgl::io::write_json({{"seed", seed},
                       {"trials", trials},
                       {"max_window", max_window},
                       {"max_set_size", max_set},
                       {"unit_checks", report.unit_checks},
                       {"associativity_checks", report.associativity_checks},
                       {"equivariance_checks", report.equivariance_checks},
                       {"configurations", report.configurations},
                       {"window_skipped", report.window_skipped},
                       {"failures", report.failures}},
                      c.out);
  return report.failures.empty() ? kOk : kViolation;
}

int check_action(std::uint64_t seed, std::size_t trials, std::size_t max_window, const Common& c) {
  mgl::ActionPlan plan;
  plan.seed = seed;
  plan.trials = trials;
  plan.max_window = max_window;
  auto report = mgl::check_action_compatibility(plan);
  mgl::io::write_json({{"seed", seed},
                       {"trials", trials},
                       {"max_window", max_window},
                       {"coordinates_compared", report.coordinates_compared},
                       {"outputs_validated", report.outputs_validated},
                       {"failures", report.failures}},
                      c.out);
  return report.failures.empty() ? kOk : kViolation;
}

void add_dn(CLI::App* app, Common& c) {
  app->add_option("--d", c.d, "rank")->required()->check(CLI::NonNegativeNumber);
  app->add_option("--n", c.n, "ground set size")->required()->check(CLI::NonNegativeNumber);
}

void add_out(CLI::App* app, Common& c) {
  app->add_option("-o,--out", c.out, "output file ('-' for standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgl: matroids, oriented valuated matroids, and the operad acting on them"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--guard-override", common.guard, "raise the enumeration cap on C(n,d)");

  std::function<int()> run;

  std::string kind;
  std::string path;
  auto* v = app.add_subcommand("validate", "check an object against its axioms");
  v->add_option("--kind", kind, "matroid | tropical | chirotope | orval")
      ->required()
      ->check(CLI::IsMember({"matroid", "tropical", "chirotope", "orval"}));
  v->add_option("file", path, "JSON input")->required();
  v->callback([&] { run = [&] { return validate(kind, path); }; });

  auto* ov = app.add_subcommand("orval-validate", "check an oriented tropical Plucker vector");
  ov->add_option("file", path, "JSON input")->required();
  ov->callback([&] { run = [&] { return validate("orval", path); }; });

  auto* m = app.add_subcommand("matroids", "enumerate matroids");
  add_dn(m, common);
  add_out(m, common);
  m->callback([&] { run = [&] { return matroids(common); }; });

  auto* mp = app.add_subcommand("macp", "enumerate oriented matroids with the specialization order");
  add_dn(mp, common);
  add_out(mp, common);
  mp->callback([&] { run = [&] { return macp(common); }; });

  auto* dr = app.add_subcommand("dressian", "enumerate the cells C(p, I)");
  add_dn(dr, common);
  add_out(dr, common);
  dr->callback([&] { run = [&] { return dressian(common); }; });

  auto* oc = app.add_subcommand("orval-cells", "enumerate the cells ([chi], I) and their order");
  add_dn(oc, common);
  add_out(oc, common);
  oc->callback([&] { run = [&] { return orval_cells(common); }; });

  auto* cc = app.add_subcommand("closure-check", "compare closure candidates with the perturbation LP");
  add_dn(cc, common);
  add_out(cc, common);
  cc->callback([&] { run = [&] { return closure_check(common); }; });

  bool restricted = false;
  auto* fc = app.add_subcommand("fibers-check", "final objects of the fibre categories");
  add_dn(fc, common);
  add_out(fc, common);
  fc->add_flag("--restricted", restricted, "expect I restricted to I_max instead of I");
  fc->callback([&] { run = [&] { return fibers_check(common, restricted); }; });

  long max_dim = -1;
  auto* ne = app.add_subcommand("nerve", "order complex of a poset");
  ne->add_option("poset", path, "poset JSON")->required();
  ne->add_option("--max-dim", max_dim, "largest simplex dimension");
  add_out(ne, common);
  ne->callback([&] { run = [&] { return nerve(path, common, max_dim); }; });

  auto* eu = app.add_subcommand("euler", "Euler characteristic of a complex");
  eu->add_option("complex", path, "complex JSON")->required();
  eu->callback([&] { run = [&] { return euler(path); }; });

  std::vector<std::string> paths;
  auto* ds = app.add_subcommand("dsum", "direct sum of oriented vectors, left to right");
  ds->add_option("inputs", paths, "vector JSON files")->required();
  add_out(ds, common);
  ds->callback([&] { run = [&] { return dsum(paths, common); }; });

  std::string family_path;
  std::string t_text;
  auto* sl = app.add_subcommand("slide", "slide a vector along a family of injections");
  sl->add_option("phi", path, "vector JSON")->required();
  sl->add_option("family", family_path, "family JSON")->required();
  sl->add_option("--t", t_text, "weights, e.g. \"1/3,2/3\"")->required();
  add_out(sl, common);
  sl->callback([&] { run = [&] { return slide(path, family_path, t_text, common); }; });

  auto* op = app.add_subcommand("operad", "operad composition, action and law checks");
  op->require_subcommand(1);

  std::string gamma_text;
  auto* co = op->add_subcommand("compose", "gamma*(pA, fibre points)");
  co->add_option("--gamma", gamma_text, "gamma(b) for b = 0.., e.g. \"0,0,1\"")->required();
  co->add_option("points", paths, "pA.json then one point per element of A")->required();
  add_out(co, common);
  co->callback([&] { run = [&] { return operad_compose(gamma_text, paths, common); }; });

  auto* ac = op->add_subcommand("act", "act with a point on one vector per element of A");
  ac->add_option("files", paths, "point.json then input vectors")->required();
  add_out(ac, common);
  ac->callback([&] { run = [&] { return operad_act(paths, common); }; });

  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t law_window = 20;
  std::size_t max_set = 3;
  auto* cl = op->add_subcommand("check-laws", "unit, associativity and equivariance");
  cl->add_option("--seed", seed, "RNG seed")->required();
  cl->add_option("--trials", trials, "random draws on top of the exhaustive sweep");
  cl->add_option("--max-window", law_window, "largest window");
  cl->add_option("--max-set-size", max_set, "largest |A|, |B|, |C|");
  add_out(cl, common);
  cl->callback([&] { run = [&] { return check_laws(seed, trials, law_window, max_set, common); }; });

  std::size_t action_trials = 60;
  std::size_t action_window = 30;
  auto* ca = op->add_subcommand("check-action", "compatibility of the action with composition");
  ca->add_option("--seed", seed, "RNG seed")->required();
  ca->add_option("--trials", action_trials, "number of sampled configurations");
  ca->add_option("--max-window", action_window, "largest window");
  add_out(ca, common);
  ca->callback([&] { run = [&] { return check_action(seed, action_trials, action_window, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const mgl::GuardError& e) {
    log(e.what());
    return kUsage;
  } catch (const mgl::io::InputError& e) {
    log(std::string("bad input: ") + e.what());
    return kUsage;
  } catch (const mgl::Error& e) {
    log(e.what());
    return kViolation;
  }
}
