#include "mgl/valuated.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mgl/lp.hpp"

namespace mgl {

namespace {

struct Term {
  Element i;
  TropicalValue value;
};

std::vector<Term> exchange_terms(const TropicalVector& phi, const ExchangePair& pair) {
  std::vector<Term> out;
  for (Element i : set_minus(pair.X, pair.Y)) {
    out.push_back({i, phi[without_element(pair.X, i)] + phi[with_element(pair.Y, i)]});
  }
  return out;
}

// Indices attaining the finite minimum; empty when every term is ∞.
Subset argmin(const std::vector<Term>& terms) {
  Subset out;
  const TropicalValue* best = nullptr;
  for (const auto& t : terms) {
    if (t.value.is_infinite()) continue;
    if (!best || t.value < *best) {
      best = &t.value;
      out.assign(1, t.i);
    } else if (t.value == *best) {
      out.push_back(t.i);
    }
  }
  return out;
}

std::string format_pair(const ExchangePair& pair) {
  return "(X,Y)=(" + format_subset(pair.X) + "," + format_subset(pair.Y) + ")";
}

// Drops zero coefficients.  Returns false for the zero form.
bool tidy(LinearForm& form) {
  for (auto it = form.begin(); it != form.end();) {
    it = it->second == 0 ? form.erase(it) : std::next(it);
  }
  return !form.empty();
}

void check_cell_shapes(const DressianCellId& cell) {
  const auto& m = cell.matroid;
  if (cell.datum.rank() != m.rank()) throw Error("initial datum and matroid have different rank");
  auto expected = all_exchange_pairs(m.ground(), m.rank());
  if (expected != cell.datum.pairs()) {
    throw Error("initial datum is not indexed by the exchange pairs of the matroid's ground set");
  }
}

lp::Row make_row(std::size_t width, const LinearForm& form, std::size_t offset, lp::Relation rel,
                 Rational rhs = 0) {
  lp::Row row{std::vector<Rational>(width), rel, std::move(rhs)};
  for (const auto& [v, c] : form) row.coefficients[offset + v] = c;
  return row;
}

struct Constraints {
  std::set<LinearForm> equalities;
  std::set<LinearForm> strict;
};

// Constraints a single pair imposes on coordinates indexed by `vars` (the
// sorted bases of a matroid).  An inadmissible choice adds the zero strict
// form, which no point satisfies.
void add_pair_constraints(const std::vector<Subset>& vars, const ExchangePair& pair,
                          const Subset& chosen, Constraints& out) {
  auto var = [&](const Subset& b) -> std::optional<std::size_t> {
    auto it = std::lower_bound(vars.begin(), vars.end(), b);
    if (it == vars.end() || *it != b) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
  };
  const Subset full = set_minus(pair.X, pair.Y);
  std::map<Element, LinearForm> finite;
  for (Element i : full) {
    auto a = var(without_element(pair.X, i));
    auto b = var(with_element(pair.Y, i));
    if (a && b) finite[i] = LinearForm{{*a, 1}, {*b, 1}};
  }
  if (finite.empty()) {
    if (chosen != full) out.strict.insert(LinearForm{});
    return;
  }
  bool admissible = chosen.size() >= 2;
  for (Element i : chosen) admissible = admissible && finite.count(i);
  if (!admissible) {
    out.strict.insert(LinearForm{});
    return;
  }
  const LinearForm& base = finite.at(chosen.front());
  for (const auto& [i, form] : finite) {
    LinearForm diff = form;
    for (const auto& [v, c] : base) diff[v] -= c;
    bool nonzero = tidy(diff);
    if (std::binary_search(chosen.begin(), chosen.end(), i)) {
      if (!nonzero) continue;
      if (diff.begin()->second < 0) {
        for (auto& [v, c] : diff) c = -c;
      }
      out.equalities.insert(std::move(diff));
    } else {
      out.strict.insert(std::move(diff));
    }
  }
}

LinearSystem make_system(const std::vector<Subset>& vars, const Constraints& c) {
  LinearSystem sys;
  sys.variables = vars;
  sys.all_ones_lineality = true;
  sys.equalities.assign(c.equalities.begin(), c.equalities.end());
  sys.strict.assign(c.strict.begin(), c.strict.end());
  return sys;
}

}  // namespace

std::vector<ExchangePair> all_exchange_pairs(const GroundSet& ground, int d) {
  if (d < 1 || static_cast<std::size_t>(d) + 1 > ground.size()) return {};
  return exchange_pairs(ground, d);
}

InitialDatum::InitialDatum(const GroundSet& ground, int rank)
    : rank_(rank),
      pairs_(std::make_shared<const std::vector<ExchangePair>>(all_exchange_pairs(ground, rank))) {
  sets_.reserve(pairs_->size());
  for (const auto& p : *pairs_) sets_.push_back(set_minus(p.X, p.Y));
}

const Subset& InitialDatum::operator[](const ExchangePair& pair) const {
  auto it = std::lower_bound(pairs_->begin(), pairs_->end(), pair);
  if (it == pairs_->end() || !(*it == pair)) {
    throw Error("initial datum has no entry for " + format_pair(pair));
  }
  return sets_[static_cast<std::size_t>(it - pairs_->begin())];
}

void InitialDatum::set(std::size_t pair_index, Subset set) {
  const auto& pair = pairs_->at(pair_index);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!is_subset_of(set, set_minus(pair.X, pair.Y))) {
    throw Error("initial datum entry " + format_subset(set) + " is not inside X\\Y at " +
                format_pair(pair));
  }
  sets_[pair_index] = std::move(set);
}

bool InitialDatum::is_contained_in(const InitialDatum& other) const {
  if (sets_.size() != other.sets_.size()) {
    throw Error("initial data over different exchange pairs");
  }
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (!is_subset_of(sets_[k], other.sets_[k])) return false;
  }
  return true;
}

std::string format_form(const LinearSystem& system, const LinearForm& form) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : form) {
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    long a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "phi" << format_subset(system.variables.at(v));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

InitialDatum initial_datum(const TropicalVector& phi) {
  if (phi.is_zero()) throw Error("tropical vector is identically inf");
  InitialDatum out(phi.ground(), phi.rank());
  for (std::size_t k = 0; k < out.size(); ++k) {
    Subset best = argmin(exchange_terms(phi, out.pairs()[k]));
    if (!best.empty()) out.set(k, std::move(best));
  }
  return out;
}

std::optional<ExchangePair> find_tropical_violation(const TropicalVector& phi) {
  if (phi.is_zero()) throw Error("tropical vector is identically inf");
  // Pairs outside the relevant list have only ∞ terms.
  for (const auto& pair : relevant_exchange_pairs(phi.support(), phi.rank())) {
    if (argmin(exchange_terms(phi, pair)).size() == 1) return pair;
  }
  return std::nullopt;
}

bool is_tropical_plucker(const TropicalVector& phi) { return !find_tropical_violation(phi); }

Matroid underlying_matroid(const TropicalVector& phi) {
  auto support = phi.support();
  return Matroid(MatroidCandidate{phi.ground(), phi.rank(), {support.begin(), support.end()}});
}

TropicalVector translate(const TropicalVector& phi, const LogRational& lambda) {
  TropicalVector out(phi.ground(), phi.rank());
  for (const auto& [b, v] : phi.entries()) out.set(b, TropicalValue(v.finite() + lambda));
  return out;
}

TropicalVector normalize(const TropicalVector& phi) {
  if (phi.is_zero()) throw Error("tropical vector is identically inf");
  const TropicalValue* low = nullptr;
  for (const auto& [b, v] : phi.entries()) {
    if (!low || v < *low) low = &v;
  }
  return translate(phi, -low->finite());
}

LinearSystem cell_system(const DressianCellId& cell) {
  check_cell_shapes(cell);
  Constraints c;
  for (std::size_t k = 0; k < cell.datum.size(); ++k) {
    add_pair_constraints(cell.matroid.bases(), cell.datum.pairs()[k], cell.datum.at(k), c);
  }
  return make_system(cell.matroid.bases(), c);
}

bool satisfies(const LinearSystem& system, const TropicalVector& phi) {
  std::vector<LogRational> x;
  x.reserve(system.variables.size());
  for (const auto& b : system.variables) {
    TropicalValue v = phi[b];
    if (v.is_infinite()) return false;
    x.push_back(v.finite());
  }
  auto eval = [&](const LinearForm& form) {
    LogRational acc;
    for (const auto& [v, c] : form) acc += c * x.at(v);
    return acc;
  };
  for (const auto& f : system.equalities) {
    if (!(eval(f) == LogRational())) return false;
  }
  for (const auto& f : system.strict) {
    if (!(eval(f) > LogRational())) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> lp_feasible_interior(const LinearSystem& system) {
  const std::size_t n = system.variables.size();
  const std::size_t width = n + 1;  // slack s is the last variable
  lp::Problem prob;
  prob.num_variables = width;
  prob.objective.assign(width, 0);
  prob.objective[n] = 1;
  for (const auto& f : system.equalities) prob.rows.push_back(make_row(width, f, 0, lp::Relation::Equal));
  for (const auto& f : system.strict) {
    lp::Row row = make_row(width, f, 0, lp::Relation::GreaterEqual);
    row.coefficients[n] = -1;
    prob.rows.push_back(std::move(row));
  }
  lp::Row cap{std::vector<Rational>(width), lp::Relation::LessEqual, 1};
  cap.coefficients[n] = 1;
  prob.rows.push_back(std::move(cap));
  if (system.all_ones_lineality && n > 0) {
    prob.rows.push_back(make_row(width, LinearForm{{0, 1}}, 0, lp::Relation::Equal));
  }
  lp::Result res = lp::solve(prob);
  if (res.status == lp::Status::Unbounded) {
    throw Error("cell LP unbounded despite the slack cap (solver inconsistency)");
  }
  if (res.status == lp::Status::Infeasible || res.value <= 0) return std::nullopt;
  res.x.pop_back();
  return res.x;
}

TropicalVector point_to_vector(const GroundSet& ground, int rank, const std::vector<Subset>& variables,
                               const std::vector<Rational>& point) {
  if (variables.size() != point.size()) throw Error("point does not match the variables");
  TropicalVector out(ground, rank);
  for (std::size_t k = 0; k < variables.size(); ++k) out.set(variables[k], TropicalValue(point[k]));
  return out;
}

DressianCellId cell_of(const TropicalVector& phi) {
  if (auto bad = find_tropical_violation(phi)) {
    throw Error("not a tropical Plucker vector: initial datum cardinality < 2 at " + format_pair(*bad));
  }
  return {underlying_matroid(phi), initial_datum(phi)};
}

std::vector<DressianCellId> closure_candidates(const DressianCellId& cell,
                                               const std::vector<DressianCellId>& universe) {
  std::vector<DressianCellId> out;
  for (const auto& other : universe) {
    if (other == cell) continue;
    if (specializes(cell.matroid, other.matroid) && cell.datum.is_contained_in(other.datum)) {
      out.push_back(other);
    }
  }
  return out;
}

std::vector<CertifiedCell> dressian_cells_of(const Matroid& matroid) {
  const InitialDatum full(matroid.ground(), matroid.rank());
  const std::size_t npairs = full.size();

  // Per pair, the indices with a finite term; the admissible choices are its
  // subsets of size >= 2 (or the full set when every term is ∞).
  std::vector<std::vector<Subset>> choices(npairs);
  for (std::size_t k = 0; k < npairs; ++k) {
    const auto& pair = full.pairs()[k];
    Subset finite;
    for (Element i : full.at(k)) {
      if (matroid.is_basis(without_element(pair.X, i)) && matroid.is_basis(with_element(pair.Y, i))) {
        finite.push_back(i);
      }
    }
    if (finite.empty()) {
      choices[k].push_back(full.at(k));
      continue;
    }
    const std::size_t f = finite.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f); ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      Subset s;
      for (std::size_t b = 0; b < f; ++b) {
        if ((mask >> b) & 1U) s.push_back(finite[b]);
      }
      choices[k].push_back(std::move(s));
    }
  }
  // Forced pairs first so the search branches as late as possible.
  std::vector<std::size_t> order(npairs);
  for (std::size_t k = 0; k < npairs; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return choices[a].size() < choices[b].size(); });

  std::vector<std::vector<Constraints>> systems(npairs);
  for (std::size_t k = 0; k < npairs; ++k) {
    for (const auto& c : choices[k]) {
      add_pair_constraints(matroid.bases(), full.pairs()[k], c, systems[k].emplace_back());
    }
  }

  // The partial system of the first `depth` pairs in search order.
  std::vector<CertifiedCell> out;
  InitialDatum datum = full;
  std::vector<std::size_t> pick(npairs, 0);
  auto combined = [&](std::size_t depth) {
    Constraints all;
    for (std::size_t t = 0; t < depth; ++t) {
      const auto& s = systems[order[t]][pick[order[t]]];
      all.equalities.insert(s.equalities.begin(), s.equalities.end());
      all.strict.insert(s.strict.begin(), s.strict.end());
    }
    return make_system(matroid.bases(), all);
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth > 0 && choices[order[depth - 1]].size() > 1) {
      if (!lp_feasible_interior(combined(depth))) return;
    }
    if (depth == npairs) {
      auto point = lp_feasible_interior(combined(depth));
      if (!point) return;
      for (std::size_t k = 0; k < npairs; ++k) datum.set(k, choices[k][pick[k]]);
      CertifiedCell cell{{matroid, datum},
                         point_to_vector(matroid.ground(), matroid.rank(), matroid.bases(), *point)};
      DressianCellId back = cell_of(cell.witness);
      if (!(back == cell.id)) throw Error("cell witness does not round-trip (internal error)");
      out.push_back(std::move(cell));
      return;
    }
    const std::size_t k = order[depth];
    for (std::size_t c = 0; c < choices[k].size(); ++c) {
      pick[k] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end(),
            [](const CertifiedCell& a, const CertifiedCell& b) { return a.id.datum < b.id.datum; });
  return out;
}

std::vector<CertifiedCell> enumerate_dressian_cells(int d, int n, std::uint64_t max_bases) {
  std::vector<CertifiedCell> out;
  for (const auto& m : enumerate_matroids(d, n, max_bases)) {
    auto cells = dressian_cells_of(m);
    std::move(cells.begin(), cells.end(), std::back_inserter(out));
  }
  return out;
}

bool closure_perturbation_feasible(const DressianCellId& outer, const CertifiedCell& inner) {
  const Matroid& p = outer.matroid;
  const Matroid& q = inner.id.matroid;
  if (!specializes(p, q)) return false;  // a basis of p' outside supp(p) stays ∞ in the limit
  LinearSystem sys = cell_system(outer);
  const std::size_t n = sys.variables.size();
  const std::size_t width = 2 * n;  // z then r
  lp::Problem prob;
  prob.num_variables = width;
  prob.objective.assign(width, 0);
  for (const auto& f : sys.equalities) {
    prob.rows.push_back(make_row(width, f, 0, lp::Relation::Equal));
    prob.rows.push_back(make_row(width, f, n, lp::Relation::Equal));
  }
  for (const auto& f : sys.strict) {
    prob.rows.push_back(make_row(width, f, 0, lp::Relation::GreaterEqual));
    prob.rows.push_back(make_row(width, f, n, lp::Relation::GreaterEqual));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Subset& b = sys.variables[v];
    if (q.is_basis(b)) {
      const LogRational w = inner.witness[b].finite();
      if (!w.is_rational()) throw Error("closure check needs a rational witness");
      prob.rows.push_back(make_row(width, LinearForm{{v, 1}}, 0, lp::Relation::Equal, w.rational_part()));
      prob.rows.push_back(make_row(width, LinearForm{{v, 1}}, n, lp::Relation::Equal));
    } else {
      prob.rows.push_back(make_row(width, LinearForm{{v, 1}}, n, lp::Relation::GreaterEqual, 1));
    }
  }
  return lp::solve(prob).status != lp::Status::Infeasible;
}

ClosureReport check_closure_relation(const std::vector<CertifiedCell>& cells) {
  ClosureReport report;
  std::vector<DressianCellId> universe;
  universe.reserve(cells.size());
  for (const auto& c : cells) universe.push_back(c.id);
  for (std::size_t a = 0; a < cells.size(); ++a) {
    auto candidates = closure_candidates(cells[a].id, universe);
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a == b) continue;
      ++report.pairs_checked;
      bool expected = std::find(candidates.begin(), candidates.end(), cells[b].id) != candidates.end();
      bool actual = closure_perturbation_feasible(cells[a].id, cells[b]);
      if (actual) ++report.containments;
      if (expected != actual) {
        report.violations.push_back("cell " + std::to_string(b) + (actual ? " lies" : " does not lie") +
                                    " in the closure of cell " + std::to_string(a) +
                                    (expected ? " but is a closure candidate" : " but is not a closure candidate"));
      }
    }
  }
  return report;
}

}  // namespace mgl
