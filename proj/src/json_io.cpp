#include "mgl/json_io.hpp"

#include <fstream>
#include <iostream>

namespace mgl::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

Subset subset_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an integer array, got " + j.dump());
  Subset s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an integer array, got " + j.dump());
    s.push_back(x.get<Element>());
  }
  return s;
}

// A basis given in any order, sorted with the sign of the sorting permutation.
std::pair<Subset, int> basis_from_json(const json& j) {
  Subset s = subset_from_json(j);
  int sign = sort_with_sign(s);
  if (sign == 0) throw InputError("basis " + j.dump() + " repeats an element");
  return {s, sign};
}

template <class V, class Parse>
PluckerMap<V> read_plucker(const json& j, const char* aligned_key, Parse parse) {
  PluckerMap<V> out(ground_from_json(j), rank_from_json(j));
  if (j.contains(aligned_key)) {
    const json& values = j.at(aligned_key);
    auto bases = enumerate_subsets(out.ground(), out.rank());
    if (!values.is_array() || values.size() != bases.size()) {
      throw InputError(std::string("\"") + aligned_key + "\" must list " +
                       std::to_string(bases.size()) + " values in lexicographic basis order");
    }
    for (std::size_t k = 0; k < bases.size(); ++k) out.set(bases[k], parse(values[k]));
  } else if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      auto [basis, sign] = basis_from_json(require(e, "basis"));
      V v = parse(e);
      out.set(basis, sign > 0 ? v : PluckerTraits<V>::negate(v));
    }
  } else {
    throw InputError(std::string("expected \"") + aligned_key + "\" or \"entries\"");
  }
  return out;
}

json header(const GroundSet& ground, int d) {
  json j = json::object();
  j["d"] = d;
  put_ground(j, ground);
  return j;
}

int sign_from_json(const json& j) {
  if (!j.is_number_integer()) throw InputError("a sign must be -1, 0 or 1, got " + j.dump());
  int s = j.get<int>();
  if (s < -1 || s > 1) throw InputError("a sign must be -1, 0 or 1, got " + j.dump());
  return s;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

GroundSet ground_from_json(const json& j) {
  try {
    if (j.contains("n")) return GroundSet(j.at("n").get<std::size_t>());
    if (j.contains("labels")) {
      auto labels = j.at("labels").get<std::vector<std::string>>();
      return GroundSet(labels.size()).with_labels(std::move(labels));
    }
    if (j.contains("elements")) return GroundSet::from_elements(subset_from_json(j.at("elements")));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad ground set: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("bad ground set: ") + e.what());
  }
  throw InputError("ground set needs \"n\", \"labels\" or \"elements\"");
}

void put_ground(json& j, const GroundSet& ground) {
  if (!ground.labels().empty()) {
    j["labels"] = ground.labels();
  } else if (ground.is_canonical()) {
    j["n"] = ground.size();
  } else {
    j["elements"] = ground.elements();
  }
}

int rank_from_json(const json& j) {
  const json& d = require(j, "d");
  if (!d.is_number_integer() || d.get<long>() < 0) throw InputError("\"d\" must be a nonnegative integer");
  return d.get<int>();
}

TropicalValue tropical_value_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return TropicalValue::infinity();
    auto cut = s.rfind("-log2(");
    if (cut != std::string::npos && s.back() == ')') {
      try {
        Rational v = cut == 0 ? Rational(0) : parse_rational(s.substr(0, cut));
        Rational c = parse_rational(s.substr(cut + 6, s.size() - cut - 7));
        return TropicalValue(LogRational::from_parts(v, c));
      } catch (const Error& e) {
        throw InputError("bad tropical value \"" + s + "\": " + e.what());
      }
    }
  }
  return TropicalValue(rational_from_json(j));
}

json tropical_value_to_json(const TropicalValue& v) { return v.str(); }

MatroidCandidate matroid_from_json(const json& j) {
  MatroidCandidate c{ground_from_json(j), rank_from_json(j), {}};
  for (const auto& b : require(j, "support")) {
    auto [basis, sign] = basis_from_json(b);
    if (basis.size() != static_cast<std::size_t>(c.rank) || !c.ground.contains(basis)) {
      throw InputError("support entry " + b.dump() + " is not a d-subset of the ground set");
    }
    c.support.insert(basis);
  }
  return c;
}

json matroid_to_json(const Matroid& m) {
  json j = header(m.ground(), m.rank());
  j["support"] = m.bases();
  return j;
}

TropicalVector tropical_from_json(const json& j) {
  return read_plucker<TropicalValue>(j, "values", [](const json& v) {
    return tropical_value_from_json(v.is_object() ? require(v, "val") : v);
  });
}

json tropical_to_json(const TropicalVector& phi) {
  json j = header(phi.ground(), phi.rank());
  json values = json::array();
  for (const auto& b : enumerate_subsets(phi.ground(), phi.rank())) {
    values.push_back(tropical_value_to_json(phi[b]));
  }
  j["values"] = std::move(values);
  return j;
}

SignMap chirotope_from_json(const json& j) {
  return read_plucker<int>(j, "signs", [](const json& v) {
    return sign_from_json(v.is_object() ? require(v, "sign") : v);
  });
}

json chirotope_to_json(const SignMap& chi) {
  json j = header(chi.ground(), chi.rank());
  j["signs"] = aligned_signs(chi);
  return j;
}

SignedTropical orval_coordinate_from_json(const json& j) {
  if (j.is_number_integer() && j.get<long>() == 0) return {};
  if (!j.is_object()) throw InputError("a coordinate is {\"sign\", \"val\"} or {\"q\"}, got " + j.dump());
  if (j.contains("q")) {
    Rational q = rational_from_json(j.at("q"));
    if (j.contains("sign") && sign_from_json(j.at("sign")) != sgn(q)) {
      throw InputError("coordinate " + j.dump() + " has a sign that disagrees with q");
    }
    return q == 0 ? SignedTropical{} : SignedTropical::from_rational(q);
  }
  int sign = sign_from_json(require(j, "sign"));
  if (sign == 0) return {};
  TropicalValue val = tropical_value_from_json(require(j, "val"));
  if (val.is_infinite()) throw InputError("a nonzero sign needs a finite valuation");
  return SignedTropical(sign, val);
}

OrientedTropicalVector orval_from_json(const json& j) {
  return read_plucker<SignedTropical>(j, "values", orval_coordinate_from_json);
}

json orval_to_json(const OrientedTropicalVector& Phi) {
  json j = header(Phi.ground(), Phi.rank());
  json entries = json::array();
  for (const auto& [b, v] : Phi.entries()) {
    entries.push_back({{"basis", b}, {"sign", v.sign()}, {"val", tropical_value_to_json(v.val())}});
  }
  j["entries"] = std::move(entries);
  return j;
}

json initial_datum_to_json(const InitialDatum& I) {
  json out = json::array();
  for (std::size_t k = 0; k < I.size(); ++k) {
    out.push_back({{"X", I.pairs()[k].X}, {"Y", I.pairs()[k].Y}, {"I", I.at(k)}});
  }
  return out;
}

json cell_to_json(const CertifiedCell& cell) {
  return {{"matroid", matroid_to_json(cell.id.matroid)},
          {"initial_datum", initial_datum_to_json(cell.id.datum)},
          {"witness", tropical_to_json(cell.witness)}};
}

json oriented_cell_to_json(const OrientedCellId& cell) {
  return {{"oriented_matroid", chirotope_to_json(cell.om.representative())},
          {"initial_datum", initial_datum_to_json(cell.datum)}};
}

FinitePoset poset_from_json(const json& j) {
  std::size_t n = 0;
  try {
    n = require(j, "size").get<std::size_t>();
  } catch (const json::exception&) {
    throw InputError("\"size\" must be a nonnegative integer");
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& rel : require(j, "leq")) {
    Subset p = subset_from_json(rel);
    if (p.size() != 2 || p[0] < 0 || p[1] < 0 || static_cast<std::size_t>(p[0]) >= n ||
        static_cast<std::size_t>(p[1]) >= n) {
      throw InputError("relation " + rel.dump() + " is not a pair of element indices");
    }
    leq[p[0]][p[1]] = true;
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FinitePoset(std::move(leq), std::move(labels));
}

json poset_to_json(const FinitePoset& P) {
  json rel = json::array();
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (P.less(i, j)) rel.push_back({i, j});
    }
  }
  json out = {{"size", P.size()}, {"leq", std::move(rel)}};
  if (!P.labels().empty()) out["labels"] = P.labels();
  return out;
}

json macp_to_json(const MacPPoset& macp, int d, std::size_t n) {
  json out = poset_to_json(FinitePoset(macp.leq));
  out["d"] = d;
  out["n"] = n;
  json elements = json::array();
  for (const auto& om : macp.elements) elements.push_back(aligned_signs(om.representative()));
  out["elements"] = std::move(elements);
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> faces;
  try {
    n = require(j, "num_vertices").get<std::size_t>();
    const char* key = j.contains("facets") ? "facets" : "faces";
    faces = require(j, key).get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad complex: ") + e.what());
  }
  return j.contains("facets") ? SimplicialComplex::from_facets(n, faces)
                              : SimplicialComplex::from_faces(n, std::move(faces));
}

json complex_to_json(const SimplicialComplex& K) {
  auto f = f_vector(K);
  return {{"num_vertices", K.num_vertices()},
          {"facets", K.facets()},
          {"f_vector", f},
          {"euler_characteristic", euler_characteristic(f)}};
}

std::vector<Injection> family_from_json(const json& j) {
  if (!j.is_array()) throw InputError("an injection family is an array of {\"map\": {...}}");
  std::vector<Injection> out;
  for (const auto& item : j) {
    Injection alpha;
    for (const auto& [k, v] : require(item, "map").items()) {
      try {
        alpha[std::stoll(k)] = v.get<Element>();
      } catch (const std::exception&) {
        throw InputError("map entries must be \"element\": integer, got \"" + k + "\": " + v.dump());
      }
    }
    out.push_back(std::move(alpha));
  }
  return out;
}

OperadPoint operad_point_from_json(const json& j) {
  if (j.value("unit", false)) return OperadPoint::unit();
  std::size_t arity = 0;
  std::size_t window = 0;
  try {
    arity = require(j, "arity").get<std::size_t>();
    window = require(j, "window").get<std::size_t>();
  } catch (const json::exception&) {
    throw InputError("\"arity\" and \"window\" must be nonnegative integers");
  }
  std::vector<WeightedVertex> terms;
  for (const auto& t : require(j, "terms")) {
    Rational w = rational_from_json(require(t, "weight"));
    const json& rows = require(t, "vertex");
    if (!rows.is_array() || rows.size() != arity) {
      throw InputError("a vertex lists one image row per element of A");
    }
    std::vector<Element> images;
    for (const auto& row : rows) {
      Subset r = subset_from_json(row);
      if (r.size() != window) throw InputError("each image row must have window many entries");
      images.insert(images.end(), r.begin(), r.end());
    }
    terms.emplace_back(w, InjectionVertex::make(arity, window, std::move(images)));
  }
  const bool relaxed = j.value("consistent", false);
  return OperadPoint::combination(std::move(terms), relaxed ? OperadPoint::Check::Consistent
                                                            : OperadPoint::Check::Simplex);
}

json operad_point_to_json(const OperadPoint& p) {
  if (p.is_unit()) return {{"unit", true}};
  json terms = json::array();
  for (const auto& [w, v] : p.terms()) {
    json rows = json::array();
    for (std::size_t a = 0; a < v.arity; ++a) {
      rows.push_back(std::vector<Element>(v.images.begin() + a * v.window,
                                          v.images.begin() + (a + 1) * v.window));
    }
    terms.push_back({{"weight", w.get_str()}, {"vertex", std::move(rows)}});
  }
  json out = {{"arity", p.arity()}, {"window", p.window()}, {"terms", std::move(terms)}};
  try {
    OperadPoint::combination(p.terms(), OperadPoint::Check::Simplex);
  } catch (const Error&) {
    out["consistent"] = true;
  }
  return out;
}

}  // namespace mgl::io
