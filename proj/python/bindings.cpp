#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgl/json_io.hpp"

namespace py = pybind11;
using mgl::io::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

// (ok, message); message is empty when ok.
std::pair<bool, std::string> validate(const std::string& kind, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw mgl::io::InputError(std::string("malformed JSON: ") + e.what());
  }
  auto where = [](const std::optional<mgl::ExchangePair>& p) {
    return "(X,Y)=(" + mgl::format_subset(p->X) + "," + mgl::format_subset(p->Y) + ")";
  };
  if (kind == "matroid") {
    auto c = mgl::io::matroid_from_json(j);
    if (c.support.empty()) return {false, "the zero vector is not a matroid"};
    auto v = mgl::find_exchange_violation(c);
    if (v) return {false, "basis exchange fails at " + where(v->pair) + ", i=" + std::to_string(v->i)};
    return {true, ""};
  }
  if (kind == "tropical") {
    auto phi = mgl::io::tropical_from_json(j);
    if (phi.is_zero()) return {false, "the vector is identically inf"};
    auto v = mgl::find_tropical_violation(phi);
    return v ? std::pair{false, "initial datum cardinality < 2 at " + where(v)} : std::pair{true, std::string()};
  }
  if (kind == "chirotope") {
    auto chi = mgl::io::chirotope_from_json(j);
    if (chi.is_zero()) return {false, "the sign map is identically zero"};
    auto v = mgl::find_chirotope_violation(chi);
    return v ? std::pair{false, "three-term values are one-signed at " + where(v)} : std::pair{true, std::string()};
  }
  if (kind == "orval") {
    auto Phi = mgl::io::orval_from_json(j);
    if (Phi.is_zero()) return {false, "the vector is identically zero"};
    auto v = mgl::find_oriented_violation(Phi);
    return v ? std::pair{false, "maximum modulus has one sign only at " + where(v)} : std::pair{true, std::string()};
  }
  throw mgl::io::InputError("unknown kind \"" + kind + "\"");
}

std::string macp(int d, int n) {
  auto P = mgl::enumerate_oriented_matroids(d, n);
  return dump(mgl::io::macp_to_json(P, d, static_cast<std::size_t>(n)));
}

std::vector<std::uint64_t> macp_f_vector(int d, int n) {
  return mgl::f_vector(mgl::order_complex(mgl::poset_of(mgl::enumerate_oriented_matroids(d, n))));
}

std::vector<std::uint64_t> order_complex_f_vector(const std::vector<std::vector<bool>>& leq) {
  return mgl::f_vector(mgl::order_complex(mgl::FinitePoset(leq)));
}

std::string dressian_cells(int d, int n) {
  json out = json::array();
  for (const auto& c : mgl::enumerate_dressian_cells(d, n)) out.push_back(mgl::io::cell_to_json(c));
  return dump(out);
}

std::string direct_sum(const std::string& a, const std::string& b) {
  return dump(mgl::io::orval_to_json(
      mgl::direct_sum(mgl::io::orval_from_json(json::parse(a)), mgl::io::orval_from_json(json::parse(b)))));
}

std::string slide(const std::string& phi, const std::string& family, const std::vector<std::string>& t) {
  std::vector<mgl::Rational> weights;
  for (const auto& w : t) weights.push_back(mgl::parse_rational(w));
  return dump(mgl::io::orval_to_json(mgl::slide(mgl::io::orval_from_json(json::parse(phi)),
                                                mgl::io::family_from_json(json::parse(family)), weights)));
}

py::dict fiber_report(int d, int n) {
  auto macp = mgl::enumerate_oriented_matroids(d, n);
  auto r = mgl::check_fiber_finality(mgl::oriented_cell_poset(macp), macp);
  py::dict out;
  out["fibers_checked"] = r.fibers_checked;
  out["objects_checked"] = r.objects_checked;
  out["violations"] = r.violations;
  out["final_object_not_I"] = r.final_object_not_I.size();
  out["final_object_not_restriction"] = r.final_object_not_restriction.size();
  return out;
}

py::dict operad_laws(std::uint64_t seed, std::size_t max_set_size, std::size_t max_window,
                     std::size_t trials) {
  mgl::LawPlan plan;
  plan.seed = seed;
  plan.max_set_size = max_set_size;
  plan.max_window = max_window;
  plan.random_trials = trials;
  auto r = mgl::check_operad_laws(plan);
  py::dict out;
  out["unit_checks"] = r.unit_checks;
  out["associativity_checks"] = r.associativity_checks;
  out["equivariance_checks"] = r.equivariance_checks;
  out["configurations"] = r.configurations;
  out["window_skipped"] = r.window_skipped;
  out["failures"] = r.failures;
  return out;
}

py::dict action_compatibility(std::uint64_t seed, std::size_t trials) {
  mgl::ActionPlan plan;
  plan.seed = seed;
  plan.trials = trials;
  auto r = mgl::check_action_compatibility(plan);
  py::dict out;
  out["trials"] = r.trials;
  out["coordinates_compared"] = r.coordinates_compared;
  out["outputs_validated"] = r.outputs_validated;
  out["failures"] = r.failures;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact matroid, oriented matroid and valuated matroid computations";

  auto error = py::register_exception<mgl::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<mgl::GuardError>(m, "GuardError", error.ptr());
  py::register_exception<mgl::io::InputError>(m, "InputError", error.ptr());

  m.def("validate", &validate, py::arg("kind"), py::arg("text"),
        "Check a JSON object of the given kind; returns (ok, message).");
  m.def("macp", &macp, py::arg("d"), py::arg("n"), "Oriented matroids with their order, as JSON.");
  m.def("macp_f_vector", &macp_f_vector, py::arg("d"), py::arg("n"));
  m.def("order_complex_f_vector", &order_complex_f_vector, py::arg("leq"));
  m.def("euler_characteristic",
        py::overload_cast<const std::vector<std::uint64_t>&>(&mgl::euler_characteristic), py::arg("f"));
  m.def("dressian_cells", &dressian_cells, py::arg("d"), py::arg("n"));
  m.def("direct_sum", &direct_sum, py::arg("a"), py::arg("b"));
  m.def("slide", &slide, py::arg("phi"), py::arg("family"), py::arg("t"));
  m.def("fiber_report", &fiber_report, py::arg("d"), py::arg("n"));
  m.def("check_operad_laws", &operad_laws, py::arg("seed"), py::arg("max_set_size") = 3,
        py::arg("max_window") = 20, py::arg("trials") = 0);
  m.def("check_action_compatibility", &action_compatibility, py::arg("seed"), py::arg("trials") = 60);
}
