#include <pybind11/pybind11.h>

#include "sv/expr.hpp"
#include "sv/json_io.hpp"
#include "sv/verify.hpp"

namespace py = pybind11;

namespace {

sv::ModuleSpec spec_of(const std::string& spec_json) {
  return sv::spec_from_json(sv::json::parse(spec_json));
}

sv::ModuleVector vec_of(const std::string& v) {
  if (v == "w" || v == "wbar") return sv::cyclic_vector();
  return sv::vector_from_json(sv::json::parse(v));
}

sv::Truncation trunc_of(const std::string& deg, long l0, long m0) {
  sv::Truncation t;
  t.D = sv::parse_halfint(deg);
  t.D0 = sv::Int(l0);
  t.K = sv::Int(m0);
  return t;
}

sv::Generator gen_of(const std::string& s) {
  auto g = sv::parse_generator(s);
  if (!g) throw std::invalid_argument("bad generator: " + s);
  return *g;
}

constexpr const char* kUniversal = R"({"type":"universal"})";

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact symbolic engine for the Schroedinger-Virasoro algebra";

  m.def(
      "normal_form", [](const std::string& e) { return sv::render(sv::parse_expression(e)); },
      py::arg("expr"), "PBW normal form of an expression, rendered as text");
  m.def(
      "normal_form_json",
      [](const std::string& e) { return sv::to_json(sv::parse_expression(e)).dump(); },
      py::arg("expr"), "PBW normal form as a JSON term list");
  m.def(
      "bracket",
      [](const std::string& a, const std::string& b) {
        return sv::render(sv::bracket(sv::parse_lie_expression(a), sv::parse_lie_expression(b)));
      },
      py::arg("a"), py::arg("b"), "Lie bracket of two linear combinations of generators");

  m.def(
      "act",
      [](const std::string& expr, const std::string& on, const std::string& spec) {
        return sv::to_json(sv::act(sv::parse_expression(expr), vec_of(on), spec_of(spec))).dump();
      },
      py::arg("expr"), py::arg("on") = "w", py::arg("spec") = kUniversal,
      "apply an enveloping-algebra element; returns the vector as JSON");
  m.def(
      "dot_act",
      [](const std::string& gen, const std::string& on, const std::string& spec) {
        return sv::to_json(sv::dot_act(gen_of(gen), vec_of(on), spec_of(spec))).dump();
      },
      py::arg("gen"), py::arg("on") = "w", py::arg("spec") = kUniversal,
      "apply x - psi(x) for a positive generator x");

  m.def(
      "whittaker_vectors",
      [](const std::string& spec, const std::string& deg, long l0, long m0) {
        return sv::to_json(sv::whittaker_vectors(spec_of(spec), trunc_of(deg, l0, m0))).dump();
      },
      py::arg("spec") = kUniversal, py::arg("deg") = "3", py::arg("l0") = 3, py::arg("m0") = 3,
      "eigenvector solve inside the window; returns a report as JSON");
  m.def(
      "singular_vectors",
      [](const std::string& spec, const std::string& deg, long l0, long m0) {
        return sv::to_json(sv::singular_vectors(spec_of(spec), trunc_of(deg, l0, m0))).dump();
      },
      py::arg("spec"), py::arg("deg") = "3", py::arg("l0") = 3, py::arg("m0") = 3,
      "annihilation solve inside the window; returns a report as JSON");

  m.def(
      "nilpotency_index",
      [](const std::string& gen, const std::string& on, const std::string& spec,
         long bound) -> py::object {
        auto idx = sv::nilpotency_index(gen_of(gen), vec_of(on), spec_of(spec), sv::Int(bound));
        if (!idx) return py::none();
        return py::int_(idx->get_si());
      },
      py::arg("gen"), py::arg("on") = "w", py::arg("spec") = kUniversal, py::arg("bound") = 12,
      "least m with dot^m v = 0, or None when the bound is exceeded");

  m.def(
      "submodule_closure",
      [](const std::string& gens, const std::string& spec, const std::string& deg, long l0,
         long m0, const std::string& weight_bound) {
        sv::json j = sv::json::parse(gens);
        std::vector<sv::ModuleVector> seeds;
        if (j.is_array() && !j.empty() && j.front().is_object()) {
          seeds.push_back(sv::vector_from_json(j));
        } else {
          for (const auto& el : j) seeds.push_back(sv::vector_from_json(el));
        }
        auto basis = sv::submodule_closure(seeds, spec_of(spec), trunc_of(deg, l0, m0),
                                           sv::parse_halfint(weight_bound));
        sv::json arr = sv::json::array();
        for (const auto& v : basis) arr.push_back(sv::to_json(v));
        return sv::json{{"dimension", basis.size()}, {"basis", arr}}.dump();
      },
      py::arg("gens"), py::arg("spec") = kUniversal, py::arg("deg") = "3", py::arg("l0") = 3,
      py::arg("m0") = 3, py::arg("weight_bound") = "4",
      "window-certified submodule closure; returns {dimension, basis} as JSON");

  m.def(
      "render_vector",
      [](const std::string& v) { return sv::render(vec_of(v)); }, py::arg("vector"),
      "render a JSON module vector as text");

  m.def(
      "verify",
      [](const std::string& deg, long l0, long m0, unsigned long seed, const std::string& only,
         bool corrupt) {
        sv::VerifyOptions opts;
        opts.trunc = trunc_of(deg, l0, m0);
        opts.seed = seed;
        opts.only = only;
        opts.corrupt = corrupt;
        sv::VerifyReport rep = sv::run_verify(opts);
        py::list out;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          d["ms"] = c.ms;
          out.append(d);
        }
        return out;
      },
      py::arg("deg") = "3", py::arg("l0") = 3, py::arg("m0") = 3, py::arg("seed") = 0,
      py::arg("only") = "", py::arg("corrupt") = false,
      "run the exact check battery; returns a list of {name, pass, detail, ms}");
}
