// Thin pybind11 layer. Structured results cross as JSON strings which the
// python package decodes, so the exact-arithmetic types never need their own
// python bindings; rationals travel as "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newred/claims.hpp"
#include "newred/factor.hpp"
#include "newred/families.hpp"
#include "newred/ffexplore.hpp"
#include "newred/jsonio.hpp"
#include "newred/parse.hpp"
#include "newred/search.hpp"

namespace py = pybind11;
using namespace newred;
using nlohmann::json;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& params) {
  std::vector<Rational> out;
  out.reserve(params.size());
  for (const auto& p : params) out.emplace_back(p);
  return out;
}

std::string iterate_str(const std::string& poly, int n) {
  return poly_str(iterate(parse_poly<QQ>(poly, QQ::ctx()), n));
}

std::string factor_json(const std::string& poly) {
  return factorization_json(factor_over_q(parse_poly<QQ>(poly, QQ::ctx()))).dump();
}

std::string check_json(const std::string& poly, int n, bool use_fast_paths) {
  auto f = parse_poly<QQ>(poly, QQ::ctx());
  auto w = newly_reducible(f, n, use_fast_paths);
  if (!w) return json{{"newly_reducible", false}, {"n", n}}.dump();
  return json{{"newly_reducible", true}, {"witness", witness_json(*w)}}.dump();
}

std::string family_json(const std::string& name, const std::vector<std::string>& params) {
  return family_member_json(family_by_name(name, to_rationals(params))).dump();
}

std::vector<std::string> genbigd_params(long d, const std::string& p, long count) {
  auto stream = genbigd_k_stream(d, Integer(p));
  std::vector<std::string> out;
  for (long i = 0; i < count; ++i) out.push_back(stream.next().str());
  return out;
}

std::string box_search_jsonl(const std::string& a_min, const std::string& a_max,
                             const std::string& b_min, const std::string& b_max, int n,
                             unsigned workers, bool use_fast_paths) {
  SearchBox box{Integer(a_min), Integer(a_max), Integer(b_min), Integer(b_max), n};
  SearchOptions opts;
  opts.workers = workers;
  opts.use_fast_paths = use_fast_paths;
  return hits_jsonl(box_search(box, opts));
}

std::string surface_search_jsonl(long height) { return hits_jsonl(surface_search(height)); }

std::string classify_json(std::uint64_t q, int d, int n) {
  auto rep = classify_membership(q, d, n);
  json ws = json::array();
  for (const auto& f : rep.witnesses) ws.push_back(poly_json(f));
  return json{{"q", rep.q},           {"d", rep.d},         {"n", rep.n},
              {"member", rep.member}, {"scanned", rep.scanned}, {"witnesses", ws}}
      .dump();
}

std::string ahmadi_json(std::uint64_t q, bool monic_only) {
  auto rep = verify_ahmadi(q, monic_only);
  json ex = json::array();
  for (const auto& f : rep.exceptions) ex.push_back(poly_json(f));
  return json{{"q", rep.q},
              {"monic_only", rep.monic_only},
              {"verified", rep.verified},
              {"checked", rep.checked},
              {"exceptions", ex}}
      .dump();
}

std::string claims_json(bool quick) {
  json arr = json::array();
  for (const auto& r : run_claims(quick))
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds},
                   {"detail", r.detail}});
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact search and certification of polynomials with newly reducible iterates";
  m.def("iterate_str", &iterate_str, py::arg("poly"), py::arg("n"),
        "n-fold self-composition over Q, returned as text");
  m.def("factor_json", &factor_json, py::arg("poly"),
        "complete factorization over Q as a JSON string");
  m.def("check_json", &check_json, py::arg("poly"), py::arg("n"),
        py::arg("use_fast_paths") = true,
        "newly-reducible decision with witness, as a JSON string");
  m.def("family_json", &family_json, py::arg("name"), py::arg("params"),
        "construct a certified family member, as a JSON string");
  m.def("genbigd_params", &genbigd_params, py::arg("d"), py::arg("p"), py::arg("count"),
        "deterministic k parameters for the high-degree family");
  m.def("box_search_jsonl", &box_search_jsonl, py::arg("a_min"), py::arg("a_max"),
        py::arg("b_min"), py::arg("b_max"), py::arg("n") = 3, py::arg("workers") = 1,
        py::arg("use_fast_paths") = true, py::call_guard<py::gil_scoped_release>(),
        "scan an integer (a, b) box; one JSON hit per line");
  m.def("surface_search_jsonl", &surface_search_jsonl, py::arg("height"),
        py::call_guard<py::gil_scoped_release>(),
        "walk rational surface points up to a height; one JSON hit per line");
  m.def("classify_membership_json", &classify_json, py::arg("q"), py::arg("d") = 2,
        py::arg("n") = 2, py::call_guard<py::gil_scoped_release>(),
        "exhaustive finite-field membership scan, as a JSON string");
  m.def("verify_ahmadi_json", &ahmadi_json, py::arg("q"), py::arg("monic_only") = false,
        py::call_guard<py::gil_scoped_release>(),
        "check every quadratic over F_2^k has reducible third iterate");
  m.def("run_claims_json", &claims_json, py::arg("quick") = false,
        py::call_guard<py::gil_scoped_release>(),
        "replay the bundled claim suite, results as a JSON string");
}
