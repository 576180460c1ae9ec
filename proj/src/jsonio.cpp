#include "newred/jsonio.hpp"

#include <stdexcept>

namespace newred {

using nlohmann::json;

json rational_json(const Rational& x) { return json(x.str()); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return Rational(j.get<std::string>());
  throw std::invalid_argument("rational: expected string or integer");
}

json poly_json(const QPoly& f) {
  json a = json::array();
  for (int i = 0; i <= f.degree(); ++i) a.push_back(f.coeff(i).str());
  return a;
}

json poly_json(const FPoly& f) {
  json a = json::array();
  for (int i = 0; i <= f.degree(); ++i) a.push_back(f.coeff(i));
  return a;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected coefficient array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return QPoly(QQ::ctx(), std::move(c));
}

json factorization_json(const Factorization<QQ>& fac) {
  json fs = json::array();
  for (const auto& [g, e] : fac.factors)
    fs.push_back({{"poly", poly_json(g)}, {"mult", e}});
  return {{"unit", fac.unit.str()}, {"factors", fs}};
}

json factorization_json(const Factorization<GF>& fac) {
  json fs = json::array();
  for (const auto& [g, e] : fac.factors)
    fs.push_back({{"poly", poly_json(g)}, {"mult", e}});
  return {{"field", {{"p", fac.field->p()}, {"n", fac.field->n()}}},
          {"unit", fac.unit},
          {"factors", fs}};
}

namespace {

template <class F>
json witness_json_impl(const NewlyReducibleWitness<F>& w) {
  json chain = json::array();
  for (bool b : w.chain) chain.push_back(b);
  return {{"n", w.n}, {"chain", chain}, {"factors", factorization_json(w.factors)}};
}

}  // namespace

json witness_json(const NewlyReducibleWitness<QQ>& w) { return witness_json_impl(w); }
json witness_json(const NewlyReducibleWitness<GF>& w) { return witness_json_impl(w); }

json family_member_json(const FamilyMember& fm) {
  json j;
  j["name"] = fm.name;
  json params = json::array();
  for (const auto& p : fm.params) params.push_back(p.str());
  j["params"] = params;
  j["f"] = poly_json(fm.f);
  j["display"] = poly_str(fm.f);
  j["n"] = fm.n;
  j["gamma"] = fm.gamma.str();
  j["factor_degrees"] = fm.factor_degrees;
  j["degrees_exact"] = fm.degrees_exact;
  if (!fm.predicted_factors.empty()) {
    json pf = json::array();
    for (const auto& g : fm.predicted_factors) pf.push_back(poly_json(g));
    j["predicted_factors"] = pf;
  }
  if (fm.mirror_half) {
    j["mirror_half"] = poly_json(*fm.mirror_half);
    j["mirror_scale"] = fm.mirror_scale.str();
  }
  if (fm.even_half) j["even_half"] = poly_json(*fm.even_half);
  if (fm.nf) j["normal_form"] = {{"gamma", fm.nf->gamma.str()}, {"m", fm.nf->m.str()}};
  json qs = json::array();
  for (const auto& [label, v] : fm.quantities) qs.push_back({{"label", label}, {"value", v.str()}});
  j["quantities"] = qs;
  json cs = json::array();
  for (const auto& c : fm.conditions) cs.push_back({{"label", c.label}, {"holds", c.holds}});
  j["conditions"] = cs;
  j["all_conditions_hold"] = fm.all_conditions_hold();
  return j;
}

}  // namespace newred
