#include "kleinforge/serialize.hpp"

#include "kleinforge/errors.hpp"

namespace kleinforge {

using nlohmann::json;

json to_json(const Monomial& m) { return {{"eps", m.has_r() ? 1 : 0}, {"vars", m.indices()}}; }

json to_json(const CohomologyClass& c) {
  json terms = json::array();
  for (const auto& m : c.terms()) terms.push_back(to_json(m));
  return {{"n", c.n()}, {"terms", terms}};
}

json to_json(const TensorClass& t) {
  json terms = json::array();
  for (const auto& [l, r] : t.terms()) terms.push_back({{"left", to_json(l)}, {"right", to_json(r)}});
  return {{"n", t.n()}, {"terms", terms}};
}

json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& [order, count] : g.torsion) torsion.push_back({{"order", order}, {"count", count}});
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

json to_json(const WedgeSummand& s) {
  return {{"kind", s.kind == SummandKind::sphere ? "sphere" : "moore"},
          {"dim", s.dim},
          {"multiplicity", s.multiplicity},
          {"text", s.to_string()}};
}

json to_json(const FactorMultiset& f) {
  return {{"r_count", f.r_count}, {"v_multiplicities", f.v_multiplicities}, {"text", f.to_string()}};
}

Monomial monomial_from_json(int n, const json& j) {
  try {
    const int eps = j.at("eps").get<int>();
    if (eps != 0 && eps != 1) throw DomainError("monomial JSON: eps must be 0 or 1");
    return Monomial::from_indices(n, eps == 1, j.at("vars").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw DomainError(std::string("monomial JSON: ") + e.what());
  }
}

CohomologyClass class_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Monomial> terms;
    for (const auto& t : j.at("terms")) terms.push_back(monomial_from_json(n, t));
    return CohomologyClass(n, std::move(terms));
  } catch (const json::exception& e) {
    throw DomainError(std::string("class JSON: ") + e.what());
  }
}

}  // namespace kleinforge
