#pragma once

// JSON forms of the core value types. A cohomology class serializes as
// {"n":4,"terms":[{"eps":1,"vars":[1,3]}, ...]}.

#include <json.hpp>

#include "kleinforge/abelian_group.hpp"
#include "kleinforge/cohomology.hpp"
#include "kleinforge/integral.hpp"
#include "kleinforge/tensor.hpp"

namespace kleinforge {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const CohomologyClass& c);
nlohmann::json to_json(const TensorClass& t);
nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const WedgeSummand& s);
nlohmann::json to_json(const FactorMultiset& f);

Monomial monomial_from_json(int n, const nlohmann::json& j);
CohomologyClass class_from_json(const nlohmann::json& j);

}  // namespace kleinforge
