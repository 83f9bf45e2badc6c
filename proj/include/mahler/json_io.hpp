#pragma once

#include <string>

#include "json.hpp"

#include "mahler/classify.hpp"
#include "mahler/cyclotomic.hpp"
#include "mahler/equation.hpp"
#include "mahler/linrep.hpp"
#include "mahler/polynomial.hpp"
#include "mahler/semigroup.hpp"

namespace mahler {

using Json = nlohmann::json;

// Wire name for a verdict kind; stable, matches the enum spelling.
const char* verdict_kind_name(VerdictKind kind);

// All serializers emit objects with sorted keys and rationals as canonical
// "p/q" strings ("p" when the denominator is 1), so identical inputs produce
// byte-identical documents.
Json to_json(const Polynomial& p);  // coefficient strings, constant term first
Json to_json(const MahlerEquation& eq);
Json to_json(const UnitRootSplit& split);
Json to_json(const LinearRepresentation& rep);
Json to_json(const SemigroupVerdict& verdict);
Json to_json(const LadderTest& test);
Json to_json(const EmpiricalClassification& emp);
Json to_json(const FactorCheck& check);
Json to_json(const StructuralEvidence& evidence);
Json to_json(const StructuralClassification& sc);
Json to_json(const ClassificationReport& report);

// Inverse of to_json(LinearRepresentation). Accepts exactly the emitted
// shape; SchemaError on missing fields, shape mismatches, or a first digit
// matrix that fails the leading-zero invariance u * mu[0] = u.
LinearRepresentation linrep_from_json(const Json& j);

}  // namespace mahler
