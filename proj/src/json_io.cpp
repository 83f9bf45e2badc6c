#include "mahler/json_io.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/rational.hpp"

namespace mahler {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidEquation: return "InvalidEquation";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::RadixMismatch: return "RadixMismatch";
    case ErrorKind::MalformedBecker: return "MalformedBecker";
    case ErrorKind::UnderdeterminedSeeds: return "UnderdeterminedSeeds";
    case ErrorKind::InconsistentSeeds: return "InconsistentSeeds";
    case ErrorKind::CompositePrime: return "CompositePrime";
    case ErrorKind::EscalationCapExceeded: return "EscalationCapExceeded";
    case ErrorKind::OrbitNotFinite: return "OrbitNotFinite";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DivisionCheckFailed: return "DivisionCheckFailed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooFewTerms: return "TooFewTerms";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "InternalError";
}

const char* verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Finite: return "Finite";
    case VerdictKind::TameNotFinite: return "TameNotFinite";
    case VerdictKind::NotTame: return "NotTame";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const Rat& c : p.coeffs()) a.push_back(rat_to_string(c));
  return a;
}

Json to_json(const MahlerEquation& eq) {
  Json coeffs = Json::array();
  for (const Polynomial& p : eq.coeffs) coeffs.push_back(to_json(p));
  return Json{{"coeffs", coeffs}, {"k", eq.k}};
}

Json to_json(const UnitRootSplit& split) {
  Json factors = Json::array();
  for (const auto& [order, mult] : split.cyclotomic) {
    factors.push_back(Json{{"multiplicity", mult}, {"order", order}});
  }
  return Json{{"cyclotomic", factors},
              {"power_of_z", split.power_of_z},
              {"remainder", to_json(split.remainder)},
              {"unit", rat_to_string(split.unit)}};
}

Json to_json(const LinearRepresentation& rep) {
  Json u = Json::array(), v = Json::array(), mu = Json::array();
  for (const Rat& x : rep.u) u.push_back(rat_to_string(x));
  for (const Rat& x : rep.v) v.push_back(rat_to_string(x));
  for (const RatMatrix& m : rep.mu) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const Rat& x : row) r.push_back(rat_to_string(x));
      rows.push_back(std::move(r));
    }
    mu.push_back(std::move(rows));
  }
  return Json{{"dim", rep.dim()}, {"k", rep.k}, {"mu", mu}, {"u", u}, {"v", v}};
}

Json to_json(const SemigroupVerdict& verdict) {
  Json j{{"kind", verdict_kind_name(verdict.kind)}};
  switch (verdict.kind) {
    case VerdictKind::Finite:
      j["cardinality"] = verdict.cardinality;
      break;
    case VerdictKind::NotTame:
      j["witness"] = verdict.witness;
      break;
    case VerdictKind::Inconclusive:
      j["depth"] = verdict.depth;
      j["reason"] = verdict.reason;
      break;
    case VerdictKind::TameNotFinite:
      break;
  }
  return j;
}

Json to_json(const LadderTest& test) {
  return Json{{"drift", test.drift},   {"label", test.label},
              {"mean", test.mean},     {"passed", test.passed},
              {"spread", test.spread}, {"tail", test.tail},
              {"target", static_cast<int>(test.target)}};
}

Json to_json(const EmpiricalClassification& emp) {
  Json ladder = Json::array();
  for (const LadderTest& t : emp.ladder) ladder.push_back(to_json(t));
  return Json{{"burn_in", emp.burn_in},
              {"class", static_cast<int>(emp.value)},
              {"fallback", emp.fallback},
              {"label", growth_class_name(emp.value)},
              {"ladder", ladder},
              {"margin", emp.margin},
              {"slope", emp.slope},
              {"tail", emp.tail},
              {"window_max", emp.window_max}};
}

Json to_json(const FactorCheck& check) {
  return Json{{"fixing_power", check.fixing_power},
              {"order", check.order},
              {"r0_divisible", check.r0_divisible}};
}

Json to_json(const StructuralEvidence& evidence) {
  Json checks = Json::array();
  for (const FactorCheck& fc : evidence.factor_checks) checks.push_back(to_json(fc));
  Json j{{"compiled_dimension", evidence.compiled_dimension},
         {"factor_checks", checks},
         {"iterated", to_json(evidence.iterated)},
         {"iteration_steps", evidence.iteration_steps},
         {"leading_split", to_json(evidence.leading_split)},
         {"minimality_certified", evidence.minimality_certified},
         {"notes", evidence.notes},
         {"relation_verified_to", evidence.relation_verified_to},
         {"shift_certified", evidence.shift_certified},
         {"shift_verified_to", evidence.shift_verified_to},
         {"working", to_json(evidence.working)},
         {"working_certified", evidence.working_certified}};
  j["semigroup"] = evidence.semigroup ? to_json(*evidence.semigroup) : Json();
  return j;
}

Json to_json(const StructuralClassification& sc) {
  Json j{{"evidence", to_json(sc.evidence)}};
  j["class"] = sc.value ? Json(static_cast<int>(*sc.value)) : Json();
  j["label"] = sc.value ? Json(growth_class_name(*sc.value)) : Json();
  return j;
}

Json to_json(const ClassificationReport& report) {
  Json j{{"agreement", report.agreement},
         {"class", static_cast<int>(report.value)},
         {"confidence", confidence_name(report.confidence)},
         {"k", report.k},
         {"label", growth_class_name(report.value)},
         {"name", report.name},
         {"notes", report.notes},
         {"verified_to", report.verified_to}};
  j["empirical"] = report.empirical ? to_json(*report.empirical) : Json();
  j["structural"] = report.structural ? to_json(*report.structural) : Json();
  return j;
}

namespace {

std::vector<Rat> rat_vector(const Json& j, const char* where) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, std::string(where) + " must be an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_string()) fail(ErrorKind::SchemaError, std::string(where) + " entries must be strings");
    out.push_back(parse_rat(x.get<std::string>()));
  }
  return out;
}

}  // namespace

LinearRepresentation linrep_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::SchemaError, "representation must be a JSON object");
  for (const char* field : {"k", "u", "mu", "v"}) {
    if (!j.contains(field)) {
      fail(ErrorKind::SchemaError, std::string("representation is missing \"") + field + "\"");
    }
  }
  if (!j["k"].is_number_unsigned() || j["k"].get<unsigned long>() < 2) {
    fail(ErrorKind::SchemaError, "\"k\" must be an integer radix >= 2");
  }
  LinearRepresentation rep;
  rep.k = j["k"].get<unsigned long>();
  rep.u = rat_vector(j["u"], "\"u\"");
  rep.v = rat_vector(j["v"], "\"v\"");
  const std::size_t dim = rep.u.size();
  if (rep.v.size() != dim) fail(ErrorKind::SchemaError, "\"u\" and \"v\" lengths differ");
  if (dim == 0) fail(ErrorKind::SchemaError, "representation dimension must be positive");
  if (!j["mu"].is_array() || j["mu"].size() != rep.k) {
    fail(ErrorKind::SchemaError, "\"mu\" must list one matrix per digit");
  }
  for (const Json& m : j["mu"]) {
    if (!m.is_array() || m.size() != dim) {
      fail(ErrorKind::SchemaError, "digit matrices must be square of the \"u\" dimension");
    }
    RatMatrix rows;
    for (const Json& row : m) {
      rows.push_back(rat_vector(row, "matrix row"));
      if (rows.back().size() != dim) {
        fail(ErrorKind::SchemaError, "digit matrices must be square of the \"u\" dimension");
      }
    }
    rep.mu.push_back(std::move(rows));
  }
  for (std::size_t col = 0; col < dim; ++col) {
    Rat s(0);
    for (std::size_t i = 0; i < dim; ++i) s += rep.u[i] * rep.mu[0][i][col];
    if (s != rep.u[col]) {
      fail(ErrorKind::SchemaError,
           "representation breaks leading-zero invariance: u * mu[0] != u");
    }
  }
  return rep;
}

}  // namespace mahler
