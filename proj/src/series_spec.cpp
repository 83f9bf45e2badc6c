#include "mahler/series_spec.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <utility>

#include "json.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/parse.hpp"
#include "mahler/relation.hpp"

namespace mahler {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    fail(ErrorKind::PreconditionViolated,
         std::string(what) + " does not fit a machine word");
  }
  return a * b;
}

}  // namespace

SeriesSpec make_spec(const MahlerEquation& equation, std::vector<Rat> seeds,
                     std::string name) {
  SeriesSpec s;
  s.equation = normalize_equation(equation);
  s.seeds = std::move(seeds);
  s.name = std::move(name);
  const std::size_t m = s.equation.coeffs.front().valuation();
  if (s.seeds.size() < m + 1) {
    fail(ErrorKind::UnderdeterminedSeeds,
         "the recurrence requires " + std::to_string(m + 1) +
             " seed coefficients (indices 0 through " + std::to_string(m) +
             "), got " + std::to_string(s.seeds.size()));
  }

  // Surplus seeds must agree with what the recurrence forces.
  SeriesSpec base = s;
  base.seeds.assign(s.seeds.begin(), s.seeds.begin() + static_cast<long>(m) + 1);
  if (s.seeds.size() > m + 1) {
    CoefficientStream stream(base);
    for (std::size_t n = m + 1; n < s.seeds.size(); ++n) {
      const Rat& forced = stream.at(n);
      if (forced != s.seeds[n]) {
        fail(ErrorKind::InconsistentSeeds,
             "a_" + std::to_string(n) + " is forced to " + rat_to_string(forced) +
                 " by the recurrence, got " + rat_to_string(s.seeds[n]));
      }
    }
  }

  // The recurrence enforces the residual rows beyond 2m only; the first rows
  // constrain the seeds themselves.
  if (auto bad = residual_order(base, 2 * m)) {
    fail(ErrorKind::InconsistentSeeds,
         "the seeds violate the equation at coefficient index " +
             std::to_string(*bad));
  }
  s.seed_count_certified = true;
  return s;
}

SeriesSpec parse_spec(const std::string& document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    fail(ErrorKind::SchemaError, "spec document must be a JSON object");
  }
  if (!j.contains("k") || !j["k"].is_number_integer()) {
    fail(ErrorKind::SchemaError, "field \"k\" must be an integer");
  }
  const long long k = j["k"].get<long long>();
  if (k < 2) {
    fail(ErrorKind::RadixMismatch,
         "field \"k\" must be at least 2, got " + std::to_string(k));
  }

  if (!j.contains("equation")) {
    fail(ErrorKind::SchemaError, "field \"equation\" is missing");
  }
  std::vector<Polynomial> coeffs;
  const auto& je = j["equation"];
  if (je.is_string()) {
    coeffs = parse_equation_expr(je.get<std::string>());
  } else if (je.is_array()) {
    if (je.empty()) {
      fail(ErrorKind::SchemaError, "field \"equation\" is an empty list");
    }
    for (const auto& item : je) {
      if (!item.is_string()) {
        fail(ErrorKind::SchemaError,
             "field \"equation\" must list polynomial strings");
      }
      coeffs.push_back(parse_polynomial(item.get<std::string>()));
    }
  } else {
    fail(ErrorKind::SchemaError,
         "field \"equation\" must be a string or a list of strings");
  }

  if (!j.contains("seeds") || !j["seeds"].is_array()) {
    fail(ErrorKind::SchemaError, "field \"seeds\" must be a list");
  }
  std::vector<Rat> seeds;
  for (const auto& item : j["seeds"]) {
    if (item.is_string()) {
      seeds.push_back(parse_rat(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      seeds.push_back(Rat(static_cast<long>(item.get<long long>())));
    } else {
      fail(ErrorKind::SchemaError,
           "field \"seeds\" must list rational strings");
    }
  }

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      fail(ErrorKind::SchemaError, "field \"name\" must be a string");
    }
    name = j["name"].get<std::string>();
  }

  MahlerEquation eq;
  eq.k = static_cast<unsigned long>(k);
  eq.coeffs = std::move(coeffs);
  return make_spec(eq, std::move(seeds), std::move(name));
}

ShiftResult shift_spec(const SeriesSpec& spec) {
  SeriesSpec s = spec;
  s.equation = normalize_equation(s.equation);
  auto stream = std::make_shared<CoefficientStream>(s);

  // Candidate shifts: indices carrying a nonzero coefficient, at or below the
  // seed horizon.  A series vanishing through index m vanishes identically,
  // so the list is empty exactly for the zero series.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i <= stream->m(); ++i) {
    if (stream->at(i) != 0) candidates.push_back(i);
  }
  if (candidates.empty()) {
    fail(ErrorKind::ZeroSeries, "every coefficient of the series vanishes");
  }
  const std::size_t least = candidates.front();

  if (least == 0 && stream->m() == 0) {
    ShiftResult out;
    out.shifted = s;
    return out;
  }

  long maxdeg = 0;
  for (const auto& c : s.equation.coeffs) maxdeg = std::max(maxdeg, c.degree());

  for (std::size_t n0 : candidates) {
    ShiftResult out;
    out.shift = n0;
    for (std::size_t i = least; i < n0; ++i) {
      out.prefix = out.prefix + Polynomial::monomial(stream->at(i), i);
    }
    std::function<Rat(std::size_t)> shifted_coeff = [stream, n0](std::size_t n) {
      return stream->at(n + n0);
    };

    if (n0 == least) {
      // The tail past the first nonzero coefficient satisfies the exact
      // substituted equation p_i(z) z^{n0 (k^i - 1)}.
      MahlerEquation sub;
      sub.k = s.equation.k;
      std::size_t kp = 1;
      for (std::size_t i = 0; i < s.equation.coeffs.size(); ++i) {
        sub.coeffs.push_back(
            s.equation.coeffs[i].times_power(checked_mul(n0, kp - 1, "shift exponent")));
        if (i + 1 < s.equation.coeffs.size()) {
          kp = checked_mul(kp, s.equation.k, "radix power");
        }
      }
      sub = normalize_equation(sub);
      if (sub.coeffs.front().valuation() == 0) {
        out.shifted = make_spec(sub, {shifted_coeff(0)}, s.name);
        return out;
      }
      // The substitution left q_0(0) = 0; hunt for a unit-constant relation
      // of order up to d+1, certifying against the substituted equation when
      // the order reaches it.
      const std::size_t base = std::max<std::size_t>(4, static_cast<std::size_t>(maxdeg));
      std::size_t floor = 0;
      for (std::size_t mult : {1, 2, 4, 8}) {
        auto got = search_low_order_relation(shifted_coeff, sub.k, sub.order() + 1,
                                             base * mult, true, &sub, floor);
        if (got) {
          out.shifted = make_spec(got->equation, {shifted_coeff(0)}, s.name);
          out.equation_certified = got->certified;
          out.verified_to = got->verified_to;
          return out;
        }
        floor = base * mult + 1;
      }
      continue;
    }

    // Shifting past intermediate nonzero coefficients leaves those behind in
    // the prefix; the tail's relation to the original equation is then
    // inhomogeneous, so the search carries no symbolic certificate.
    const std::size_t base = std::max<std::size_t>(4, static_cast<std::size_t>(maxdeg));
    std::size_t floor = 0;
    for (std::size_t mult : {1, 2, 4, 8}) {
      auto got = search_low_order_relation(shifted_coeff, s.equation.k,
                                           s.equation.order() + 1, base * mult,
                                           true, nullptr, floor);
      if (got) {
        out.shifted = make_spec(got->equation, {shifted_coeff(0)}, s.name);
        out.equation_certified = false;
        out.verified_to = got->verified_to;
        return out;
      }
      floor = base * mult + 1;
    }
  }
  fail(ErrorKind::InternalError,
       "no unit-constant relation found at any shift through index " +
           std::to_string(candidates.back()));
}

}  // namespace mahler
