#pragma once

#include <json.hpp>

#include "jrdeg/degree.hpp"
#include "jrdeg/rational.hpp"
#include "jrdeg/rules.hpp"
#include "jrdeg/solvers.hpp"

namespace jrdeg {

// JSON forms used by the CLI. nlohmann::json keeps keys sorted, so dumps are
// byte-stable for identical inputs.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const CohesiveWitness& w);
nlohmann::json to_json(const DegreeReport& rep);
nlohmann::json to_json(const LsPavTrace& trace);
nlohmann::json to_json(const SolveResult& res);

}  // namespace jrdeg
