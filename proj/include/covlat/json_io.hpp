#pragma once

#include <json.hpp>

#include "covlat/e8.hpp"
#include "covlat/leech.hpp"
#include "covlat/maxdet.hpp"
#include "covlat/rigidity.hpp"

namespace covlat {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);           // "p/q" string
Rational rational_from_json(const Json& j);
Json vec_json(const RatVec& v);
RatVec vec_from_json(const Json& j);
Json matrix_json(const SymMatrix& m);            // row-major nested arrays
SymMatrix matrix_from_json(const Json& j);

Json shell_json(const Shell& s);
Json verdict_json(const Rational& theta_sq_ratio, const std::string& threshold, Verdict v);
Json triangulation_json(const PeriodicTriangulation& t, bool feasible);
Json regulator_json(const Regulator& r);
Json certificate_json(const Certificate& c);
Json theorem1_json(const Theorem1Report& r);
Json rigidity_json(const RigidityResult& r);

}  // namespace covlat
