#pragma once

#include <string>

#include "json.hpp"
#include "luka/bijections.hpp"
#include "luka/multipoly.hpp"
#include "luka/paths.hpp"
#include "luka/phase.hpp"
#include "luka/upoly.hpp"

namespace luka {

// Paths serialize to plain arrays of step integers.
nlohmann::json path_to_json(const LukaPath& p);
LukaPath path_from_json(const ModelParams& params, const nlohmann::json& j);

// Weight polynomials (in a, optionally q) serialize as sparse maps from
// exponent tuples "e_a,e_q" to integer coefficients.
nlohmann::json weight_poly_to_json(const MultiPoly& p);

// General polynomials carry their variable list; coefficients are strings so
// arbitrary-precision values survive the trip.
nlohmann::json poly_to_json(const MultiPoly& p);

nlohmann::json qfun_to_json(const RationalQFunction& f);

nlohmann::json bijection_report_to_json(const BijectionReport& r);

nlohmann::json critical_point_to_json(const CriticalPoint& cp);

// Fixed 12-significant-digit rendering used by every CSV/JSON emitter.
std::string format_numeric(double x);
std::string format_numeric(const mpq_class& x);

}  // namespace luka
