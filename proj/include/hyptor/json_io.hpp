#pragma once

#include "hyptor/expansion.hpp"
#include "hyptor/stationary_phase.hpp"
#include "hyptor/trace_formula.hpp"
#include "hyptor/zeta_torsion.hpp"

#include <json.hpp>

#include <string>

namespace hyptor::io {

using json = nlohmann::json;

// Rationals serialize as integers when possible, "p/q" strings otherwise.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json weight_to_json(const std::vector<Rational>& k);
std::vector<Rational> weight_from_json(const json& j);

rep::GroupKind group_kind_from_json(const json& j);

json series_to_json(const series::TruncatedSeries<double>& s);
series::TruncatedSeries<double> series_from_json(const json& j);

json expansion_to_json(const SmallTimeExpansion& e);
SmallTimeExpansion expansion_from_json(const json& j);

json log_expansion_to_json(const stphase::LogExpansion& e);

traceform::ManifoldData manifold_from_json(const json& j);

zeta::SpectralData spectral_from_json(const json& j);

// Parses a file, mapping parse failures to a line/column diagnostic.
json load_json_file(const std::string& path, const std::string& what);

}  // namespace hyptor::io
