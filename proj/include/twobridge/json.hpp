#pragma once

#include <json.hpp>

#include "twobridge/angles.hpp"
#include "twobridge/blocks.hpp"
#include "twobridge/moves.hpp"
#include "twobridge/volume.hpp"

namespace twobridge {

inline constexpr int SCHEMA_VERSION = 1;

nlohmann::json to_json(const Word &w);
// {"tetrahedra": n, "gluings": [[{tet, face, perm "0123"}, ...] per tet]}
nlohmann::json to_json(const Triangulation &t);
nlohmann::json to_json(const EdgeClassTable &ec, const Triangulation &t);
nlohmann::json to_json(const ValidationReport &r);
nlohmann::json to_json(const SimplificationTrace &tr);
nlohmann::json to_json(const BlockDecomposition &d);
nlohmann::json to_json(const AngleAssignment &a);
nlohmann::json to_json(const AngleVerification &v);
nlohmann::json to_json(const MaximizeResult &m);
nlohmann::json to_json(const BoundsReport &r);

Triangulation triangulation_from_json(const nlohmann::json &j);

// Fixed column order of the survey / bounds CSV.
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport &r);

} // namespace twobridge
