#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "posetcoh/cohomology.hpp"
#include "posetcoh/criterion.hpp"

namespace posetcoh {

using Json = nlohmann::ordered_json;

/// Reads a whole file as JSON; InputError on I/O or syntax problems.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

/// {"elements": [...], "relations": [[low, high], ...]}; relations are arbitrary <= pairs.
Poset parse_poset(const Json& doc);
/// Elements in stored order, relations = Hasse covers as [low, high].
Json serialize_poset(const Poset& p);

Integer parse_integer(const Json& v, const std::string& what);
/// {"rank": r, "torsion": [...]} or {"generators": g, "relators": [[...], ...]} (each relator a column).
PresentedAbGroup parse_group(const Json& v, const std::string& what);
/// List of rows, checked against the expected shape. `[]` is accepted for any matrix with no rows or no columns.
IntMatrix parse_matrix(const Json& v, std::size_t rows, std::size_t cols, const std::string& what);

Json integer_json(const Integer& x);
/// {"rank": r, "torsion": [...]}
Json group_json(const CanonicalGroup& g);
Json matrix_json(const IntMatrix& m);
std::string subset_name(const Poset& p, const Subset& s);

/// Mode "presheaf" is keyed by intersection-poset node names; mode "diagram" is keyed by
/// element names and is turned into the presheaf of its sheaf. `base_dir` resolves a base given as a path.
Presheaf parse_presheaf(const Json& doc, const Poset& space, const std::filesystem::path& base_dir = {});
/// Diagram document on the poset itself (mode "diagram").
Diagram parse_diagram(const Json& doc, const Poset& base, const std::filesystem::path& base_dir = {});
/// Writes a presheaf in mode "presheaf" with explicit relators.
Json serialize_presheaf(const Presheaf& p);

/// Template with every group and map present and null.
Json presheaf_skeleton(const Poset& p);

}  // namespace posetcoh
