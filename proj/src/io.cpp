#include "posetcoh/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "posetcoh/errors.hpp"

namespace posetcoh {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

// ---------------------------------------------------------------- posets

Poset parse_poset(const Json& doc) {
    if (!doc.is_object()) throw InputError("poset document must be an object");
    if (!doc.contains("elements") || !doc["elements"].is_array())
        throw InputError("poset document needs an \"elements\" list");
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw InputError("element names must be strings");
        auto name = e.get<std::string>();
        if (!index.emplace(name, names.size()).second) throw InputError("duplicate element name '" + name + "'");
        names.push_back(std::move(name));
    }
    if (names.empty()) throw InputError("poset has no elements");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) throw InputError("\"relations\" must be a list of [low, high] pairs");
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw InputError("each relation must be a pair [low, high] of element names");
            std::size_t ends[2];
            for (int k = 0; k < 2; ++k) {
                auto it = index.find(r[k].get<std::string>());
                if (it == index.end())
                    throw InputError("relation mentions unknown element '" + r[k].get<std::string>() + "'");
                ends[k] = it->second;
            }
            pairs.emplace_back(ends[0], ends[1]);
        }
    }
    return Poset::from_relations(std::move(names), pairs);
}

Json serialize_poset(const Poset& p) {
    Json doc;
    doc["elements"] = p.names();
    Json rel = Json::array();
    for (auto [lo, hi] : p.covers()) rel.push_back({p.name(lo), p.name(hi)});
    doc["relations"] = std::move(rel);
    return doc;
}

// ---------------------------------------------------------------- groups and matrices

Integer parse_integer(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                             : Integer(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        Integer x;
        if (x.set_str(v.get<std::string>(), 10) == 0) return x;
    }
    throw InputError(what + ": expected an integer, got " + v.dump());
}

namespace {

std::size_t parse_count(const Json& v, const std::string& what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InputError(what + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

PresentedAbGroup parse_group(const Json& v, const std::string& what) {
    if (v.is_null()) throw InputError(what + " is not filled in");
    if (!v.is_object()) throw InputError(what + " must be a group literal object");
    if (v.contains("rank") || v.contains("torsion")) {
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it.key() != "rank" && it.key() != "torsion") throw InputError(what + ": unexpected field '" + it.key() + "'");
        CanonicalGroup g;
        if (v.contains("rank")) g.rank = parse_count(v["rank"], what + " rank");
        if (v.contains("torsion")) {
            if (!v["torsion"].is_array()) throw InputError(what + ": torsion must be a list");
            for (const auto& d : v["torsion"]) {
                Integer x = parse_integer(d, what + " torsion");
                if (x < 1) throw InputError(what + ": torsion orders must be positive");
                g.torsion.push_back(x);
            }
        }
        return PresentedAbGroup::from_canonical(g);
    }
    if (v.contains("generators")) {
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it.key() != "generators" && it.key() != "relators")
                throw InputError(what + ": unexpected field '" + it.key() + "'");
        const std::size_t g = parse_count(v["generators"], what + " generators");
        std::vector<IntVector> cols;
        if (v.contains("relators")) {
            if (!v["relators"].is_array()) throw InputError(what + ": relators must be a list");
            for (const auto& r : v["relators"]) {
                if (!r.is_array() || r.size() != g)
                    throw InputError(what + ": each relator needs " + std::to_string(g) + " entries");
                IntVector col;
                for (const auto& x : r) col.push_back(parse_integer(x, what + " relator"));
                cols.push_back(std::move(col));
            }
        }
        return PresentedAbGroup(g, IntMatrix::from_columns(cols, g));
    }
    throw InputError(what + ": expected {\"rank\", \"torsion\"} or {\"generators\", \"relators\"}");
}

IntMatrix parse_matrix(const Json& v, std::size_t rows, std::size_t cols, const std::string& what) {
    if (v.is_null()) throw InputError(what + " is not filled in");
    if (!v.is_array()) throw InputError(what + " must be a list of rows");
    IntMatrix m(rows, cols);
    if (v.empty() && (rows == 0 || cols == 0)) return m;
    if (v.size() != rows)
        throw InputError(what + " has " + std::to_string(v.size()) + " rows, expected " + std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw InputError(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(v[i][j], what);
    }
    return m;
}

Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json group_json(const CanonicalGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(integer_json(d));
    return Json{{"rank", g.rank}, {"torsion", std::move(t)}};
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string subset_name(const Poset& p, const Subset& s) { return IntersectionPoset::canonical_name(p, s); }

// ---------------------------------------------------------------- presheaf documents

namespace {

void check_base(const Json& doc, const Poset& space, const std::filesystem::path& base_dir) {
    if (!doc.contains("base") || doc["base"].is_null()) return;
    const Json& b = doc["base"];
    Poset given = [&] {
        if (b.is_object()) return parse_poset(b);
        if (b.is_string()) {
            std::filesystem::path path(b.get<std::string>());
            if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
            return parse_poset(read_json_file(path));
        }
        throw InputError("\"base\" must be a poset object or a path");
    }();
    if (!(given == space)) throw InputError("the document's base poset differs from the poset supplied");
}

// Groups and Hasse-edge maps keyed by the carrier's element names.
Diagram parse_keyed_diagram(const Json& doc, const Poset& carrier, const std::string& noun) {
    if (!doc.contains("groups") || !doc["groups"].is_object()) throw InputError("document needs a \"groups\" object");
    const Json& groups = doc["groups"];
    for (auto it = groups.begin(); it != groups.end(); ++it)
        if (!carrier.index_of(it.key())) throw InputError("group given for unknown " + noun + " '" + it.key() + "'");
    std::vector<PresentedAbGroup> values;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        const auto& name = carrier.name(i);
        if (!groups.contains(name)) throw InputError("missing group for " + noun + " '" + name + "'");
        values.push_back(parse_group(groups[name], "group of '" + name + "'"));
    }

    Json maps = doc.contains("maps") ? doc["maps"] : Json::object();
    if (!maps.is_object()) throw InputError("\"maps\" must be an object");
    std::map<std::string, Diagram::Edge> keys;
    for (auto [lo, hi] : carrier.covers()) keys.emplace(carrier.name(hi) + "->" + carrier.name(lo), Diagram::Edge{hi, lo});
    for (auto it = maps.begin(); it != maps.end(); ++it)
        if (!keys.count(it.key())) throw InputError("map '" + it.key() + "' is not a Hasse edge of the " + noun + " poset");
    std::map<Diagram::Edge, IntMatrix> edges;
    for (const auto& [key, e] : keys) {
        const std::size_t rows = values[e.second].generators();
        const std::size_t cols = values[e.first].generators();
        if (!maps.contains(key)) {
            if (rows == 0 || cols == 0) {
                edges.emplace(e, IntMatrix(rows, cols));
                continue;
            }
            throw InputError("missing map '" + key + "'");
        }
        edges.emplace(e, parse_matrix(maps[key], rows, cols, "map '" + key + "'"));
    }
    return Diagram(carrier, std::move(values), std::move(edges));
}

std::string mode_of(const Json& doc) {
    if (!doc.is_object()) throw InputError("presheaf document must be an object");
    if (!doc.contains("mode")) return "presheaf";
    if (!doc["mode"].is_string()) throw InputError("\"mode\" must be \"presheaf\" or \"diagram\"");
    auto m = doc["mode"].get<std::string>();
    if (m != "presheaf" && m != "diagram") throw InputError("unknown mode '" + m + "'");
    return m;
}

}  // namespace

Diagram parse_diagram(const Json& doc, const Poset& base, const std::filesystem::path& base_dir) {
    if (mode_of(doc) != "diagram") throw InputError("expected a document in mode \"diagram\"");
    check_base(doc, base, base_dir);
    return parse_keyed_diagram(doc, base, "element");
}

Presheaf parse_presheaf(const Json& doc, const Poset& space, const std::filesystem::path& base_dir) {
    if (mode_of(doc) == "diagram") return sheaf_presheaf(parse_diagram(doc, space, base_dir));
    check_base(doc, space, base_dir);
    IntersectionPoset u(space);
    Diagram d = parse_keyed_diagram(doc, u.node_poset(), "intersection");
    return Presheaf(std::move(u), std::move(d));
}

Json serialize_presheaf(const Presheaf& p) {
    const Poset& nodes = p.cover().node_poset();
    Json groups = Json::object();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& g = p.diagram().value(k);
        Json rel = Json::array();
        for (std::size_t j = 0; j < g.relations().cols(); ++j) {
            Json col = Json::array();
            for (std::size_t i = 0; i < g.generators(); ++i) col.push_back(integer_json(g.relations()(i, j)));
            rel.push_back(std::move(col));
        }
        groups[nodes.name(k)] = Json{{"generators", g.generators()}, {"relators", std::move(rel)}};
    }
    Json maps = Json::object();
    for (auto [lo, hi] : nodes.covers())
        maps[nodes.name(hi) + "->" + nodes.name(lo)] = matrix_json(p.diagram().map_matrix(hi, lo));
    Json doc;
    doc["base"] = serialize_poset(p.space());
    doc["mode"] = "presheaf";
    doc["groups"] = std::move(groups);
    doc["maps"] = std::move(maps);
    return doc;
}

Json presheaf_skeleton(const Poset& p) {
    IntersectionPoset u(p);
    const Poset& nodes = u.node_poset();
    Json groups = Json::object();
    for (std::size_t k = 0; k < nodes.size(); ++k) groups[nodes.name(k)] = nullptr;
    Json maps = Json::object();
    for (auto [lo, hi] : nodes.covers()) maps[nodes.name(hi) + "->" + nodes.name(lo)] = nullptr;
    Json doc;
    doc["base"] = serialize_poset(p);
    doc["mode"] = "presheaf";
    doc["groups"] = std::move(groups);
    doc["maps"] = std::move(maps);
    return doc;
}

}  // namespace posetcoh
