#include "gnq/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gnq {

namespace {

ordered_json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // convert the byte offset to a line number
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(origin + ":" + std::to_string(line) + ": " + e.what());
    }
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

Rational rational_from_json(const ordered_json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("field '" + field + "' must be an integer or a \"p/q\" string");
}

}  // namespace

ordered_json quadratic_to_json(const QuadraticValue& v) {
    ordered_json j;
    j["a"] = v.a().str();
    j["b"] = v.b().str();
    j["D"] = v.D();
    return j;
}

QuadraticValue quadratic_from_json(const ordered_json& j) {
    if (j.is_number_integer() || j.is_string())
        return QuadraticValue(rational_from_json(j, "scalar"));
    if (!j.is_object()) throw ParseError("scalar must be a number, \"p/q\", or {a,b,D} object");
    for (const char* key : {"a", "b", "D"})
        if (!j.contains(key)) throw ParseError("scalar object is missing field '" + std::string(key) + "'");
    if (!j["D"].is_number_integer()) throw ParseError("field 'D' must be an integer");
    return QuadraticValue(rational_from_json(j["a"], "a"), rational_from_json(j["b"], "b"),
                          j["D"].get<long long>());
}

ordered_json ring_to_json(const FusionRing& ring) {
    ordered_json j;
    j["name"] = ring.name();
    j["rank"] = ring.rank();
    j["labels"] = ring.labels();
    j["dual"] = ring.dual_map();
    ordered_json tensor = ordered_json::array();
    for (int i = 0; i < ring.rank(); ++i) {
        ordered_json mi = ordered_json::array();
        for (int jj = 0; jj < ring.rank(); ++jj) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < ring.rank(); ++k) row.push_back(ring.N(i, jj, k));
            mi.push_back(std::move(row));
        }
        tensor.push_back(std::move(mi));
    }
    j["N"] = std::move(tensor);
    return j;
}

FusionRing ring_from_json(const ordered_json& j) {
    for (const char* key : {"name", "rank", "labels", "dual", "N"})
        if (!j.contains(key)) throw ParseError("ring is missing field '" + std::string(key) + "'");
    if (!j["rank"].is_number_integer()) throw ParseError("field 'rank' must be an integer");
    const long long rank = j["rank"].get<long long>();
    if (rank < 1 || rank > 256) throw ParseError("rank out of range [1, 256]");

    if (!j["labels"].is_array() || (long long)j["labels"].size() != rank)
        throw ParseError("field 'labels' must be an array of length rank");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        if (!seen.insert(l.get<std::string>()).second)
            throw ParseError("duplicate label '" + l.get<std::string>() + "'");
        labels.push_back(l.get<std::string>());
    }

    if (!j["dual"].is_array() || (long long)j["dual"].size() != rank)
        throw ParseError("field 'dual' must be an array of length rank");
    std::vector<int> dual;
    for (const auto& d : j["dual"]) {
        if (!d.is_number_integer()) throw ParseError("dual entries must be integers");
        long long v = d.get<long long>();
        if (v < 0 || v >= rank) throw ParseError("dual index " + std::to_string(v) + " out of range");
        dual.push_back((int)v);
    }

    if (!j["N"].is_array() || (long long)j["N"].size() != rank)
        throw ParseError("field 'N' must be a rank-length array of rank x rank matrices");
    std::vector<int> tensor;
    tensor.reserve(rank * rank * rank);
    for (const auto& mi : j["N"]) {
        if (!mi.is_array() || (long long)mi.size() != rank)
            throw ParseError("each N[i] must be a rank x rank matrix");
        for (const auto& row : mi) {
            if (!row.is_array() || (long long)row.size() != rank)
                throw ParseError("each N[i][j] must be a rank-length row");
            for (const auto& v : row) {
                if (!v.is_number_integer() || v.get<long long>() < 0)
                    throw ParseError("structure constants must be nonnegative integers");
                tensor.push_back((int)v.get<long long>());
            }
        }
    }

    FusionRing ring(j["name"].get<std::string>(), std::move(labels), std::move(dual),
                    std::move(tensor));
    auto rep = verify_axioms(ring);
    if (!rep.pass) {
        const auto& v = rep.violations.front();
        std::string w;
        for (int idx : v.witness) w += (w.empty() ? "" : ",") + std::to_string(idx);
        throw AxiomError("ring fails the " + v.axiom + " axiom at (" + w + "): " + v.detail);
    }
    return ring;
}

FusionRing parse_ring_file(const std::string& path) { return ring_from_json(load_json_file(path)); }

FusionRing resolve_ring(const std::string& name_or_path) {
    try {
        return catalog_get(name_or_path);
    } catch (const UnknownName&) {
        return parse_ring_file(name_or_path);
    }
}

void write_ring_file(const FusionRing& ring, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << ring_to_json(ring).dump(2) << "\n";
}

ordered_json premetric_to_json(const PreMetricGroup& pm) {
    ordered_json j;
    j["group"] = pm.group.factors();
    ordered_json q = ordered_json::object();
    for (long long idx = 0; idx < pm.group.order(); ++idx)
        q[pm.group.elem_str(pm.group.element(idx))] = pm.q[idx].str();
    j["q"] = std::move(q);
    return j;
}

PreMetricGroup premetric_from_json(const ordered_json& j) {
    for (const char* key : {"group", "q"})
        if (!j.contains(key))
            throw ParseError("pre-metric group is missing field '" + std::string(key) + "'");
    if (!j["group"].is_array()) throw ParseError("field 'group' must be an array of integers");
    std::vector<long long> factors;
    for (const auto& f : j["group"]) {
        if (!f.is_number_integer() || f.get<long long>() < 2)
            throw ParseError("group factors must be integers >= 2");
        factors.push_back(f.get<long long>());
    }
    AbelianGroup g(factors);
    if (!j["q"].is_object()) throw ParseError("field 'q' must be an object keyed by tuples");
    std::vector<RationalAngle> q(g.order());
    std::vector<char> assigned(g.order(), 0);
    for (auto it = j["q"].begin(); it != j["q"].end(); ++it) {
        GroupElem e = AbelianGroup::parse_elem(it.key(), g.num_generators());
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] >= g.factors()[i])
                throw ParseError("element " + it.key() + " out of range");
        if (!it.value().is_string()) throw ParseError("q values must be \"p/q\" strings");
        long long idx = g.index_of(e);
        q[idx] = RationalAngle::parse(it.value().get<std::string>());
        assigned[idx] = 1;
    }
    for (long long idx = 0; idx < g.order(); ++idx)
        if (!assigned[idx])
            throw ParseError("q missing a value for element " + g.elem_str(g.element(idx)));
    return make_premetric(g, q);
}

PreMetricGroup parse_premetric_file(const std::string& path) {
    return premetric_from_json(load_json_file(path));
}

std::vector<GroupElem> subgroup_from_json(const ordered_json& j, size_t arity) {
    if (!j.is_array()) throw ParseError("subgroup must be an array of element tuples");
    std::vector<GroupElem> gens;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != arity)
            throw ParseError("subgroup tuples must have arity " + std::to_string(arity));
        GroupElem e;
        for (const auto& v : t) e.push_back(v.get<long long>());
        gens.push_back(std::move(e));
    }
    return gens;
}

std::vector<GroupElem> subgroup_from_string(const std::string& s, size_t arity) {
    std::vector<GroupElem> gens;
    if (s.empty()) return gens;
    if (s.front() == '[')  // JSON form: [[a1,...,ak], ...]
        return subgroup_from_json(parse_json_text(s, "subgroup"), arity);
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';'))
        gens.push_back(AbelianGroup::parse_elem(part, arity));
    return gens;
}

PremodularDatum parse_datum_file(const std::string& path) {
    auto j = load_json_file(path);
    for (const char* key : {"ring", "dims", "twists"})
        if (!j.contains(key)) throw ParseError("datum is missing field '" + std::string(key) + "'");
    if (!j["ring"].is_string()) throw ParseError("field 'ring' must be a catalog name or path");
    FusionRing ring = resolve_ring(j["ring"].get<std::string>());
    if (!j["dims"].is_array() || !j["twists"].is_array())
        throw ParseError("fields 'dims' and 'twists' must be arrays");
    std::vector<QuadraticValue> dims;
    for (const auto& d : j["dims"]) dims.push_back(quadratic_from_json(d));
    std::vector<RationalAngle> twists;
    for (const auto& t : j["twists"]) {
        if (!t.is_string()) throw ParseError("twists must be \"p/q\" strings");
        twists.push_back(RationalAngle::parse(t.get<std::string>()));
    }
    return make_datum(std::move(ring), std::move(dims), std::move(twists));
}

ordered_json datum_to_json(const PremodularDatum& datum) {
    ordered_json j;
    j["ring"] = datum.ring.name();
    ordered_json dims = ordered_json::array();
    for (const auto& d : datum.dims) dims.push_back(quadratic_to_json(d));
    j["dims"] = std::move(dims);
    ordered_json twists = ordered_json::array();
    for (const auto& t : datum.twists) twists.push_back(t.str());
    j["twists"] = std::move(twists);
    return j;
}

}  // namespace gnq
