#include "orbchar/json_io.hpp"

#include <fstream>

#include "orbchar/lie_catalog.hpp"

namespace orbchar {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonReadError(what); }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t int_field(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

CellVector cells_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad("'cells' must be an object mapping dimension to count");
    CellVector cells;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int dim = 0;
        try {
            dim = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || dim < 0) bad("cell dimension '" + key + "' is not a non-negative integer");
        cells[dim] = int_field(value, "cell count");
    }
    return cells;
}

nlohmann::json cells_to_json(const CellVector& cells) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [dim, count] : cells) j[std::to_string(dim)] = count;
    return j;
}

std::string label_from_json(const nlohmann::json& stratum) {
    const auto& l = field(stratum, "label");
    if (!l.is_string()) bad("'label' must be a string");
    return l.get<std::string>();
}

const nlohmann::json& strata_array(const nlohmann::json& j) {
    const auto& strata = field(j, "strata");
    if (!strata.is_array()) bad("'strata' must be an array");
    return strata;
}

} // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

DefinableSpace space_from_json(const nlohmann::json& j) {
    DefinableSpace s;
    for (const auto& stratum : strata_array(j))
        s.strata.push_back({label_from_json(stratum), cells_from_json(field(stratum, "cells"))});
    return s;
}

nlohmann::json space_to_json(const DefinableSpace& s) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& st : s.strata)
        strata.push_back({{"label", st.label}, {"cells", cells_to_json(st.cells)}});
    return {{"strata", strata}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
    const auto& table = field(j, "table");
    if (!table.is_array()) bad("'table' must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : table) {
        if (!row.is_array()) bad("'table' rows must be arrays");
        std::vector<int> r;
        for (const auto& entry : row) r.push_back(static_cast<int>(int_field(entry, "table entry")));
        rows.push_back(std::move(r));
    }
    std::string name;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) bad("'name' must be a string");
        name = j.at("name").get<std::string>();
    }
    return FiniteGroup::validate(rows, name);
}

nlohmann::json group_to_json(const FiniteGroup& g) {
    nlohmann::json table = nlohmann::json::array();
    for (int a = 0; a < g.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    nlohmann::json j{{"table", table}};
    if (!g.name().empty()) j["name"] = g.name();
    return j;
}

GroupPresentation presentation_from_json(const nlohmann::json& j) {
    const int gens = static_cast<int>(int_field(field(j, "generators"), "'generators'"));
    std::vector<std::vector<int>> relators;
    if (j.contains("relators")) {
        const auto& rel = j.at("relators");
        if (!rel.is_array()) bad("'relators' must be an array of words");
        for (const auto& word : rel) {
            if (!word.is_array()) bad("relator words must be arrays of signed generator indices");
            std::vector<int> w;
            for (const auto& letter : word) w.push_back(static_cast<int>(int_field(letter, "relator letter")));
            relators.push_back(std::move(w));
        }
    }
    return GroupPresentation::make(gens, std::move(relators));
}

nlohmann::json presentation_to_json(const GroupPresentation& p) {
    nlohmann::json relators = nlohmann::json::array();
    for (const auto& w : p.relators) relators.push_back(w);
    return {{"generators", p.generators}, {"relators", relators}};
}

namespace {

LieGroupDescriptor isotropy_from_json(const nlohmann::json& j, const std::string& label) {
    if (j.is_string()) {
        // A descriptor string that fails to parse makes the document
        // malformed; unsupported-group semantics only apply to objects that
        // were read successfully.
        try {
            return parse_descriptor(j.get<std::string>());
        } catch (const UnsupportedGroupError& e) {
            bad("stratum '" + label + "': " + e.what());
        }
    }
    if (j.is_object() && j.contains("finite"))
        return LieGroupDescriptor::finite_group(group_from_json(j.at("finite")));
    bad("stratum '" + label + "': 'isotropy' must be a descriptor string or {\"finite\": ...}");
}

nlohmann::json isotropy_to_json(const LieGroupDescriptor& d) {
    const std::string text = descriptor_to_string(d);
    try {
        (void)parse_descriptor(text);
        return text;
    } catch (const UnsupportedGroupError&) {
        // Name not in the bundled catalog: embed the table so it reads back.
        if (d.kind == LieGroupDescriptor::Kind::Finite)
            return nlohmann::json{{"finite", group_to_json(d.finite)}};
        throw;
    }
}

} // namespace

GroupoidModel model_from_json(const nlohmann::json& j) {
    GroupoidModel m;
    for (const auto& stratum : strata_array(j)) {
        GroupoidStratum s;
        s.label = label_from_json(stratum);
        s.cells = cells_from_json(field(stratum, "cells"));
        s.isotropy = stratum.contains("isotropy")
                         ? isotropy_from_json(stratum.at("isotropy"), s.label)
                         : LieGroupDescriptor::finite_group(trivial_group());
        m.strata.push_back(std::move(s));
    }
    return m;
}

nlohmann::json model_to_json(const GroupoidModel& m) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& s : m.strata) {
        nlohmann::json stratum{{"label", s.label}, {"cells", cells_to_json(s.cells)}};
        if (!s.isotropy.is_trivial()) stratum["isotropy"] = isotropy_to_json(s.isotropy);
        strata.push_back(std::move(stratum));
    }
    return {{"strata", strata}};
}

nlohmann::json ring_to_json(const RingElement& r) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : r.terms()) {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& a : mono.atoms) labels.push_back(a.label());
        terms.push_back({{"monomial", labels}, {"coeff", coeff}});
    }
    return {{"rendered", r.to_string()}, {"terms", terms}};
}

} // namespace orbchar
