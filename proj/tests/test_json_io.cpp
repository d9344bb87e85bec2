#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "orbchar/group_catalog.hpp"
#include "orbchar/json_io.hpp"

using namespace orbchar;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = (std::filesystem::temp_directory_path() /
                ("orbchar-json-test-" + std::to_string(++counter) + ".json"))
                   .string();
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("space round-trip") {
    const json j = json::parse(R"({"strata": [
        {"label": "edge", "cells": {"1": 1}},
        {"label": "pts", "cells": {"0": 2}}
    ]})");
    const auto space = space_from_json(j);
    REQUIRE(space.strata.size() == 2);
    CHECK(euler_char(space) == 1);
    CHECK(space_from_json(space_to_json(space)).strata.size() == 2);
    CHECK(euler_char(space_from_json(space_to_json(space))) == 1);
}

TEST_CASE("group round-trip and validation routing") {
    const auto z3 = *catalog_group("Z/3");
    const auto back = group_from_json(group_to_json(z3));
    CHECK(back.order() == 3);
    CHECK(is_isomorphic(back, z3));

    // Shaped correctly but not a group: semantic error, not a read error.
    const json bad_table = json::parse(R"({"name": "broken", "table": [[0,1],[1,1]]})");
    CHECK_THROWS_AS(group_from_json(bad_table), GroupValidationError);
    // Not even shaped correctly: read error.
    CHECK_THROWS_AS(group_from_json(json::parse(R"({"table": "zap"})")), JsonReadError);
}

TEST_CASE("presentation round-trip") {
    GroupPresentation p;
    p.generators = 2;
    p.relators = {{1, 2, -1, -2}, {1, 1, 1}};
    const auto back = presentation_from_json(presentation_to_json(p));
    CHECK(back.generators == 2);
    CHECK(back.relators == p.relators);
    // Shape problems are read errors; well-shaped but invalid presentations
    // are semantic, mirroring the group-table split.
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"generators": "x"})")), JsonReadError);
    CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"generators": -1})")),
                    PresentationError);
    CHECK_THROWS_AS(
        presentation_from_json(json::parse(R"({"generators": 1, "relators": [[3]]})")),
        PresentationError);
}

TEST_CASE("model round-trip with descriptor and embedded isotropy") {
    const json j = json::parse(R"json({"strata": [
        {"label": "cone-point", "cells": {"0": 1}, "isotropy": "Z/5"},
        {"label": "smooth-part", "cells": {"2": 1}},
        {"label": "wall", "cells": {"1": 1}, "isotropy": "prod(SU2,Z/2)"}
    ]})json");
    const auto m = model_from_json(j);
    REQUIRE(m.strata.size() == 3);
    CHECK(m.strata[0].isotropy.kind == LieGroupDescriptor::Kind::Finite);
    CHECK(m.strata[1].isotropy.is_trivial());
    CHECK(m.strata[2].isotropy.kind == LieGroupDescriptor::Kind::Product);

    const auto back = model_from_json(model_to_json(m));
    REQUIRE(back.strata.size() == 3);
    CHECK(chi_un(back) == chi_un(m));

    // A custom table outside the catalog embeds as {"finite": ...} and
    // survives the round-trip.
    json with_table = json::parse(R"({"strata": [
        {"label": "pt", "cells": {"0": 1}}
    ]})");
    with_table["strata"][0]["isotropy"] = {{"finite", group_to_json(dihedral_group(7))}};
    const auto mt = model_from_json(with_table);
    CHECK(mt.strata[0].isotropy.finite.order() == 14);
    const auto mt_back = model_from_json(model_to_json(mt));
    CHECK(is_isomorphic(mt_back.strata[0].isotropy.finite, dihedral_group(7), 128));
}

TEST_CASE("malformed model documents raise read errors") {
    for (const char* text : {
             R"({})",                                                      // no strata
             R"({"strata": [{"cells": {"0": 1}}]})",                       // no label
             R"({"strata": [{"label": "a"}]})",                            // no cells
             R"({"strata": [{"label": "a", "cells": {"x": 1}}]})",         // bad dim key
             R"({"strata": [{"label": "a", "cells": {"-1": 1}}]})",        // negative dim
             R"({"strata": [{"label": "a", "cells": {"0": 1.5}}]})",       // non-integer count
             R"({"strata": [{"label": "a", "cells": {"0": 1}, "isotropy": 7}]})",
             R"({"strata": [{"label": "a", "cells": {"0": 1}, "isotropy": "E8"}]})",
             R"({"strata": "zap"})",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(model_from_json(json::parse(text)), JsonReadError);
    }
}

TEST_CASE("file loading") {
    const TempFile good(R"({"strata": [{"label": "pt", "cells": {"0": 1}}]})");
    CHECK(model_from_json(load_json_file(good.path)).strata.size() == 1);

    const TempFile bad("{not json");
    CHECK_THROWS_AS(load_json_file(bad.path), JsonReadError);
    CHECK_THROWS_AS(load_json_file("/no/such/file.json"), JsonReadError);
}

TEST_CASE("ring serialization carries both the rendering and the terms") {
    GroupoidModel m;
    m.strata.push_back({"cone-point", {{0, 1}}, parse_descriptor("Z/5")});
    m.strata.push_back({"smooth-part", {{2, 1}}, parse_descriptor("Z/1")});
    const auto j = ring_to_json(chi_un(m));
    CHECK(j.at("rendered").get<std::string>() == "T[Z/5] + 1");
    REQUIRE(j.at("terms").size() == 2);
    bool saw_constant = false, saw_z5 = false;
    for (const auto& term : j.at("terms")) {
        const auto coeff = term.at("coeff").get<std::int64_t>();
        const auto& mono = term.at("monomial");
        if (mono.empty()) saw_constant = coeff == 1;
        if (mono.size() == 1 && mono[0].get<std::string>() == "Z/5") saw_z5 = coeff == 1;
    }
    CHECK(saw_constant);
    CHECK(saw_z5);
}
