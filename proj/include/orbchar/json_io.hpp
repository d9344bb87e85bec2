#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/euler_ring.hpp"
#include "orbchar/group.hpp"
#include "orbchar/groupoid.hpp"
#include "orbchar/presentation.hpp"

namespace orbchar {

// Unreadable file, invalid JSON, or JSON that does not match the documented
// schema.  Distinct from the semantic errors (GroupValidationError and
// friends) raised once the data is shaped correctly but mathematically bad.
struct JsonReadError : std::runtime_error {
    explicit JsonReadError(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json load_json_file(const std::string& path);

// {"strata": [{"label": "A", "cells": {"0": 1, "2": 1}}, ...]}
DefinableSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const DefinableSpace& s);

// {"name": "Z/3", "table": [[0,1,2],[1,2,0],[2,0,1]]}
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

// {"generators": 2, "relators": [[1,2,-1,-2]]}
GroupPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const GroupPresentation& p);

// Space schema plus per-stratum "isotropy": either a descriptor string
// ("Z/5", "SU2", "T^2", "prod(SU2,Z/2)") or {"finite": <group schema>} for
// groups outside the bundled catalog.  Omitted isotropy means trivial.
GroupoidModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const GroupoidModel& m);

// {"rendered": "...", "terms": [{"monomial": ["Z/5"], "coeff": 1}, ...]}
nlohmann::json ring_to_json(const RingElement& r);

} // namespace orbchar
