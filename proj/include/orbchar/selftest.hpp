#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace orbchar {

// Deterministic property suite over randomly generated spaces, groups, ring
// elements, and groupoid models.  Output is byte-identical for a given seed.
// `fault` names a deliberate defect to inject ("chi-sign"), demonstrating
// that the suite detects violations; empty means run clean.  Returns 0 when
// every property holds, 1 on a property failure, 2 on an unknown fault name.
int run_selftest(std::uint64_t seed, const std::string& fault, std::ostream& out);

} // namespace orbchar
