#pragma once

#include "pbundle/classify.hpp"

#include <string>
#include <variant>
#include <vector>

namespace pbundle {

using OracleValue = std::variant<std::monostate, Int, FgAbelianGroup>;

std::string renderOracleValue(const OracleValue& v, bool ascii = false);

struct OracleReport {
    std::string subject;
    OracleValue engine_value, oracle_value;
    bool agreement = false; // values canonically equal
    bool applicable = true; // false: no independent route exists, skipped
};

// Candidate spaces above this size are refused, never truncated.
inline constexpr long long kEnumerationLimit = 10'000'000;

/* Counts homomorphisms from the abelianized fundamental group into the
 * finite group a by exhaustive enumeration of generator images checked
 * against the relators, and compares with |H^1(M; a)| from the UCT path. */
OracleReport h1HomCounting(const CwComplex2& m, const FgAbelianGroup& a);

// One report per degree 0..3 comparing the UCT and direct cochain paths.
std::vector<OracleReport> uctVsDirect(const CwComplex2& m, const FgAbelianGroup& pi);

/* For an isomorphism verdict with finite classified group: enumerates its
 * elements and compares the count with the independent closed-form route
 * (sphere formula or surface closed form). Reports not-applicable when no
 * such route exists for m. */
OracleReport finiteClassEnumeration(const CwComplex2& m, const GroupDescriptor& g);

} // namespace pbundle
