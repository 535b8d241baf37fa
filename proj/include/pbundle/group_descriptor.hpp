#pragma once

#include "pbundle/abelian.hpp"

#include <string>
#include <vector>

namespace pbundle {

enum class Provenance { Catalog, Explicit, Product, CoveringQuotient };

/* A structure group reduced to exactly what the classification consumes:
 * pi0 and pi1 plus the hypothesis flags. No Lie-theoretic data. */
struct GroupDescriptor {
    std::string name;
    FgAbelianGroup pi0, pi1;
    bool pi0_discrete = true;
    bool pi0_abelian = true;  // false only via explicit user descriptors
    bool trivial_action = true;
    Provenance provenance = Provenance::Explicit;

    bool satisfiesHypotheses() const { return pi0_discrete && pi0_abelian && trivial_action; }
};

/* Grammar: "U(n)" (n>=1, pi1=Z) | "SU(n)" (n>=2) | "Sp(n)" (n>=1) |
 * "SO(3)" and "SO(n)" (n>=5, pi1=Z/2) | "T^k" (k>=1, pi1=Z^k) |
 * "Z/m" | "Z" | "0" | products joined with "x" |
 * explicit JSON {"pi0": {"free_rank":r,"factors":[...]}, "pi1": {...},
 * "pi0_discrete": bool, "trivial_action": bool} (optional "pi0_abelian",
 * "name"). SO(4), SO(n<3) and O(n) are rejected: the catalog asserts only
 * facts it can back; model them with an explicit descriptor instead. */
GroupDescriptor parseGroupSpec(const std::string& text);

// Componentwise direct sums of pi0/pi1; flags conjoined.
GroupDescriptor productDescriptor(const GroupDescriptor& a, const GroupDescriptor& b);

// G = G~/Gamma with G~ simply connected: pi0 = 0, pi1 = Gamma. Gamma must be
// finite (a discrete central subgroup); model anything else explicitly.
GroupDescriptor coveringQuotient(const FgAbelianGroup& gamma);

struct CatalogEntry {
    std::string family, constraint, pi0, pi1;
};
std::vector<CatalogEntry> catalogEntries();

} // namespace pbundle
