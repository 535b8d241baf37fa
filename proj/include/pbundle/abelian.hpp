#pragma once

#include "pbundle/compat.hpp"
#include "pbundle/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pbundle {

using Int = boost::multiprecision::cpp_int;

/* Canonical form of a finitely generated abelian group:
 * Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
 * Uniqueness of this form makes isomorphism testing plain equality. */
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> factors;

    bool trivial() const { return free_rank == 0 && factors.empty(); }
    bool finite() const { return free_rank == 0; }
    bool operator==(const FgAbelianGroup&) const = default;
};

inline const FgAbelianGroup kTrivialGroup{};
inline const FgAbelianGroup kZ{1, {}};

// Canonical form of (+)_i Z/entry_i + Z^(ambient_rank - #entries); entries
// enter as |entry|, Z/0 counts as Z, Z/1 vanishes. Rejects ambient_rank < #entries.
FgAbelianGroup canonicalize(std::vector<Int> diagonal, long ambient_rank);

inline FgAbelianGroup cyclic(Int d) { return canonicalize({std::move(d)}, 1); }
inline FgAbelianGroup freeAbelian(long rank) { return canonicalize({}, rank); }

FgAbelianGroup directSum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Hom(a, b): Hom(Z, B) = B, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
FgAbelianGroup homGroup(const FgAbelianGroup& a, const FgAbelianGroup& b);

// Ext^1(a, b): Ext(Z, B) = 0, Ext(Z/d, B) = B/dB.
FgAbelianGroup extGroup(const FgAbelianGroup& a, const FgAbelianGroup& b);

// a / m*a for m >= 1.
FgAbelianGroup quotientByInteger(const FgAbelianGroup& a, const Int& m);

// Product of invariant factors; nullopt when the group is infinite.
std::optional<Int> cardinality(const FgAbelianGroup& a);

// All tuples (x_1,...,x_k), 0 <= x_i < d_i, basepoint (0,...,0) first.
// Rejects infinite groups.
std::vector<std::vector<Int>> enumerateElements(const FgAbelianGroup& a);

// "0", "Z", "Z/6", "Z ⊕ Z/2 ⊕ Z/4" (free part first); ASCII joins with " + ".
std::string renderGroup(const FgAbelianGroup& a, bool ascii = false);

} // namespace pbundle
