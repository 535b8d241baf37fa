#include "pbundle/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "pbundle/errors.hpp"

namespace pbundle {

namespace {

using boost::multiprecision::gcd;

}  // namespace

FgAbelianGroup canonicalize(std::vector<Int> diagonal, long ambient_rank) {
    if (ambient_rank < 0) throw DomainError("canonicalize: negative ambient rank");
    if (static_cast<long>(diagonal.size()) > ambient_rank)
        throw DomainError("canonicalize: more diagonal entries than ambient rank");
    long free_rank = ambient_rank - static_cast<long>(diagonal.size());
    std::vector<Int> torsion;
    for (Int& d : diagonal) {
        if (d < 0) d = -d;
        if (d == 0)
            ++free_rank;  // a zero relation leaves a free generator
        else if (d > 1)
            torsion.push_back(std::move(d));
    }
    // Merge into a divisibility chain: any offending pair becomes (gcd, lcm).
    // Each pass either strictly grows the entry sum (bounded by the fixed
    // product) or sorts a divisible pair, so the loop terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < torsion.size(); ++i)
            for (size_t j = i + 1; j < torsion.size(); ++j) {
                if (torsion[j] % torsion[i] == 0) continue;
                Int g = gcd(torsion[i], torsion[j]);
                Int l = torsion[i] / g * torsion[j];
                torsion[i] = std::move(g);
                torsion[j] = std::move(l);
                changed = true;
            }
    }
    std::erase(torsion, Int(1));
    std::sort(torsion.begin(), torsion.end());
    return FgAbelianGroup{free_rank, std::move(torsion)};
}

FgAbelianGroup directSum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> entries = a.factors;
    entries.insert(entries.end(), b.factors.begin(), b.factors.end());
    long ambient = a.free_rank + b.free_rank + static_cast<long>(entries.size());
    return canonicalize(std::move(entries), ambient);
}

FgAbelianGroup homGroup(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    FgAbelianGroup out;
    for (long i = 0; i < a.free_rank; ++i) out = directSum(out, b);
    for (const Int& d : a.factors) {
        // Hom(Z/d, B) keeps only the torsion of B, one gcd per factor.
        std::vector<Int> parts;
        parts.reserve(b.factors.size());
        for (const Int& e : b.factors) parts.push_back(gcd(d, e));
        out = directSum(out, canonicalize(std::move(parts), static_cast<long>(b.factors.size())));
    }
    return out;
}

FgAbelianGroup extGroup(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    FgAbelianGroup out;
    for (const Int& d : a.factors) out = directSum(out, quotientByInteger(b, d));
    return out;
}

FgAbelianGroup quotientByInteger(const FgAbelianGroup& a, const Int& m) {
    if (m < 1) throw DomainError("quotientByInteger: multiplier must be positive");
    std::vector<Int> parts;
    parts.reserve(static_cast<size_t>(a.free_rank) + a.factors.size());
    for (long i = 0; i < a.free_rank; ++i) parts.push_back(m);
    for (const Int& e : a.factors) parts.push_back(gcd(e, m));
    long ambient = static_cast<long>(parts.size());
    return canonicalize(std::move(parts), ambient);
}

std::optional<Int> cardinality(const FgAbelianGroup& a) {
    if (!a.finite()) return std::nullopt;
    Int n = 1;
    for (const Int& d : a.factors) n *= d;
    return n;
}

std::vector<std::vector<Int>> enumerateElements(const FgAbelianGroup& a) {
    if (!a.finite()) throw DomainError("enumerateElements: group is infinite");
    std::vector<std::vector<Int>> out;
    std::vector<Int> digits(a.factors.size(), Int(0));
    for (;;) {
        out.push_back(digits);
        size_t pos = 0;
        while (pos < digits.size()) {
            if (++digits[pos] < a.factors[pos]) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
    }
    return out;
}

std::string renderGroup(const FgAbelianGroup& a, bool ascii) {
    if (a.trivial()) return "0";
    const char* joiner = ascii ? " + " : " ⊕ ";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < a.free_rank; ++i) {
        if (!first) os << joiner;
        os << "Z";
        first = false;
    }
    for (const Int& d : a.factors) {
        if (!first) os << joiner;
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

}  // namespace pbundle
