#include "pbundle/oracle.hpp"

#include <map>
#include <string>
#include <utility>

#include "pbundle/errors.hpp"

namespace pbundle {

namespace {

Int modReduce(const Int& x, const Int& d) {
    Int r = x % d;
    if (r < 0) r += d;
    return r;
}

std::string describeCoefficients(const FgAbelianGroup& a) { return renderGroup(a, true); }

}  // namespace

std::string renderOracleValue(const OracleValue& v, bool ascii) {
    if (std::holds_alternative<std::monostate>(v)) return "n/a";
    if (std::holds_alternative<Int>(v)) return std::get<Int>(v).str();
    return renderGroup(std::get<FgAbelianGroup>(v), ascii);
}

OracleReport h1HomCounting(const CwComplex2& m, const FgAbelianGroup& a) {
    if (!a.finite()) throw DomainError("h1HomCounting: coefficient group must be finite");
    GroupPresentation pres = fundamentalGroupPresentation(m);
    const size_t k = pres.generators.size();

    Int order = cardinality(a).value();
    Int total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= order;
        if (total > kEnumerationLimit)
            throw EnumerationLimitError("h1HomCounting: " + std::to_string(k) +
                                        " generators over a group of order " + order.str() +
                                        " exceeds the enumeration budget");
    }

    std::map<std::string, size_t> genIndex;
    for (size_t i = 0; i < k; ++i) genIndex[pres.generators[i]] = i;
    // exponent sums per relator (relators already omit tree letters)
    std::vector<std::vector<long>> exponents;
    for (const Word& relator : pres.relators) {
        std::vector<long> e(k, 0);
        for (const Letter& letter : relator) e[genIndex.at(letter.first)] += letter.second;
        exponents.push_back(std::move(e));
    }

    const std::vector<std::vector<Int>> elems = enumerateElements(a);
    const size_t comps = a.factors.size();
    std::vector<size_t> choice(k, 0);
    Int count = 0;
    for (;;) {
        bool ok = true;
        for (const std::vector<long>& e : exponents) {
            for (size_t c = 0; c < comps && ok; ++c) {
                Int acc = 0;
                for (size_t gi = 0; gi < k; ++gi)
                    if (e[gi] != 0) acc += Int(e[gi]) * elems[choice[gi]][c];
                if (modReduce(acc, a.factors[c]) != 0) ok = false;
            }
            if (!ok) break;
        }
        if (ok) ++count;
        size_t pos = 0;
        while (pos < k) {
            if (++choice[pos] < elems.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }

    OracleReport rep;
    rep.subject = "H^1(" + m.name + "; " + describeCoefficients(a) + ") order";
    Int engine = cardinality(cohomologyUct(m, a, 1).group).value();
    rep.engine_value = engine;
    rep.oracle_value = count;
    rep.agreement = engine == count;
    return rep;
}

std::vector<OracleReport> uctVsDirect(const CwComplex2& m, const FgAbelianGroup& pi) {
    std::vector<OracleReport> out;
    for (int degree = 0; degree <= 3; ++degree) {
        FgAbelianGroup viaUct = cohomologyUct(m, pi, degree).group;
        FgAbelianGroup direct = cohomologyDirect(m, pi, degree).group;
        OracleReport rep;
        rep.subject = "H^" + std::to_string(degree) + "(" + m.name + "; " +
                      describeCoefficients(pi) + ")";
        rep.engine_value = viaUct;
        rep.oracle_value = direct;
        rep.agreement = viaUct == direct;
        out.push_back(std::move(rep));
    }
    return out;
}

OracleReport finiteClassEnumeration(const CwComplex2& m, const GroupDescriptor& g) {
    ClassificationResult r = classify(m, g);
    OracleReport rep;
    rep.subject = "bundle count over " + m.name + " for " + g.name;

    auto surface = recognizeClosedSurface(m);
    if (!r.classified_group || r.cardinality.kind != Cardinality::Finite || !surface) {
        rep.applicable = false;
        return rep;
    }
    bool isSphere = std::holds_alternative<OrientableSurface>(*surface) &&
                    std::get<OrientableSurface>(*surface).genus == 0;
    if (!isSphere && !r.quotient_term.group.trivial()) {
        rep.applicable = false;  // closed form only covers the kernel side
        return rep;
    }
    FgAbelianGroup closedForm =
        isSphere ? classifySphere(g, 2) : surfaceClosedForm(*surface, g.pi1);

    if (r.cardinality.value > kEnumerationLimit)
        throw EnumerationLimitError("finiteClassEnumeration: " + r.cardinality.value.str() +
                                    " classes exceed the enumeration budget");
    Int counted = static_cast<long long>(enumerateElements(*r.classified_group).size());

    rep.engine_value = counted;
    if (auto n = cardinality(closedForm)) {
        rep.oracle_value = *n;
        rep.agreement = counted == *n;
    } else {
        rep.oracle_value = closedForm;
        rep.agreement = false;
    }
    return rep;
}

}  // namespace pbundle
