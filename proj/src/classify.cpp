#include "pbundle/classify.hpp"

#include <utility>

#include "pbundle/errors.hpp"

namespace pbundle {

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::IsomorphicToKernel: return "IsomorphicToKernel";
        case Verdict::IsomorphicToQuotient: return "IsomorphicToQuotient";
        case Verdict::BothTrivial: return "BothTrivial";
        case Verdict::ExtensionUndetermined: return "ExtensionUndetermined";
    }
    return "ExtensionUndetermined";
}

namespace {

void requireHypotheses(const GroupDescriptor& g) {
    if (!g.pi0_abelian)
        throw HypothesisViolation("pi0_abelian",
                                  "the component group of \"" + g.name + "\" is not abelian");
    if (!g.pi0_discrete)
        throw HypothesisViolation("pi0_discrete",
                                  "the component group of \"" + g.name + "\" is not discrete");
    if (!g.trivial_action)
        throw HypothesisViolation("trivial_action",
                                  "the component group of \"" + g.name +
                                      "\" acts nontrivially on higher homotopy");
}

Cardinality cardinalityOf(const FgAbelianGroup& a) {
    if (auto n = cardinality(a)) return Cardinality::finite(*n);
    return Cardinality::infinite();
}

}  // namespace

ClassificationResult classify(const CwComplex2& m, const GroupDescriptor& g) {
    validate(m);
    requireHypotheses(g);

    ClassificationResult r;
    r.complex_name = m.name;
    r.group_name = g.name;
    r.kernel_term = cohomologyUct(m, g.pi1, 2);
    r.quotient_term = cohomologyUct(m, g.pi0, 1);

    const bool kernelTrivial = r.kernel_term.group.trivial();
    const bool quotientTrivial = r.quotient_term.group.trivial();
    r.citations.push_back(tag::kExactSequence);
    if (kernelTrivial && quotientTrivial) {
        r.verdict = Verdict::BothTrivial;
        r.classified_group = FgAbelianGroup{};
        r.cardinality = Cardinality::finite(1);
        r.citations.push_back(tag::kTrivialBundle);
    } else if (quotientTrivial) {
        r.verdict = Verdict::IsomorphicToKernel;
        r.classified_group = r.kernel_term.group;
        r.cardinality = cardinalityOf(r.kernel_term.group);
        r.citations.push_back(tag::kKernelCase);
    } else if (kernelTrivial) {
        r.verdict = Verdict::IsomorphicToQuotient;
        r.classified_group = r.quotient_term.group;
        r.cardinality = cardinalityOf(r.quotient_term.group);
        r.citations.push_back(tag::kQuotientCase);
        if (g.pi1.trivial()) r.citations.push_back(tag::kDiscreteCase);
    } else {
        r.verdict = Verdict::ExtensionUndetermined;
        r.cardinality = Cardinality::unknown();
    }
    if (g.name == "U(1)") r.citations.push_back(tag::kCircleGroup);

    if (auto surface = recognizeClosedSurface(m)) {
        if (std::holds_alternative<OrientableSurface>(*surface)) {
            if (std::get<OrientableSurface>(*surface).genus == 0)
                r.applied_shortcuts.push_back(tag::kSphere);
            else
                r.applied_shortcuts.push_back(tag::kOrientable);
        } else {
            r.applied_shortcuts.push_back(tag::kNonOrientable);
        }
    }
    if (g.provenance == Provenance::CoveringQuotient)
        r.applied_shortcuts.push_back(tag::kWitten);
    return r;
}

FgAbelianGroup classifySphere(const GroupDescriptor& g, int n) {
    requireHypotheses(g);
    if (n == 1) return g.pi0;
    if (n == 2) return g.pi1;
    throw DomainError("classifySphere: only S^1 and S^2 are available");
}

FgAbelianGroup surfaceClosedForm(const ClosedSurface& surface, const FgAbelianGroup& pi) {
    if (std::holds_alternative<OrientableSurface>(surface)) return pi;
    return quotientByInteger(pi, 2);
}

WittenReport wittenCrossCheck(const FgAbelianGroup& gamma, long genus) {
    WittenReport w;
    w.gamma = gamma;
    w.details = classify(buildOrientableSurface(genus), coveringQuotient(gamma));
    w.engine_value = w.details.classified_group.value_or(FgAbelianGroup{});
    w.consistent = w.details.classified_group.has_value() && w.engine_value == gamma;
    return w;
}

}  // namespace pbundle
