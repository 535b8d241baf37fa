#pragma once

#include "pbundle/cw_complex.hpp"
#include "pbundle/group_descriptor.hpp"
#include "pbundle/homology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbundle {

/* Rule tags attached to results so output can cite what was applied;
 * emitted verbatim in reports and the JSON "citations" array. */
namespace tag {
inline constexpr const char* kExactSequence = "Thm 4.2 / Eq. (HBH)";
inline constexpr const char* kQuotientCase = "Eq. (B-H1)";
inline constexpr const char* kDiscreteCase = "Eq. (B-H1a)";
inline constexpr const char* kKernelCase = "Eq. (B-H2)";
inline constexpr const char* kCircleGroup = "Eq. (BG-U1)";
inline constexpr const char* kSphere = "Eq. (sphere)";
inline constexpr const char* kOrientable = "Eq. (M-comp)";
inline constexpr const char* kNonOrientable = "Eq. (M-noncomp)";
inline constexpr const char* kWitten = "§4 (Witten)";
inline constexpr const char* kTrivialBundle = "§4 (trivial-bundle corollary)";
} // namespace tag

enum class Verdict {
    IsomorphicToKernel,   // quotient term trivial, kernel term not
    IsomorphicToQuotient, // kernel term trivial, quotient term not
    BothTrivial,          // only the trivial bundle exists
    ExtensionUndetermined // both terms nontrivial; middle term not computed
};

std::string verdictName(Verdict v);

struct Cardinality {
    enum Kind { Finite, Infinite, Unknown } kind = Unknown;
    Int value = 0; // meaningful only when Finite

    static Cardinality finite(Int n) { return {Finite, std::move(n)}; }
    static Cardinality infinite() { return {Infinite, 0}; }
    static Cardinality unknown() { return {Unknown, 0}; }
    bool operator==(const Cardinality&) const = default;
};

/* The computed classification: the two flanking cohomology terms of the
 * exact sequence, a verdict, and the group of bundle classes whenever the
 * sequence collapses to one side. The basepoint (trivial bundle class) is
 * implicit in every verdict. classified_group stays empty exactly in the
 * ExtensionUndetermined case; asserting more would overreach. */
struct ClassificationResult {
    std::string complex_name, group_name;
    CohomologyGroup kernel_term;   // H^2(M; pi1 G)
    CohomologyGroup quotient_term; // H^1(M; pi0 G)
    Verdict verdict = Verdict::ExtensionUndetermined;
    std::optional<FgAbelianGroup> classified_group;
    Cardinality cardinality;
    std::vector<std::string> citations;         // rules of the verdict
    std::vector<std::string> applied_shortcuts; // recognized closed forms
};

// Requires a valid path-connected complex and a descriptor with
// pi0_abelian, pi0_discrete, trivial_action all true (HypothesisViolation
// names the offending flag otherwise).
ClassificationResult classify(const CwComplex2& m, const GroupDescriptor& g);

// Bundles over S^n, n in {1, 2}: pi_{n-1}(G). Same hypothesis checks.
FgAbelianGroup classifySphere(const GroupDescriptor& g, int n);

// H^2 of a closed surface with coefficients pi: orientable -> pi,
// non-orientable -> pi/2pi.
FgAbelianGroup surfaceClosedForm(const ClosedSurface& surface, const FgAbelianGroup& pi);

struct WittenReport {
    FgAbelianGroup gamma, engine_value;
    bool consistent = false;
    ClassificationResult details;
};

// classify(Sigma_genus, coveringQuotient(gamma)) must reproduce gamma.
WittenReport wittenCrossCheck(const FgAbelianGroup& gamma, long genus);

} // namespace pbundle
