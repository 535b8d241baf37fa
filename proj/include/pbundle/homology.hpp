#pragma once

#include "pbundle/abelian.hpp"
#include "pbundle/cw_complex.hpp"

namespace pbundle {

struct HomologyProfile {
    FgAbelianGroup h0, h1, h2; // h0 == Z for path-connected input
};

// H0 = coker(d1), H1 = ker(d1)/im(d2), H2 = ker(d2) (free), all via SNF.
HomologyProfile integralHomology(const CwComplex2& m);

struct CohomologyGroup {
    int degree = 0; // 0..3; degree 3 is always trivial on a 2-complex
    FgAbelianGroup coefficients, group;
};

// Universal-coefficient route: H^n(M;pi) = Hom(H_n, pi) + Ext(H_{n-1}, pi),
// with H_{-1} = H_3 = 0. The splitting is unnatural, but only the
// isomorphism type is reported. Production path.
CohomologyGroup cohomologyUct(const CwComplex2& m, const FgAbelianGroup& pi, int degree);

/* Independent second opinion: cochain complex Hom(C_n, pi) with coboundaries
 * the transposed boundary matrices. pi is split into cyclic factors; the Z/d
 * case lifts to Z by augmenting coboundaries with d*I blocks before SNF.
 * Contract: isomorphic to cohomologyUct's output in every degree. */
CohomologyGroup cohomologyDirect(const CwComplex2& m, const FgAbelianGroup& pi, int degree);

} // namespace pbundle
