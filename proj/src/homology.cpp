#include "pbundle/homology.hpp"

#include <utility>

#include "pbundle/errors.hpp"
#include "pbundle/smith.hpp"

namespace pbundle {

HomologyProfile integralHomology(const CwComplex2& m) {
    auto [d1, d2] = boundaryMatrices(m);
    HomologyProfile h;
    h.h0 = cokernelInvariants(d1);
    IntMatrix cycles = kernelBasis(d1);
    std::optional<IntMatrix> boundariesInCycles = solveExact(cycles, d2);
    if (!boundariesInCycles)
        throw Error("integralHomology: face boundaries do not lie in the edge cycles");
    h.h1 = cokernelInvariants(*boundariesInCycles);
    h.h2 = freeAbelian(static_cast<long>(kernelRank(d2)));
    return h;
}

CohomologyGroup cohomologyUct(const CwComplex2& m, const FgAbelianGroup& pi, int degree) {
    if (degree < 0 || degree > 3)
        throw DomainError("cohomology: degree must be between 0 and 3");
    HomologyProfile h = integralHomology(m);
    auto homologyAt = [&](int n) -> FgAbelianGroup {
        switch (n) {
            case 0: return h.h0;
            case 1: return h.h1;
            case 2: return h.h2;
            default: return FgAbelianGroup{};
        }
    };
    FgAbelianGroup value =
        directSum(homGroup(homologyAt(degree), pi), extGroup(homologyAt(degree - 1), pi));
    return CohomologyGroup{degree, pi, std::move(value)};
}

CohomologyGroup cohomologyDirect(const CwComplex2& m, const FgAbelianGroup& pi, int degree) {
    if (degree < 0 || degree > 3)
        throw DomainError("cohomology: degree must be between 0 and 3");
    auto [d1, d2] = boundaryMatrices(m);
    const Index dims[4] = {d1.rows(), d1.cols(), d2.cols(), 0};
    // coboundary out of degree n is the transpose of the boundary into it
    auto coboundary = [&](int n) -> IntMatrix {
        switch (n) {
            case 0: return d1.transpose();
            case 1: return d2.transpose();
            default: return IntMatrix::Zero(n >= 0 && n < 3 ? dims[n + 1] : 0,
                                            n >= 0 && n <= 3 ? dims[n] : 0);
        }
    };
    IntMatrix out = coboundary(degree);
    IntMatrix in = degree == 0 ? IntMatrix::Zero(dims[0], 0) : coboundary(degree - 1);

    FgAbelianGroup value;
    auto addPiece = [&](const Int& order) {
        // order 0 stands for a Z summand of the coefficients
        IntMatrix cocycles = order == 0 ? kernelBasis(out) : kernelLatticeMod(out, order);
        IntMatrix relations;
        if (order == 0) {
            relations = in;
        } else {
            relations.resize(dims[degree], in.cols() + dims[degree]);
            relations.leftCols(in.cols()) = in;
            relations.rightCols(dims[degree]) =
                IntMatrix::Identity(dims[degree], dims[degree]) * order;
        }
        value = directSum(value, subquotient(cocycles, relations));
    };
    for (long i = 0; i < pi.free_rank; ++i) addPiece(Int(0));
    for (const Int& d : pi.factors) addPiece(d);
    return CohomologyGroup{degree, pi, std::move(value)};
}

}  // namespace pbundle
