#pragma once

#include "pbundle/abelian.hpp"
#include "pbundle/int_matrix.hpp"

#include <optional>
#include <vector>

namespace pbundle {

/* u * a * v = s with u, v unimodular and s diagonal, non-negative entries,
 * each nonzero entry dividing the next, zeros trailing. uinv is u^-1,
 * accumulated alongside u; it turns SNF into a lattice-basis machine
 * (column span of a = span of the first `rank` columns of uinv * s). */
struct SnfDecomposition {
    IntMatrix u, s, v, uinv;
    Index rows = 0, cols = 0; // shape of the decomposed matrix
    Index rank = 0;           // number of nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

SnfDecomposition smithNormalForm(const IntMatrix& a);

Index kernelRank(const IntMatrix& a);

// Columns form a basis of ker(a) as a sublattice of Z^cols (the basis is
// part of a unimodular basis, so integer vectors in the span have integer
// coordinates).
IntMatrix kernelBasis(const IntMatrix& a);

// Basis of {x in Z^cols : a*x == 0 mod d}; d == 0 degenerates to kernelBasis.
IntMatrix kernelLatticeMod(const IntMatrix& a, const Int& d);

// Columns form a basis of the lattice spanned by spanCols' columns.
IntMatrix latticeBasis(const IntMatrix& spanCols);

// Integer solutions of a*x = b, column-wise; nullopt if any column has none.
std::optional<IntMatrix> solveExact(const IntMatrix& a, const IntMatrix& b);

// Canonical form of Z^rows / (column span of a).
FgAbelianGroup cokernelInvariants(const IntMatrix& a);

// span(basisCols) / span(relationCols); relation columns must lie in the
// span of basisCols (columns independent), as d1*d2 = 0 guarantees for
// homology. Throws DomainError otherwise.
FgAbelianGroup subquotient(const IntMatrix& basisCols, const IntMatrix& relationCols);

} // namespace pbundle
