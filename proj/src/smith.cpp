#include "pbundle/smith.hpp"

#include <algorithm>
#include <utility>

#include "pbundle/errors.hpp"

namespace pbundle {

namespace {

// Row/column eliminator that keeps u * original * v equal to the current
// matrix, with uinv maintained as the exact inverse of u throughout.
struct Reducer {
    IntMatrix a, u, uinv, v;

    explicit Reducer(const IntMatrix& m)
        : a(m),
          u(IntMatrix::Identity(m.rows(), m.rows())),
          uinv(IntMatrix::Identity(m.rows(), m.rows())),
          v(IntMatrix::Identity(m.cols(), m.cols())) {}

    void swapRows(Index i, Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
        uinv.col(i).swap(uinv.col(j));
    }

    void swapCols(Index i, Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
    }

    // row i -= q * row j; inverse bookkeeping adds q * col i onto col j
    void rowAxpy(Index i, Index j, const Int& q) {
        if (q == 0) return;
        a.row(i) -= q * a.row(j);
        u.row(i) -= q * u.row(j);
        uinv.col(j) += q * uinv.col(i);
    }

    // col i -= q * col j
    void colAxpy(Index i, Index j, const Int& q) {
        if (q == 0) return;
        a.col(i) -= q * a.col(j);
        v.col(i) -= q * v.col(j);
    }

    void negateRow(Index i) {
        a.row(i) = -a.row(i);
        u.row(i) = -u.row(i);
        uinv.col(i) = -uinv.col(i);
    }
};

Int absValue(const Int& x) { return x < 0 ? Int(-x) : x; }

// Clear row t and column t of the active block, leaving a nonzero pivot at
// (t,t). Returns false when the active block is entirely zero.
bool reducePivot(Reducer& r, Index t) {
    const Index n = r.a.rows();
    const Index m = r.a.cols();
    for (;;) {
        Index pi = -1, pj = -1;
        for (Index j = t; j < m; ++j)
            for (Index i = t; i < n; ++i) {
                if (r.a(i, j) == 0) continue;
                if (pi < 0 || absValue(r.a(i, j)) < absValue(r.a(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return false;
        r.swapRows(t, pi);
        r.swapCols(t, pj);
        bool clean = true;
        for (Index i = t + 1; i < n; ++i) {
            if (r.a(i, t) == 0) continue;
            r.rowAxpy(i, t, Int(r.a(i, t) / r.a(t, t)));
            if (r.a(i, t) != 0) clean = false;
        }
        for (Index j = t + 1; j < m; ++j) {
            if (r.a(t, j) == 0) continue;
            r.colAxpy(j, t, Int(r.a(t, j) / r.a(t, t)));
            if (r.a(t, j) != 0) clean = false;
        }
        if (clean) return true;
    }
}

// Replace the diagonal pair (d_i, d_j) by (gcd, lcm) without disturbing the
// rest of the diagonal.
void fixDivisibility(Reducer& r, Index i, Index j) {
    r.colAxpy(i, j, Int(-1));  // col i picks up d_j at row j
    while (r.a(j, i) != 0) {
        r.rowAxpy(i, j, Int(r.a(i, i) / r.a(j, i)));
        r.swapRows(i, j);
    }
    r.colAxpy(j, i, Int(r.a(i, j) / r.a(i, i)));
    if (r.a(i, i) < 0) r.negateRow(i);
    if (r.a(j, j) < 0) r.negateRow(j);
}

}  // namespace

std::vector<Int> SnfDecomposition::diagonal() const {
    const Index n = std::min(rows, cols);
    std::vector<Int> d;
    d.reserve(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) d.push_back(s(i, i));
    return d;
}

SnfDecomposition smithNormalForm(const IntMatrix& a) {
    Reducer r(a);
    const Index dmax = std::min(a.rows(), a.cols());
    Index rank = 0;
    while (rank < dmax && reducePivot(r, rank)) ++rank;
    for (Index i = 0; i < rank; ++i)
        if (r.a(i, i) < 0) r.negateRow(i);
    for (Index i = 0; i < rank; ++i)
        for (Index j = i + 1; j < rank; ++j)
            if (r.a(j, j) % r.a(i, i) != 0) fixDivisibility(r, i, j);
    SnfDecomposition out;
    out.u = std::move(r.u);
    out.s = std::move(r.a);
    out.v = std::move(r.v);
    out.uinv = std::move(r.uinv);
    out.rows = a.rows();
    out.cols = a.cols();
    out.rank = rank;
    return out;
}

Index kernelRank(const IntMatrix& a) { return a.cols() - smithNormalForm(a).rank; }

IntMatrix kernelBasis(const IntMatrix& a) {
    SnfDecomposition f = smithNormalForm(a);
    return f.v.rightCols(a.cols() - f.rank);
}

IntMatrix latticeBasis(const IntMatrix& spanCols) {
    SnfDecomposition f = smithNormalForm(spanCols);
    IntMatrix b(spanCols.rows(), f.rank);
    for (Index i = 0; i < f.rank; ++i) b.col(i) = f.uinv.col(i) * f.s(i, i);
    return b;
}

IntMatrix kernelLatticeMod(const IntMatrix& a, const Int& d) {
    if (d < 0) throw DomainError("kernelLatticeMod: modulus must be nonnegative");
    if (d == 0) return kernelBasis(a);
    const Index n = a.rows();
    const Index m = a.cols();
    IntMatrix augmented(n, m + n);
    augmented.leftCols(m) = a;
    augmented.rightCols(n) = IntMatrix::Identity(n, n) * d;
    IntMatrix preimages = kernelBasis(augmented).topRows(m);
    return latticeBasis(preimages);
}

std::optional<IntMatrix> solveExact(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows() != a.rows()) throw DomainError("solveExact: row counts differ");
    SnfDecomposition f = smithNormalForm(a);
    IntMatrix c = f.u * b;
    IntMatrix y = IntMatrix::Zero(a.cols(), b.cols());
    for (Index k = 0; k < b.cols(); ++k) {
        for (Index i = 0; i < f.rank; ++i) {
            if (c(i, k) % f.s(i, i) != 0) return std::nullopt;
            y(i, k) = c(i, k) / f.s(i, i);
        }
        for (Index i = f.rank; i < a.rows(); ++i)
            if (c(i, k) != 0) return std::nullopt;
    }
    return IntMatrix(f.v * y);
}

FgAbelianGroup cokernelInvariants(const IntMatrix& a) {
    SnfDecomposition f = smithNormalForm(a);
    return canonicalize(f.diagonal(), static_cast<long>(a.rows()));
}

FgAbelianGroup subquotient(const IntMatrix& basisCols, const IntMatrix& relationCols) {
    std::optional<IntMatrix> y = solveExact(basisCols, relationCols);
    if (!y) throw DomainError("subquotient: relations do not lie in the span of the basis");
    return cokernelInvariants(*y);
}

}  // namespace pbundle
