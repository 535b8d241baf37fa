#include "pbundle/int_matrix.hpp"

#include "pbundle/errors.hpp"

namespace pbundle {

// Bareiss fraction-free elimination: every division below is exact.
Int exactDeterminant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("exactDeterminant: matrix must be square");
    const Index n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            Index p = -1;
            for (Index i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            w.row(k).swap(w.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    Int det = w(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

}  // namespace pbundle
