#pragma once

#include "pbundle/compat.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

namespace pbundle {

// Unbounded integers: SNF intermediates can grow exponentially even for small
// inputs, so fixed-width arithmetic would be silently wrong.
using Int = boost::multiprecision::cpp_int;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline bool sameMatrix(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

// Fraction-free Bareiss elimination; exact for any square integer matrix.
Int exactDeterminant(const IntMatrix& a);

} // namespace pbundle
