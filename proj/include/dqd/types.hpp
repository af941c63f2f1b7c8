#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace dqd {

// Dense types used throughout the model core. Row-major matches the
// checkpoint wire layout, so tensors serialize without a transpose.
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IntVec = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 1>;

// Production scalar. Tests instantiate the templated core with double
// where finite-difference accuracy matters.
using Real = float;

using TokenId = std::int32_t;

}  // namespace dqd
