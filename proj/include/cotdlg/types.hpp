// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace cotdlg {

using TokenId = std::int32_t;

/// One joint token vector: slot m holds the stream-m token id.
/// Text and special frames carry the null pad in slots 2..M.
using Frame = std::vector<TokenId>;

template <class S>
using RowMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
using ColVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MaskMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

using MatF = RowMatrix<float>;
using MatD = RowMatrix<double>;

}  // namespace cotdlg
