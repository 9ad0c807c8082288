/**
 *
 *  Copyright 2026 The cambi Authors
 *
 *     Licensed under the Apache License, Version 2.0 (the "License");
 *     you may not use this file except in compliance with the License.
 *     You may obtain a copy of the License at
 *
 *         http://www.apache.org/licenses/LICENSE-2.0
 *
 *     Unless required by applicable law or agreed to in writing, software
 *     distributed under the License is distributed on an "AS IS" BASIS,
 *     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *     See the License for the specific language governing permissions and
 *     limitations under the License.
 *
 */

#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace cambi {

// Row-major dense 2-D field. Rows are image lines, columns are pixels.
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using SamplePlane = Plane<std::uint16_t>;
using FieldPlane = Plane<double>;

// Nearest-neighbour replication of `src` by `factor` per axis, clipped to
// rows x cols.
template <typename Scalar>
Plane<Scalar> replicate(const Plane<Scalar>& src, int factor, Eigen::Index rows,
                        Eigen::Index cols) {
  Plane<Scalar> out(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    const Eigen::Index sy = y / factor;
    for (Eigen::Index x = 0; x < cols; ++x) out(y, x) = src(sy, x / factor);
  }
  return out;
}

}  // namespace cambi
