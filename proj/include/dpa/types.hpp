// Copyright 2026 The dpasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace dpa {

using cplx = std::complex<double>;
using SparseMat = Eigen::SparseMatrix<cplx>;
using Vec = Eigen::VectorXcd;
using DenseMat = Eigen::MatrixXcd;

inline constexpr cplx I{0.0, 1.0};

}  // namespace dpa
