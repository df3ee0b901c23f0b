// Copyright 2026 The framefree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "framefree/core/linalg.hpp"
#include "framefree/core/states.hpp"

namespace framefree {

/// Kronecker product, composite index i = i_a · rows(b) + i_b.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Vector tensor(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    return StateVector::normalized(tensor(a.amplitudes(), b.amplitudes()));
}

/// Reduced state on the factors listed in `keep` (0-based factor indices,
/// factor 0 most significant). `dims` gives every factor's dimension.
inline DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::size_t> keep,
                                     std::span<const std::size_t> dims) {
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (dims.empty() || total != rho.dim()) {
        throw std::invalid_argument("partial_trace: factor dimensions do not match the state");
    }
    std::vector<bool> kept(dims.size(), false);
    for (std::size_t k : keep) {
        if (k >= dims.size()) throw std::invalid_argument("partial_trace: kept factor index out of range");
        if (kept[k]) throw std::invalid_argument("partial_trace: duplicate kept factor");
        kept[k] = true;
    }
    if (keep.size() == dims.size()) return rho;

    // Row-major strides of the full composite index.
    std::vector<std::size_t> stride(dims.size());
    std::size_t s = 1;
    for (std::size_t f = dims.size(); f-- > 0;) {
        stride[f] = s;
        s *= dims[f];
    }
    std::size_t keep_dim = 1;
    std::size_t trace_dim = 1;
    for (std::size_t f = 0; f < dims.size(); ++f) (kept[f] ? keep_dim : trace_dim) *= dims[f];

    // Split a (kept, traced) pair of sub-indices into the full index.
    auto full_index = [&](std::size_t kept_idx, std::size_t traced_idx) {
        std::size_t idx = 0;
        for (std::size_t f = dims.size(); f-- > 0;) {
            std::size_t digit;
            if (kept[f]) {
                digit = kept_idx % dims[f];
                kept_idx /= dims[f];
            } else {
                digit = traced_idx % dims[f];
                traced_idx /= dims[f];
            }
            idx += digit * stride[f];
        }
        return static_cast<Eigen::Index>(idx);
    };

    const Matrix& m = rho.matrix();
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(keep_dim));
    for (std::size_t a = 0; a < keep_dim; ++a) {
        for (std::size_t b = 0; b < keep_dim; ++b) {
            cplx acc{0.0, 0.0};
            for (std::size_t t = 0; t < trace_dim; ++t) acc += m(full_index(a, t), full_index(b, t));
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
        }
    }
    return DensityOperator::from_trusted(std::move(out));
}

inline DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::size_t> keep,
                                     std::initializer_list<std::size_t> dims) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()),
                         std::span<const std::size_t>(dims.begin(), dims.size()));
}

}  // namespace framefree
