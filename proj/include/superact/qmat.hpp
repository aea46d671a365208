// Copyright 2026 The superactivation-sim Authors
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
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace superact {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline constexpr double kHermTol = 1e-10;

/// One tensor factor: a short label and its local dimension.
struct Factor {
    std::string label;
    Eigen::Index dim;
};

/// Ordered list of tensor factors. The leftmost factor is the most
/// significant index (big-endian), so a composite row index r decodes as
/// r = ((i0 * d1 + i1) * d2 + i2) * ...
class SystemLayout {
  public:
    SystemLayout() = default;
    SystemLayout(std::initializer_list<Factor> factors);
    explicit SystemLayout(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    const Factor& operator[](std::size_t i) const { return factors_[i]; }

    /// Product of all factor dimensions.
    Eigen::Index total_dim() const;

    /// Position of a label; throws std::invalid_argument if absent.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const;

    /// Sub-layout of the named factors, in original relative order.
    SystemLayout keep(const std::vector<std::string>& labels) const;
    /// Complement of `labels` within this layout.
    std::vector<std::string> complement(const std::vector<std::string>& labels) const;

    /// Same layout with one factor's dimension replaced.
    SystemLayout with_dim(const std::string& label, Eigen::Index new_dim) const;

    bool operator==(const SystemLayout& other) const;

  private:
    void validate() const;
    std::vector<Factor> factors_;
};

/// Kronecker product; row index r of the result decodes as
/// r = r_a * b.rows() + r_b.
CMat kron(const CMat& a, const CMat& b);

/// Kronecker product of a list, folded left to right.
CMat kron_all(const std::vector<CMat>& ms);

/// Trace out every factor not named in `keep`. The result lives on the
/// kept factors in their original relative order; Tr is preserved.
std::pair<CMat, SystemLayout> partial_trace(const CMat& m, const SystemLayout& layout,
                                            const std::vector<std::string>& keep);

/// Transpose only the indices of the named factors. Involutive.
CMat partial_transpose(const CMat& m, const SystemLayout& layout,
                       const std::vector<std::string>& transpose_on);

/// Real eigenvalues of a Hermitian matrix, ascending. The input is
/// symmetrized as (m + m^dag)/2; deviations beyond kHermTol throw.
std::vector<double> hermitian_eigenvalues(const CMat& m);

/// Full Hermitian eigendecomposition (same tolerance handling).
std::pair<Eigen::VectorXd, CMat> hermitian_eigensystem(const CMat& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMat& m);

/// Max-abs deviation of m from m^dag.
double hermiticity_defect(const CMat& m);

CMat identity(Eigen::Index n);

}  // namespace superact
