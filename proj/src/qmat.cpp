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

#include "superact/qmat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace superact {

namespace {

// Decodes a flat index into per-factor digits, big-endian.
void decode(Eigen::Index flat, const std::vector<Eigen::Index>& dims,
            std::vector<Eigen::Index>& out) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
}

Eigen::Index encode(const std::vector<Eigen::Index>& digits,
                    const std::vector<Eigen::Index>& dims) {
    Eigen::Index flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
    return flat;
}

std::vector<Eigen::Index> layout_dims(const SystemLayout& layout) {
    std::vector<Eigen::Index> dims;
    dims.reserve(layout.size());
    for (const auto& f : layout.factors()) dims.push_back(f.dim);
    return dims;
}

void check_square_match(const CMat& m, const SystemLayout& layout) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    if (m.rows() != layout.total_dim())
        throw std::invalid_argument("matrix dimension " + std::to_string(m.rows()) +
                                    " does not match layout dimension " +
                                    std::to_string(layout.total_dim()));
}

}  // namespace

SystemLayout::SystemLayout(std::initializer_list<Factor> factors) : factors_(factors) {
    validate();
}

SystemLayout::SystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    validate();
}

void SystemLayout::validate() const {
    std::set<std::string> seen;
    for (const auto& f : factors_) {
        if (f.dim < 1) throw std::invalid_argument("factor dimension must be >= 1: " + f.label);
        if (!seen.insert(f.label).second)
            throw std::invalid_argument("duplicate factor label: " + f.label);
    }
}

Eigen::Index SystemLayout::total_dim() const {
    Eigen::Index d = 1;
    for (const auto& f : factors_) d *= f.dim;
    return d;
}

std::size_t SystemLayout::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].label == label) return i;
    throw std::invalid_argument("unknown factor label: " + label);
}

bool SystemLayout::contains(const std::string& label) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.label == label; });
}

SystemLayout SystemLayout::keep(const std::vector<std::string>& labels) const {
    for (const auto& l : labels) index_of(l);
    std::vector<Factor> kept;
    for (const auto& f : factors_)
        if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) kept.push_back(f);
    return SystemLayout(std::move(kept));
}

std::vector<std::string> SystemLayout::complement(const std::vector<std::string>& labels) const {
    for (const auto& l : labels) index_of(l);
    std::vector<std::string> rest;
    for (const auto& f : factors_)
        if (std::find(labels.begin(), labels.end(), f.label) == labels.end())
            rest.push_back(f.label);
    return rest;
}

SystemLayout SystemLayout::with_dim(const std::string& label, Eigen::Index new_dim) const {
    std::vector<Factor> fs = factors_;
    fs[index_of(label)].dim = new_dim;
    return SystemLayout(std::move(fs));
}

bool SystemLayout::operator==(const SystemLayout& other) const {
    if (factors_.size() != other.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].label != other.factors_[i].label ||
            factors_[i].dim != other.factors_[i].dim)
            return false;
    return true;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat kron_all(const std::vector<CMat>& ms) {
    if (ms.empty()) throw std::invalid_argument("kron_all: empty operand list");
    CMat acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) acc = kron(acc, ms[i]);
    return acc;
}

std::pair<CMat, SystemLayout> partial_trace(const CMat& m, const SystemLayout& layout,
                                            const std::vector<std::string>& keep) {
    check_square_match(m, layout);
    SystemLayout kept_layout = layout.keep(keep);

    const auto dims = layout_dims(layout);
    const std::size_t n = dims.size();
    std::vector<bool> is_kept(n, false);
    for (const auto& l : keep) is_kept[layout.index_of(l)] = true;

    std::vector<Eigen::Index> kept_dims, traced_dims;
    std::vector<std::size_t> kept_pos, traced_pos;
    for (std::size_t k = 0; k < n; ++k) {
        if (is_kept[k]) {
            kept_dims.push_back(dims[k]);
            kept_pos.push_back(k);
        } else {
            traced_dims.push_back(dims[k]);
            traced_pos.push_back(k);
        }
    }
    const Eigen::Index kd = kept_layout.total_dim();
    const Eigen::Index td =
        std::accumulate(traced_dims.begin(), traced_dims.end(), Eigen::Index{1},
                        std::multiplies<>());

    CMat out = CMat::Zero(kd, kd);
    std::vector<Eigen::Index> ri(kept_dims.size()), ci(kept_dims.size()), ti(traced_dims.size());
    std::vector<Eigen::Index> row_digits(n), col_digits(n);
    for (Eigen::Index r = 0; r < kd; ++r) {
        decode(r, kept_dims, ri);
        for (Eigen::Index c = 0; c < kd; ++c) {
            decode(c, kept_dims, ci);
            Complex sum = 0.0;
            for (Eigen::Index t = 0; t < td; ++t) {
                decode(t, traced_dims, ti);
                for (std::size_t k = 0; k < kept_pos.size(); ++k) {
                    row_digits[kept_pos[k]] = ri[k];
                    col_digits[kept_pos[k]] = ci[k];
                }
                for (std::size_t k = 0; k < traced_pos.size(); ++k) {
                    row_digits[traced_pos[k]] = ti[k];
                    col_digits[traced_pos[k]] = ti[k];
                }
                sum += m(encode(row_digits, dims), encode(col_digits, dims));
            }
            out(r, c) = sum;
        }
    }
    return {std::move(out), std::move(kept_layout)};
}

CMat partial_transpose(const CMat& m, const SystemLayout& layout,
                       const std::vector<std::string>& transpose_on) {
    check_square_match(m, layout);
    const auto dims = layout_dims(layout);
    const std::size_t n = dims.size();
    std::vector<bool> flip(n, false);
    for (const auto& l : transpose_on) flip[layout.index_of(l)] = true;

    const Eigen::Index d = m.rows();
    CMat out(d, d);
    std::vector<Eigen::Index> ri(n), ci(n), ro(n), co(n);
    for (Eigen::Index r = 0; r < d; ++r) {
        decode(r, dims, ri);
        for (Eigen::Index c = 0; c < d; ++c) {
            decode(c, dims, ci);
            for (std::size_t k = 0; k < n; ++k) {
                ro[k] = flip[k] ? ci[k] : ri[k];
                co[k] = flip[k] ? ri[k] : ci[k];
            }
            out(encode(ro, dims), encode(co, dims)) = m(r, c);
        }
    }
    return out;
}

double hermiticity_defect(const CMat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::pair<Eigen::VectorXd, CMat> hermitian_eigensystem(const CMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    if (hermiticity_defect(m) > kHermTol)
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    CMat sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> hermitian_eigenvalues(const CMat& m) {
    auto [evals, evecs] = hermitian_eigensystem(m);
    return {evals.data(), evals.data() + evals.size()};
}

double trace_norm(const CMat& m) {
    auto evals = hermitian_eigenvalues(m);
    double s = 0.0;
    for (double v : evals) s += std::abs(v);
    return s;
}

CMat identity(Eigen::Index n) { return CMat::Identity(n, n); }

}  // namespace superact
