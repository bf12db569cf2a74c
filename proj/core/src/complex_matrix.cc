// Copyright 2026 The qsep Authors
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

#include "qsep/complex_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qsep/error.h"

namespace qsep {

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim),
      entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative dimension");
  }
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 0 || entries_.size() != static_cast<std::size_t>(dim) *
                                        static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                    " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::Identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(std::span<const double> diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::OuterProduct(std::span<const Complex> v) {
  ComplexMatrix m(static_cast<int>(v.size()));
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::Adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  }
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Complex Trace(const ComplexMatrix& m) {
  Complex sum = 0.0;
  for (int i = 0; i < m.dim(); ++i) sum += m(i, i);
  return sum;
}

Complex TraceOfProduct(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "trace of product");
  }
  Complex sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) sum += a(r, c) * b(c, r);
  }
  return sum;
}

double MaxHermitianAsymmetry(const ComplexMatrix& m) {
  double worst = 0.0;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = r; c < m.dim(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

ComplexMatrix Symmetrized(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    }
  }
  return out;
}

double FrobeniusNorm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double OffDiagonalNorm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (r != c) sum += std::norm(m(r, c));
    }
  }
  return std::sqrt(sum);
}

double MaxAbsEntry(const ComplexMatrix& m) {
  double worst = 0.0;
  for (const Complex& z : m.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

}  // namespace qsep
