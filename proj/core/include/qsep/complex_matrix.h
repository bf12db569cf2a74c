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

#ifndef QSEP_COMPLEX_MATRIX_H_
#define QSEP_COMPLEX_MATRIX_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qsep {

using Complex = std::complex<double>;

// Dense square complex matrix. Storage is row-major: entry (r, c) lives at
// index r * dim + c. The file formats depend on this order.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  // Throws kInvalidArgument unless entries.size() == dim * dim.
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix Identity(int dim);
  static ComplexMatrix Zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix Diagonal(std::span<const double> diag);
  // v v^dagger for a column vector v.
  static ComplexMatrix OuterProduct(std::span<const Complex> v);

  int dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(int r, int c) { return entries_[Index(r, c)]; }
  const Complex& operator()(int r, int c) const { return entries_[Index(r, c)]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix Adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(double scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  // Bitwise entry equality.
  friend bool operator==(const ComplexMatrix& a,
                         const ComplexMatrix& b) = default;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }

  int dim_ = 0;
  std::vector<Complex> entries_;
};

// Sum of diagonal entries, accumulated in increasing index order.
Complex Trace(const ComplexMatrix& m);

// Tr(a * b) without forming the product; fixed summation order.
Complex TraceOfProduct(const ComplexMatrix& a, const ComplexMatrix& b);

// max_{r,c} |m(r,c) - conj(m(c,r))|.
double MaxHermitianAsymmetry(const ComplexMatrix& m);

// (m + m^dagger) / 2.
ComplexMatrix Symmetrized(const ComplexMatrix& m);

double FrobeniusNorm(const ComplexMatrix& m);

// Frobenius norm of the strictly off-diagonal part.
double OffDiagonalNorm(const ComplexMatrix& m);

double MaxAbsEntry(const ComplexMatrix& m);

}  // namespace qsep

#endif  // QSEP_COMPLEX_MATRIX_H_
