#pragma once

#include <complex>
#include <vector>

#include "holonomy/error.hpp"

namespace holonomy::linalg {

using Complex = std::complex<double>;

// Projector invariant tolerances.
inline constexpr double kProjectorHermitianTol = 1e-12;
inline constexpr double kProjectorIdempotentTol = 1e-10;
inline constexpr double kProjectorTraceTol = 1e-10;
// Precondition tolerances for the eigensolvers.
inline constexpr double kHermitianCheckTol = 1e-10;
inline constexpr double kUnitaryCheckTol = 1e-10;
// Eigenvalues of (U+U†)/2 closer than this are treated as one block and
// disambiguated by (U-U†)/(2i).
inline constexpr double kDegeneracyGroupTol = 1e-8;

/// Dense square complex matrix, row-major, value semantics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entrywise modulus (the max norm used by all tolerance checks).
  double max_abs() const;
  bool all_finite() const;

  bool is_hermitian(double tol) const;
  /// max norm of U†U - I against tol.
  bool is_unitary(double tol) const;

  const std::vector<Complex>& data() const { return a_; }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Rank-1 orthogonal projector. Construction validates the invariants
/// (Hermitian to 1e-12, idempotent to 1e-10, trace 1 to 1e-10).
class Projector {
 public:
  static Projector from_matrix(const ComplexMatrix& m);
  static Projector from_unit_vector(const std::vector<Complex>& v);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

  /// Tr(P Q); real and in [0,1] for rank-1 orthogonal projectors.
  double overlap(const Projector& other) const;

  /// A unit vector spanning the range (largest-diagonal column, normalized,
  /// with a deterministic phase convention).
  std::vector<Complex> range_vector() const;

 private:
  explicit Projector(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Projector> projectors;
};

struct UnitaryEig {
  std::vector<double> eigenphases;  // ascending, principal branch (-pi, pi]
  std::vector<Projector> projectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
/// repeated calls on the same matrix are bit-identical.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Spectral decomposition of a unitary via simultaneous diagonalization of
/// the commuting Hermitian pair A=(U+U†)/2, B=(U-U†)/(2i). A is diagonalized
/// first; B is diagonalized within A's degenerate blocks.
UnitaryEig unitary_eig(const ComplexMatrix& u);

/// exp(-i H t) through the spectral decomposition of H.
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double t);

/// Wrap an angle onto the principal branch (-pi, pi].
double principal_angle(double theta);

/// |a - b| on the circle, result in [0, pi].
double circular_distance(double a, double b);

}  // namespace holonomy::linalg
