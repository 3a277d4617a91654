#pragma once

#include "tbm/belief.hpp"

namespace tbm {

// Mass functions are row vectors acted on from the right: m' = m * S.
// Row A holds the proportions of m(A) sent to each target subset B; indices
// follow the bitmask encoding of the frame.

bool is_valid_specialization(const Frame& frame, const Matrix& s, double tol = kDefaultTolerance);
bool is_valid_generalization(const Frame& frame, const Matrix& g, double tol = kDefaultTolerance);

// Row A must equal row Omega conditioned on A:
//   s(A, B) = sum over X subset of complement(A) of s(Omega, B u X) for B subset of A, 0 otherwise.
// Assumes a valid specialization.
bool is_dempsterian(const Frame& frame, const Matrix& s, double tol = kDefaultTolerance);

// Row-stochastic, mass flows only to subsets of the source set.
class SpecializationMatrix {
 public:
  // Throws InvalidArgument unless is_valid_specialization holds.
  SpecializationMatrix(Frame frame, Matrix s, double tol = kDefaultTolerance);

  static SpecializationMatrix identity(const Frame& frame);

  const Frame& frame() const { return frame_; }
  const Matrix& matrix() const { return s_; }
  double operator()(Subset from, Subset to) const { return s_(from.bits(), to.bits()); }

 private:
  Frame frame_;
  Matrix s_;
};

// Row-stochastic, mass flows only to supersets of the source set.
class GeneralizationMatrix {
 public:
  GeneralizationMatrix(Frame frame, Matrix g, double tol = kDefaultTolerance);

  const Frame& frame() const { return frame_; }
  const Matrix& matrix() const { return g_; }
  double operator()(Subset from, Subset to) const { return g_(from.bits(), to.bits()); }

 private:
  Frame frame_;
  Matrix g_;
};

// Inverse of a Dempsterian specialization. Entries may be negative, so it
// only maps some mass functions to mass functions.
class DespecializationMatrix {
 public:
  DespecializationMatrix(Frame frame, Matrix d);

  const Frame& frame() const { return frame_; }
  const Matrix& matrix() const { return d_; }

 private:
  Frame frame_;
  Matrix d_;
};

bool is_dempsterian(const SpecializationMatrix& s, double tol = kDefaultTolerance);

MassFunction apply(const MassFunction& m, const SpecializationMatrix& s);
MassFunction apply(const MassFunction& m, const GeneralizationMatrix& g);

// s_C(A, B) = 1 iff B = A n C.
SpecializationMatrix conditioning_matrix(const Frame& frame, Subset c);

// Row A is m conditioned on A (unnormalized Dempster conditioning); row Omega is m.
// Applying it to m' yields the conjunctive combination of m' and m.
SpecializationMatrix dempsterian_matrix(const MassFunction& m);

// Largest absolute entry of a matrix.
double max_abs(const Matrix& m);

struct CommuteResult {
  bool commute;
  double deviation;  // max |(S1 S2 - S2 S1)(A, B)|
};

CommuteResult commute_check(const SpecializationMatrix& s1, const SpecializationMatrix& s2,
                            double tol = kDefaultTolerance);
bool idempotence_check(const SpecializationMatrix& s, double tol = kDefaultTolerance);

// Subset-incidence matrix T with t(A, B) = 1 iff B subset of A, so m * T = q.
// The inverse has entries (-1)^(|A|-|B|) for B subset of A; both are exact.
struct SubsetTransform {
  Matrix t;
  Matrix t_inverse;
};

SubsetTransform transform_matrix(const Frame& frame);

// S_m = T * diag(q) * T^-1. Rows of T^-1 are left eigenvectors: t S_m = q(A) t.
struct EigenStructure {
  Matrix t;
  Vector eigenvalues;  // q of the generating mass function, indexed by subset
  Matrix t_inverse;

  double diagonal_error;        // max |S_m(A, A) - q(A)|
  double reconstruction_error;  // max |S_m - T Lambda T^-1|
  double eigenvector_residual;  // max over rows t of T^-1 of |t S_m - q(A) t|

  Matrix lambda() const { return eigenvalues.asDiagonal(); }
};

// Throws PreconditionError when s is not Dempsterian.
EigenStructure eigen_structure(const SpecializationMatrix& s, double tol = kDefaultTolerance);

// D = T * diag(1/q) * T^-1. Throws PreconditionError for a non-Dempsterian
// input and SingularSpecialization when some |q(A)| <= tol.
DespecializationMatrix despecialize_matrix(const SpecializationMatrix& s, double tol = kDefaultTolerance);

// m * D when that is a mass function; entries in [-tol, 0) are clamped to 0.
// Throws NotRetractable when some entry is below -tol.
MassFunction apply_despecialization(const MassFunction& m, const DespecializationMatrix& d,
                                    double tol = kDefaultTolerance);

// g(X, B) = 1 iff B = X u A: the elements of A become indiscernible.
GeneralizationMatrix enlargement_matrix(const Frame& frame, Subset a);

// g_m(A, B) = sum of m(X) over X with A u X = B. Applying it to m' yields the
// disjunctive combination of m' and m.
GeneralizationMatrix disjunctive_matrix(const MassFunction& m);

}  // namespace tbm
