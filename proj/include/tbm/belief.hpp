#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tbm/lattice.hpp"

namespace tbm {

// Basic belief assignment on a frame. Masses are nonnegative and sum to one;
// m(empty) may be positive (open world). Entries in [-tol, 0) are clamped to 0.
class MassFunction {
 public:
  MassFunction(Frame frame, Vector masses, double tol = kDefaultTolerance);

  // Builds from (subset, mass) pairs; unlisted subsets get 0, repeats accumulate.
  static MassFunction from_focal(const Frame& frame, std::span<const std::pair<Subset, double>> focal,
                                 double tol = kDefaultTolerance);
  static MassFunction from_focal(const Frame& frame, std::initializer_list<std::pair<Subset, double>> focal,
                                 double tol = kDefaultTolerance) {
    return from_focal(frame, std::span<const std::pair<Subset, double>>(focal.begin(), focal.size()), tol);
  }

  const Frame& frame() const { return frame_; }
  const Vector& values() const { return masses_; }
  double operator[](Subset s) const { return masses_(s.bits()); }
  double conflict() const { return masses_(0); }
  LatticeVector as_lattice() const { return {frame_, masses_}; }

 private:
  Frame frame_;
  Vector masses_;
};

enum class ValueKind { Bel, Pl, Q, B };

std::string_view to_string(ValueKind kind);
// Accepts "bel", "pl", "q", "b".
ValueKind parse_value_kind(std::string_view name);

// One of the four set functions in one-to-one correspondence with a mass function:
//   bel(A) = sum over nonempty X subset of A of m(X)
//   pl(A)  = sum over X meeting A of m(X)
//   q(A)   = sum over X superset of A of m(X)
//   b(A)   = bel(A) + m(empty)
struct ValueFunction {
  ValueFunction(Frame f, ValueKind k, Vector v);

  Frame frame;
  ValueKind kind;
  Vector values;

  double operator[](Subset s) const { return values(s.bits()); }
};

ValueFunction bel_from_mass(const MassFunction& m);
ValueFunction pl_from_mass(const MassFunction& m);
// pl(A) = bel(Omega) - bel(complement of A).
ValueFunction pl_from_bel(const ValueFunction& bel);
ValueFunction q_from_mass(const MassFunction& m);
ValueFunction b_from_mass(const MassFunction& m);
ValueFunction convert(const MassFunction& m, ValueKind kind);

// Moebius inversion for the given kind. Throws NotABeliefFunction when the
// recovered masses are not a valid assignment.
MassFunction mass_from(const ValueFunction& v, double tol = kDefaultTolerance);

// m(Omega) = 1: total ignorance.
MassFunction vacuous(const Frame& frame);
// m(C) = 1.
MassFunction categorical(const Frame& frame, Subset c);

// Closed-world rescaling: m'(empty) = 0, m'(A) = m(A) / (1 - m(empty)).
// Throws NormalizationUndefined when m(empty) is 1 within tolerance.
MassFunction normalize(const MassFunction& m, double tol = kDefaultTolerance);

struct BeliefConstraint {
  Subset subset;
  double belief;
};

// Least committed assignment with bel(A_i) >= v_i for pairwise disjoint,
// nonempty A_i: each v_i stays on A_i and the remainder goes to Omega.
MassFunction least_committed_from_disjoint_constraints(const Frame& frame,
                                                       std::span<const BeliefConstraint> constraints,
                                                       double tol = kDefaultTolerance);

}  // namespace tbm
