#pragma once

#include "tbm/belief.hpp"

namespace tbm {

// Unnormalized Dempster conditioning: m(X) moves to X n C.
//   m_C(B) = sum over Y subset of complement(C) of m(B u Y), for B subset of C.
// C = empty yields m(empty) = 1.
MassFunction condition(const MassFunction& m, Subset c);

// Conjunctive (unnormalized Dempster) combination via q01 = q0 * q1.
MassFunction combine_conjunctive(const MassFunction& m0, const MassFunction& m1);

// Dempster's rule in the closed world: normalize(combine_conjunctive(m0, m1)).
// Throws NormalizationUndefined on total conflict.
MassFunction combine_normalized(const MassFunction& m0, const MassFunction& m1, double tol = kDefaultTolerance);

// Disjunctive rule: mE(A) * mF(B) moves to A u B; b_EorF = b_E * b_F.
MassFunction combine_disjunctive(const MassFunction& m_e, const MassFunction& m_f);

// Removes evidence mE from the combined state mEF: q_F = q_EF / q_E.
// Throws NonInvertibleEvidence when some |q_E(A)| <= tol and NotRetractable
// when the quotient does not correspond to a mass function.
MassFunction retract(const MassFunction& m_ef, const MassFunction& m_e, double tol = kDefaultTolerance);

// m(X) moves to X u A. Every focal set meeting A contains all of A.
MassFunction enlarge(const MassFunction& m, Subset a);

}  // namespace tbm
