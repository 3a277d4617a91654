#include "tbm/dynamics.hpp"

#include <cmath>

namespace tbm {

MassFunction condition(const MassFunction& m, Subset c) {
  m.frame().check(c);
  const Vector& in = m.values();
  Vector out = Vector::Zero(in.size());
  for (Eigen::Index x = 0; x < in.size(); ++x) out(x & c.bits()) += in(x);
  return MassFunction(m.frame(), std::move(out));
}

MassFunction combine_conjunctive(const MassFunction& m0, const MassFunction& m1) {
  require_same_frame(m0.frame(), m1.frame());
  const Vector q = zeta_supersets(m0.values()).cwiseProduct(zeta_supersets(m1.values()));
  return MassFunction(m0.frame(), mobius_supersets(q));
}

MassFunction combine_normalized(const MassFunction& m0, const MassFunction& m1, double tol) {
  return normalize(combine_conjunctive(m0, m1), tol);
}

MassFunction combine_disjunctive(const MassFunction& m_e, const MassFunction& m_f) {
  require_same_frame(m_e.frame(), m_f.frame());
  const Vector b = zeta_subsets(m_e.values()).cwiseProduct(zeta_subsets(m_f.values()));
  return MassFunction(m_e.frame(), mobius_subsets(b));
}

MassFunction retract(const MassFunction& m_ef, const MassFunction& m_e, double tol) {
  require_same_frame(m_ef.frame(), m_e.frame());
  const Frame& frame = m_ef.frame();
  const Vector q_e = zeta_supersets(m_e.values());
  for (std::uint32_t a = frame.universe().bits() + 1; a-- > 0;)
    if (std::abs(q_e(a)) <= tol)
      throw NonInvertibleEvidence("cannot retract: evidence has q(" + display(frame, Subset(a)) + ")=0");
  const Vector q_f = zeta_supersets(m_ef.values()).cwiseQuotient(q_e);
  Vector masses = mobius_supersets(q_f);
  for (Eigen::Index a = 0; a < masses.size(); ++a)
    if (masses(a) < -tol)
      throw NotRetractable("cannot retract: result gives mass " + std::to_string(masses(a)) + " to " +
                           display(frame, Subset(static_cast<std::uint32_t>(a))) +
                           "; the evidence is not contained in this belief state");
  return MassFunction(frame, std::move(masses), tol);
}

MassFunction enlarge(const MassFunction& m, Subset a) {
  m.frame().check(a);
  const Vector& in = m.values();
  Vector out = Vector::Zero(in.size());
  for (Eigen::Index x = 0; x < in.size(); ++x) out(x | a.bits()) += in(x);
  return MassFunction(m.frame(), std::move(out));
}

}  // namespace tbm
