#include "tbm/belief.hpp"

#include <cmath>
#include <string>

namespace tbm {

MassFunction::MassFunction(Frame frame, Vector masses, double tol)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  if (masses_.size() != static_cast<Eigen::Index>(frame_.subset_count()))
    throw InvalidArgument("mass vector has " + std::to_string(masses_.size()) + " entries, frame needs " +
                          std::to_string(frame_.subset_count()));
  for (Eigen::Index a = 0; a < masses_.size(); ++a) {
    const double v = masses_(a);
    if (!std::isfinite(v))
      throw NotABeliefFunction("non-finite mass on '" + frame_.key(Subset(a)) + "'");
    if (v < -tol)
      throw NotABeliefFunction("negative mass " + std::to_string(v) + " on '" + frame_.key(Subset(a)) + "'");
    if (v < 0.0) masses_(a) = 0.0;
  }
  const double total = masses_.sum();
  if (std::abs(total - 1.0) > tol)
    throw NotABeliefFunction("masses sum to " + std::to_string(total) + ", expected 1");
}

MassFunction MassFunction::from_focal(const Frame& frame, std::span<const std::pair<Subset, double>> focal,
                                      double tol) {
  Vector masses = Vector::Zero(frame.subset_count());
  for (const auto& [subset, mass] : focal) {
    frame.check(subset);
    masses(subset.bits()) += mass;
  }
  return MassFunction(frame, std::move(masses), tol);
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Bel: return "bel";
    case ValueKind::Pl: return "pl";
    case ValueKind::Q: return "q";
    case ValueKind::B: return "b";
  }
  return "?";
}

ValueKind parse_value_kind(std::string_view name) {
  if (name == "bel") return ValueKind::Bel;
  if (name == "pl") return ValueKind::Pl;
  if (name == "q") return ValueKind::Q;
  if (name == "b") return ValueKind::B;
  throw InvalidArgument("unknown value kind '" + std::string(name) + "'");
}

ValueFunction::ValueFunction(Frame f, ValueKind k, Vector v) : frame(std::move(f)), kind(k), values(std::move(v)) {
  if (values.size() != static_cast<Eigen::Index>(frame.subset_count()))
    throw InvalidArgument("value vector has " + std::to_string(values.size()) + " entries, frame needs " +
                          std::to_string(frame.subset_count()));
}

ValueFunction b_from_mass(const MassFunction& m) {
  return {m.frame(), ValueKind::B, zeta_subsets(m.values())};
}

ValueFunction bel_from_mass(const MassFunction& m) {
  Vector bel = zeta_subsets(m.values()).array() - m.conflict();
  bel(0) = 0.0;
  return {m.frame(), ValueKind::Bel, std::move(bel)};
}

ValueFunction pl_from_mass(const MassFunction& m) {
  const Vector b = zeta_subsets(m.values());
  const std::uint32_t top = m.frame().universe().bits();
  Vector pl(b.size());
  for (std::uint32_t a = 0; a <= top; ++a) pl(a) = b(top) - b(top & ~a);
  return {m.frame(), ValueKind::Pl, std::move(pl)};
}

ValueFunction pl_from_bel(const ValueFunction& bel) {
  if (bel.kind != ValueKind::Bel) throw InvalidArgument("pl_from_bel expects a bel function");
  const std::uint32_t top = bel.frame.universe().bits();
  Vector pl(bel.values.size());
  for (std::uint32_t a = 0; a <= top; ++a) pl(a) = bel.values(top) - bel.values(top & ~a);
  return {bel.frame, ValueKind::Pl, std::move(pl)};
}

ValueFunction q_from_mass(const MassFunction& m) {
  return {m.frame(), ValueKind::Q, zeta_supersets(m.values())};
}

ValueFunction convert(const MassFunction& m, ValueKind kind) {
  switch (kind) {
    case ValueKind::Bel: return bel_from_mass(m);
    case ValueKind::Pl: return pl_from_mass(m);
    case ValueKind::Q: return q_from_mass(m);
    case ValueKind::B: return b_from_mass(m);
  }
  throw InvalidArgument("unknown value kind");
}

MassFunction mass_from(const ValueFunction& v, double tol) {
  const std::uint32_t top = v.frame.universe().bits();
  Vector masses;
  switch (v.kind) {
    case ValueKind::Bel: {
      const double empty_mass = 1.0 - v.values(top);
      Vector b = v.values.array() + empty_mass;
      b(0) = empty_mass;
      masses = mobius_subsets(b);
      break;
    }
    case ValueKind::Pl: {
      Vector b(v.values.size());
      for (std::uint32_t a = 0; a <= top; ++a) b(a) = 1.0 - v.values(top & ~a);
      masses = mobius_subsets(b);
      break;
    }
    case ValueKind::Q: masses = mobius_supersets(v.values); break;
    case ValueKind::B: masses = mobius_subsets(v.values); break;
  }
  return MassFunction(v.frame, std::move(masses), tol);
}

MassFunction vacuous(const Frame& frame) {
  Vector masses = Vector::Zero(frame.subset_count());
  masses(frame.universe().bits()) = 1.0;
  return MassFunction(frame, std::move(masses));
}

MassFunction categorical(const Frame& frame, Subset c) {
  frame.check(c);
  Vector masses = Vector::Zero(frame.subset_count());
  masses(c.bits()) = 1.0;
  return MassFunction(frame, std::move(masses));
}

MassFunction normalize(const MassFunction& m, double tol) {
  const double conflict = m.conflict();
  if (conflict >= 1.0 - tol) throw NormalizationUndefined("total conflict: m(empty) = 1, normalization undefined");
  Vector masses = m.values() / (1.0 - conflict);
  masses(0) = 0.0;
  return MassFunction(m.frame(), std::move(masses), tol);
}

MassFunction least_committed_from_disjoint_constraints(const Frame& frame,
                                                       std::span<const BeliefConstraint> constraints,
                                                       double tol) {
  Vector masses = Vector::Zero(frame.subset_count());
  std::uint32_t covered = 0;
  double total = 0.0;
  for (const auto& [subset, belief] : constraints) {
    frame.check(subset);
    if (subset.empty()) throw InfeasibleConstraints("constraint on the empty set");
    if (!(belief >= -tol) || belief > 1.0 + tol)
      throw InfeasibleConstraints("belief bound " + std::to_string(belief) + " outside [0, 1] for '" +
                                  frame.key(subset) + "'");
    if (covered & subset.bits())
      throw InfeasibleConstraints("constraint sets overlap at '" + frame.key(Subset(covered & subset.bits())) + "'");
    covered |= subset.bits();
    const double v = std::max(belief, 0.0);
    masses(subset.bits()) += v;
    total += v;
  }
  if (total > 1.0 + tol) throw InfeasibleConstraints("belief bounds sum to " + std::to_string(total) + " > 1");
  masses(frame.universe().bits()) += std::max(1.0 - total, 0.0);
  return MassFunction(frame, std::move(masses), tol);
}

}  // namespace tbm
