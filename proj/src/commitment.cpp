#include "tbm/commitment.hpp"

namespace tbm {
namespace {

// lower_first: lhs(A) < rhs(A) at some A means the first operand is more committed there.
CommitmentOrdering order_from(const Vector& lhs, const Vector& rhs, bool lower_first, double tol) {
  bool first_lower = false;
  bool first_higher = false;
  for (Eigen::Index a = 0; a < lhs.size(); ++a) {
    const double gap = lhs(a) - rhs(a);
    if (gap < -tol) first_lower = true;
    if (gap > tol) first_higher = true;
  }
  if (first_lower && first_higher) return CommitmentOrdering::Incomparable;
  if (!first_lower && !first_higher) return CommitmentOrdering::Equal;
  const bool first_more = lower_first ? first_lower : first_higher;
  return first_more ? CommitmentOrdering::FirstMoreCommitted : CommitmentOrdering::SecondMoreCommitted;
}

}  // namespace

std::string_view to_string(CommitmentOrdering ordering) {
  switch (ordering) {
    case CommitmentOrdering::Equal: return "equal";
    case CommitmentOrdering::FirstMoreCommitted: return "first-more-committed";
    case CommitmentOrdering::SecondMoreCommitted: return "second-more-committed";
    case CommitmentOrdering::Incomparable: return "incomparable";
  }
  return "?";
}

CommitmentOrdering compare(const MassFunction& m1, const MassFunction& m2, double tol) {
  require_same_frame(m1.frame(), m2.frame());
  return order_from(pl_from_mass(m1).values, pl_from_mass(m2).values, true, tol);
}

CommitmentOrdering compare_bel_form(const MassFunction& m1, const MassFunction& m2, double tol) {
  require_same_frame(m1.frame(), m2.frame());
  const Vector b1 = bel_from_mass(m1).values.array() + m1.conflict();
  const Vector b2 = bel_from_mass(m2).values.array() + m2.conflict();
  return order_from(b1, b2, false, tol);
}

bool at_least_as_committed(const MassFunction& m1, const MassFunction& m2, double tol) {
  const auto ordering = compare(m1, m2, tol);
  return ordering == CommitmentOrdering::Equal || ordering == CommitmentOrdering::FirstMoreCommitted;
}

}  // namespace tbm
