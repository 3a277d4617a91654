#pragma once

#include <string_view>

#include "tbm/belief.hpp"

namespace tbm {

// Outcome of comparing two belief states under the commitment order.
// m1 is at least as committed as m2 iff pl1(A) <= pl2(A) for every A.
enum class CommitmentOrdering { Equal, FirstMoreCommitted, SecondMoreCommitted, Incomparable };

std::string_view to_string(CommitmentOrdering ordering);

// Differences within tol count as ties.
CommitmentOrdering compare(const MassFunction& m1, const MassFunction& m2, double tol = kDefaultTolerance);

// Same order expressed with implicabilities: m1 is at least as committed as m2
// iff bel1(A) + m1(empty) >= bel2(A) + m2(empty) for every A.
CommitmentOrdering compare_bel_form(const MassFunction& m1, const MassFunction& m2,
                                    double tol = kDefaultTolerance);

// m1 is equal to or more committed than m2.
bool at_least_as_committed(const MassFunction& m1, const MassFunction& m2, double tol = kDefaultTolerance);

}  // namespace tbm
