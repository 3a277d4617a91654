#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbm/belief.hpp"

namespace tbm::io {

// On-disk evidence document (JSON):
//
//   {
//     "frame": ["a", "b", "c"],
//     "kind": "mass",
//     "masses": {"a": 0.3, "b|c": 0.5, "a|b|c": 0.2}
//   }
//
// Subset keys join labels with '|' in frame order; "" is the empty set.
// "kind" defaults to "mass"; the other kinds (bel, pl, q, b) use a "values"
// object instead of "masses". Unlisted mass entries are 0; the other kinds
// must list every subset.
struct EvidenceDocument {
  std::vector<std::string> frame;
  std::string kind = "mass";
  // Canonical keys in bitmask order.
  std::vector<std::pair<std::string, double>> values;

  friend bool operator==(const EvidenceDocument&, const EvidenceDocument&) = default;
};

// Throws InvalidArgument on malformed input; keys are canonicalized.
EvidenceDocument parse_document(std::string_view text);
std::string print_document(const EvidenceDocument& doc);

// Values are rounded to 12 significant digits; masses list focal sets only.
EvidenceDocument document_from(const MassFunction& m);
EvidenceDocument document_from(const ValueFunction& v);

Frame frame_of(const EvidenceDocument& doc);
// Any kind is accepted and inverted to masses.
MassFunction mass_from_document(const EvidenceDocument& doc, double tol = kDefaultTolerance);

double round_significant(double value);

// Dense row-major text with a header describing the index convention.
std::string print_matrix(const Frame& frame, const Matrix& m, std::string_view kind);

}  // namespace tbm::io
