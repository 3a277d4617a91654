#include "tbm/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace tbm {

Frame::Frame(std::vector<std::string> labels, Caps caps) {
  if (labels.empty()) throw InvalidArgument("frame must have at least one element");
  if (static_cast<int>(labels.size()) > caps.transform)
    throw InvalidArgument("frame has " + std::to_string(labels.size()) +
                          " elements; limit is " + std::to_string(caps.transform));
  if (caps.transform > 30) throw InvalidArgument("transform cap above 30 is not supported");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InvalidArgument("frame labels must be non-empty");
    if (label.find('|') != std::string::npos)
      throw InvalidArgument("frame label '" + label + "' contains the key separator '|'");
    if (!seen.insert(label).second) throw InvalidArgument("duplicate frame label '" + label + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels), caps});
}

Frame Frame::of_size(int n, Caps caps) {
  if (n < 1) throw InvalidArgument("frame must have at least one element");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i)
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  return Frame(std::move(labels), caps);
}

void Frame::check(Subset s) const {
  if (s.bits() >= subset_count())
    throw FrameMismatch("subset bitmask " + std::to_string(s.bits()) + " is outside a frame of " +
                        std::to_string(size()) + " elements");
}

Subset Frame::complement(Subset s) const {
  check(s);
  return Subset(universe().bits() & ~s.bits());
}

Subset Frame::unite(Subset a, Subset b) const {
  check(a);
  check(b);
  return a | b;
}

Subset Frame::intersect(Subset a, Subset b) const {
  check(a);
  check(b);
  return a & b;
}

bool Frame::includes(Subset inner, Subset outer) const {
  check(inner);
  check(outer);
  return is_subset(inner, outer);
}

std::string Frame::key(Subset s) const {
  check(s);
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (!(s.bits() >> i & 1u)) continue;
    if (!out.empty()) out += '|';
    out += data_->labels[i];
  }
  return out;
}

Subset Frame::singleton(std::string_view label) const {
  const auto& labels = data_->labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw FrameMismatch("unknown label '" + std::string(label) + "'");
  return Subset(std::uint32_t{1} << (it - labels.begin()));
}

Subset Frame::parse_key(std::string_view key) const {
  std::uint32_t bits = 0;
  if (key.empty()) return Subset(bits);
  std::size_t start = 0;
  while (true) {
    const auto bar = key.find('|', start);
    const auto part = key.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    const auto element = singleton(part).bits();
    if (bits & element) throw InvalidArgument("label '" + std::string(part) + "' repeated in key");
    bits |= element;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Subset(bits);
}

void Frame::require_matrix_size() const {
  if (size() > data_->caps.matrix)
    throw InvalidArgument("matrix operations need n <= " + std::to_string(data_->caps.matrix) +
                          ", frame has " + std::to_string(size()));
}

bool operator==(const Frame& a, const Frame& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) throw FrameMismatch("operands are defined on different frames");
}

std::string display(const Frame& frame, Subset s) {
  if (s.empty()) return "∅";
  if (s == frame.universe()) return "Ω";
  std::string out = frame.key(s);
  std::replace(out.begin(), out.end(), '|', ',');
  return "{" + out + "}";
}

LatticeVector::LatticeVector(Frame f, Vector v) : frame(std::move(f)), values(std::move(v)) {
  if (values.size() != static_cast<Eigen::Index>(frame.subset_count()))
    throw InvalidArgument("lattice vector has " + std::to_string(values.size()) + " entries, frame needs " +
                          std::to_string(frame.subset_count()));
}

namespace detail {
void require_lattice_length(Eigen::Index length) {
  if (length < 1 || (length & (length - 1)) != 0)
    throw InvalidArgument("lattice transforms need a power-of-two length, got " + std::to_string(length));
}
}  // namespace detail

LatticeVector zeta_subsets(const LatticeVector& f) { return {f.frame, zeta_subsets(f.values)}; }
LatticeVector zeta_supersets(const LatticeVector& f) { return {f.frame, zeta_supersets(f.values)}; }
LatticeVector mobius_subsets(const LatticeVector& g) { return {g.frame, mobius_subsets(g.values)}; }
LatticeVector mobius_supersets(const LatticeVector& g) { return {g.frame, mobius_supersets(g.values)}; }

}  // namespace tbm
