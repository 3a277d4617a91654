#pragma once

#include <Eigen/Dense>

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tbm/errors.hpp"

namespace tbm {

// Absolute tolerance used by every comparison unless the caller passes one.
inline constexpr double kDefaultTolerance = 1e-9;

// Size limits. Vector algebra costs O(n 2^n); dense operators cost 4^n.
struct Caps {
  int transform = 20;
  int matrix = 10;
};

using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Matrix = Eigen::MatrixXd;

template <typename Scalar>
using LatticeArray = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// A subset of a frame, element i <-> bit i in label order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int cardinality() const { return std::popcount(bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits() | b.bits()); }
constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits() & b.bits()); }
constexpr bool is_subset(Subset a, Subset b) { return (a.bits() & ~b.bits()) == 0; }
constexpr bool intersects(Subset a, Subset b) { return (a.bits() & b.bits()) != 0; }

// Frame of discernment: a finite, ordered set of distinct labels.
// Copies share the label storage.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels, Caps caps = {});

  // Frame with labels a, b, c, ... (e0, e1, ... past 26 elements).
  static Frame of_size(int n, Caps caps = {});

  int size() const { return static_cast<int>(data_->labels.size()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }
  Subset universe() const { return Subset(subset_count() - 1); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(int i) const { return data_->labels.at(i); }
  const Caps& caps() const { return data_->caps; }

  // Throws FrameMismatch if the subset does not belong to this frame.
  void check(Subset s) const;
  Subset complement(Subset s) const;
  Subset unite(Subset a, Subset b) const;
  Subset intersect(Subset a, Subset b) const;
  bool includes(Subset inner, Subset outer) const;

  // Subset keys: labels in frame order joined by '|'; "" is the empty set.
  // Parsing accepts any label order and rejects unknown or repeated labels.
  std::string key(Subset s) const;
  Subset parse_key(std::string_view key) const;
  Subset singleton(std::string_view label) const;

  // Throws InvalidArgument when 2^n x 2^n operators would exceed caps().matrix.
  void require_matrix_size() const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    Caps caps;
  };
  std::shared_ptr<const Data> data_;
};

void require_same_frame(const Frame& a, const Frame& b);

// Human-readable set notation for diagnostics: "∅", "Ω", "{a,b}".
std::string display(const Frame& frame, Subset s);

// Values indexed by the subsets of a frame.
struct LatticeVector {
  LatticeVector(Frame f, Vector v);

  Frame frame;
  Vector values;

  double operator[](Subset s) const { return values(s.bits()); }
};

// Calls fn(Subset) for every subset of mask, mask itself first, ending with the empty set.
template <typename Fn>
void for_each_subset_of(Subset mask, Fn&& fn) {
  std::uint32_t sub = mask.bits();
  while (true) {
    fn(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & mask.bits();
  }
}

namespace detail {
void require_lattice_length(Eigen::Index length);
}  // namespace detail

// g(A) = sum over B subset of A of f(B); per-bit sweep, O(n 2^n).
template <typename Derived>
LatticeArray<typename Derived::Scalar> zeta_subsets(const Eigen::MatrixBase<Derived>& f) {
  LatticeArray<typename Derived::Scalar> g = f;
  const Eigen::Index size = g.size();
  detail::require_lattice_length(size);
  for (Eigen::Index bit = 1; bit < size; bit <<= 1)
    for (Eigen::Index a = 0; a < size; ++a)
      if (a & bit) g(a) += g(a ^ bit);
  return g;
}

// g(A) = sum over B superset of A of f(B).
template <typename Derived>
LatticeArray<typename Derived::Scalar> zeta_supersets(const Eigen::MatrixBase<Derived>& f) {
  LatticeArray<typename Derived::Scalar> g = f;
  const Eigen::Index size = g.size();
  detail::require_lattice_length(size);
  for (Eigen::Index bit = 1; bit < size; bit <<= 1)
    for (Eigen::Index a = 0; a < size; ++a)
      if (!(a & bit)) g(a) += g(a | bit);
  return g;
}

// Inverse of zeta_subsets.
template <typename Derived>
LatticeArray<typename Derived::Scalar> mobius_subsets(const Eigen::MatrixBase<Derived>& g) {
  LatticeArray<typename Derived::Scalar> f = g;
  const Eigen::Index size = f.size();
  detail::require_lattice_length(size);
  for (Eigen::Index bit = 1; bit < size; bit <<= 1)
    for (Eigen::Index a = 0; a < size; ++a)
      if (a & bit) f(a) -= f(a ^ bit);
  return f;
}

// Inverse of zeta_supersets.
template <typename Derived>
LatticeArray<typename Derived::Scalar> mobius_supersets(const Eigen::MatrixBase<Derived>& g) {
  LatticeArray<typename Derived::Scalar> f = g;
  const Eigen::Index size = f.size();
  detail::require_lattice_length(size);
  for (Eigen::Index bit = 1; bit < size; bit <<= 1)
    for (Eigen::Index a = 0; a < size; ++a)
      if (!(a & bit)) f(a) -= f(a | bit);
  return f;
}

LatticeVector zeta_subsets(const LatticeVector& f);
LatticeVector zeta_supersets(const LatticeVector& f);
LatticeVector mobius_subsets(const LatticeVector& g);
LatticeVector mobius_supersets(const LatticeVector& g);

}  // namespace tbm
