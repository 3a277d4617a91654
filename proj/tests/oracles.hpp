#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the defining sum literally, O(4^n) or worse.

#include <random>

#include "tbm/belief.hpp"

namespace tbm::oracle {

inline bool sub(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

inline Vector naive_zeta_subsets(const Vector& f) {
  Vector g = Vector::Zero(f.size());
  for (Eigen::Index a = 0; a < f.size(); ++a)
    for (Eigen::Index b = 0; b < f.size(); ++b)
      if (sub(b, a)) g(a) += f(b);
  return g;
}

inline Vector naive_zeta_supersets(const Vector& f) {
  Vector g = Vector::Zero(f.size());
  for (Eigen::Index a = 0; a < f.size(); ++a)
    for (Eigen::Index b = 0; b < f.size(); ++b)
      if (sub(a, b)) g(a) += f(b);
  return g;
}

// bel(A) = sum over nonempty X subset of A of m(X).
inline Vector naive_bel(const Vector& m) {
  Vector bel = Vector::Zero(m.size());
  for (Eigen::Index a = 0; a < m.size(); ++a)
    for (Eigen::Index x = 1; x < m.size(); ++x)
      if (sub(x, a)) bel(a) += m(x);
  return bel;
}

// pl(A) = sum over X meeting A of m(X).
inline Vector naive_pl(const Vector& m) {
  Vector pl = Vector::Zero(m.size());
  for (Eigen::Index a = 0; a < m.size(); ++a)
    for (Eigen::Index x = 0; x < m.size(); ++x)
      if (x & a) pl(a) += m(x);
  return pl;
}

// m_C(B) = sum over Y subset of complement(C) of m(B u Y), for B subset of C.
inline Vector naive_condition(const Vector& m, std::uint32_t c) {
  const auto top = static_cast<std::uint32_t>(m.size() - 1);
  const std::uint32_t not_c = top & ~c;
  Vector out = Vector::Zero(m.size());
  for (std::uint32_t b = 0; b <= top; ++b) {
    if (!sub(b, c)) continue;
    for (std::uint32_t y = 0; y <= top; ++y)
      if (sub(y, not_c)) out(b) += m(b | y);
  }
  return out;
}

// m01(A) = sum over X n Y = A of m0(X) m1(Y).
inline Vector naive_conjunctive(const Vector& m0, const Vector& m1) {
  Vector out = Vector::Zero(m0.size());
  for (Eigen::Index a = 0; a < m0.size(); ++a)
    for (Eigen::Index x = 0; x < m0.size(); ++x)
      for (Eigen::Index y = 0; y < m1.size(); ++y)
        if ((x & y) == a) out(a) += m0(x) * m1(y);
  return out;
}

inline Vector naive_disjunctive(const Vector& m0, const Vector& m1) {
  Vector out = Vector::Zero(m0.size());
  for (Eigen::Index a = 0; a < m0.size(); ++a)
    for (Eigen::Index x = 0; x < m0.size(); ++x)
      for (Eigen::Index y = 0; y < m1.size(); ++y)
        if ((x | y) == a) out(a) += m0(x) * m1(y);
  return out;
}

inline double max_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Test-side random assignment, independent of the library sampler.
inline MassFunction random_mass(const Frame& frame, std::mt19937_64& rng, double zero_probability = 0.4) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector v(frame.subset_count());
  for (auto& x : v) x = u(rng) < zero_probability ? 0.0 : u(rng);
  if (v.sum() == 0.0) v(frame.universe().bits()) = 1.0;
  return MassFunction(frame, v / v.sum());
}

inline Vector random_vector(Eigen::Index size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(size);
  for (auto& x : v) x = u(rng);
  return v;
}

inline Subset random_subset(const Frame& frame, std::mt19937_64& rng) {
  return Subset(std::uniform_int_distribution<std::uint32_t>(0, frame.universe().bits())(rng));
}

}  // namespace tbm::oracle
