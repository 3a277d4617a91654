#include "tbm/specialization.hpp"

#include <cmath>

namespace tbm {
namespace {

void require_square(const Frame& frame, const Matrix& s) {
  const auto size = static_cast<Eigen::Index>(frame.subset_count());
  if (s.rows() != size || s.cols() != size)
    throw InvalidArgument("matrix is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                          ", frame needs " + std::to_string(size) + "x" + std::to_string(size));
}

// support(from, to) says whether s(from, to) may be nonzero.
template <typename Support>
bool is_row_stochastic_on(const Frame& frame, const Matrix& s, double tol, Support support) {
  const auto size = static_cast<Eigen::Index>(frame.subset_count());
  if (s.rows() != size || s.cols() != size) return false;
  for (Eigen::Index a = 0; a < size; ++a) {
    double total = 0.0;
    for (Eigen::Index b = 0; b < size; ++b) {
      const double v = s(a, b);
      if (!std::isfinite(v)) return false;
      if (!support(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))) {
        if (std::abs(v) > tol) return false;
        continue;
      }
      if (v < -tol || v > 1.0 + tol) return false;
      total += v;
    }
    if (std::abs(total - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace

bool is_valid_specialization(const Frame& frame, const Matrix& s, double tol) {
  return is_row_stochastic_on(frame, s, tol, [](std::uint32_t from, std::uint32_t to) { return (to & ~from) == 0; });
}

bool is_valid_generalization(const Frame& frame, const Matrix& g, double tol) {
  return is_row_stochastic_on(frame, g, tol, [](std::uint32_t from, std::uint32_t to) { return (from & ~to) == 0; });
}

bool is_dempsterian(const Frame& frame, const Matrix& s, double tol) {
  if (!is_valid_specialization(frame, s, tol)) return false;
  const std::uint32_t top = frame.universe().bits();
  Vector conditioned(s.cols());
  for (std::uint32_t a = 0; a <= top; ++a) {
    conditioned.setZero();
    for (std::uint32_t y = 0; y <= top; ++y) conditioned(y & a) += s(top, y);
    if ((conditioned.transpose() - s.row(a)).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_dempsterian(const SpecializationMatrix& s, double tol) { return is_dempsterian(s.frame(), s.matrix(), tol); }

SpecializationMatrix::SpecializationMatrix(Frame frame, Matrix s, double tol)
    : frame_(std::move(frame)), s_(std::move(s)) {
  frame_.require_matrix_size();
  require_square(frame_, s_);
  if (!is_valid_specialization(frame_, s_, tol))
    throw InvalidArgument("not a specialization matrix: rows must be stochastic and supported on subsets");
}

SpecializationMatrix SpecializationMatrix::identity(const Frame& frame) {
  frame.require_matrix_size();
  return SpecializationMatrix(frame, Matrix::Identity(frame.subset_count(), frame.subset_count()));
}

GeneralizationMatrix::GeneralizationMatrix(Frame frame, Matrix g, double tol)
    : frame_(std::move(frame)), g_(std::move(g)) {
  frame_.require_matrix_size();
  require_square(frame_, g_);
  if (!is_valid_generalization(frame_, g_, tol))
    throw InvalidArgument("not a generalization matrix: rows must be stochastic and supported on supersets");
}

DespecializationMatrix::DespecializationMatrix(Frame frame, Matrix d) : frame_(std::move(frame)), d_(std::move(d)) {
  frame_.require_matrix_size();
  require_square(frame_, d_);
}

MassFunction apply(const MassFunction& m, const SpecializationMatrix& s) {
  require_same_frame(m.frame(), s.frame());
  return MassFunction(m.frame(), (m.values().transpose() * s.matrix()).transpose());
}

MassFunction apply(const MassFunction& m, const GeneralizationMatrix& g) {
  require_same_frame(m.frame(), g.frame());
  return MassFunction(m.frame(), (m.values().transpose() * g.matrix()).transpose());
}

SpecializationMatrix conditioning_matrix(const Frame& frame, Subset c) {
  frame.require_matrix_size();
  frame.check(c);
  const std::uint32_t size = frame.subset_count();
  Matrix s = Matrix::Zero(size, size);
  for (std::uint32_t a = 0; a < size; ++a) s(a, a & c.bits()) = 1.0;
  return SpecializationMatrix(frame, std::move(s));
}

SpecializationMatrix dempsterian_matrix(const MassFunction& m) {
  const Frame& frame = m.frame();
  frame.require_matrix_size();
  const std::uint32_t size = frame.subset_count();
  Matrix s = Matrix::Zero(size, size);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t x = 0; x < size; ++x) s(a, x & a) += m.values()(x);
  return SpecializationMatrix(frame, std::move(s));
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CommuteResult commute_check(const SpecializationMatrix& s1, const SpecializationMatrix& s2, double tol) {
  require_same_frame(s1.frame(), s2.frame());
  const double deviation = max_abs(s1.matrix() * s2.matrix() - s2.matrix() * s1.matrix());
  return {deviation <= tol, deviation};
}

bool idempotence_check(const SpecializationMatrix& s, double tol) {
  return max_abs(s.matrix() * s.matrix() - s.matrix()) <= tol;
}

SubsetTransform transform_matrix(const Frame& frame) {
  frame.require_matrix_size();
  const std::uint32_t size = frame.subset_count();
  SubsetTransform out{Matrix::Zero(size, size), Matrix::Zero(size, size)};
  for (std::uint32_t a = 0; a < size; ++a) {
    for_each_subset_of(Subset(a), [&](Subset b) {
      out.t(a, b.bits()) = 1.0;
      out.t_inverse(a, b.bits()) = ((std::popcount(a) - b.cardinality()) % 2 == 0) ? 1.0 : -1.0;
    });
  }
  return out;
}

namespace {

Vector generating_commonality(const SpecializationMatrix& s) {
  return zeta_supersets(s.matrix().row(s.frame().universe().bits()).transpose());
}

}  // namespace

EigenStructure eigen_structure(const SpecializationMatrix& s, double tol) {
  if (!is_dempsterian(s, tol)) throw PreconditionError("eigen structure requires a Dempsterian specialization");
  auto [t, t_inverse] = transform_matrix(s.frame());
  Vector q = generating_commonality(s);
  const Matrix& sm = s.matrix();

  EigenStructure out{std::move(t), std::move(q), std::move(t_inverse), 0.0, 0.0, 0.0};
  out.diagonal_error = (sm.diagonal() - out.eigenvalues).cwiseAbs().maxCoeff();
  out.reconstruction_error = max_abs(sm - out.t * out.eigenvalues.asDiagonal() * out.t_inverse);
  // Row A of T^-1 S_m - diag(q) T^-1 is the eigen residual for row A.
  out.eigenvector_residual = max_abs(out.t_inverse * sm - out.eigenvalues.asDiagonal() * out.t_inverse);
  return out;
}

DespecializationMatrix despecialize_matrix(const SpecializationMatrix& s, double tol) {
  if (!is_dempsterian(s, tol)) throw PreconditionError("de-specialization requires a Dempsterian specialization");
  const Frame& frame = s.frame();
  const Vector q = generating_commonality(s);
  for (std::uint32_t a = frame.universe().bits() + 1; a-- > 0;)
    if (std::abs(q(a)) <= tol) throw SingularSpecialization("singular: q(" + display(frame, Subset(a)) + ")=0");
  const auto [t, t_inverse] = transform_matrix(frame);
  return DespecializationMatrix(frame, t * q.cwiseInverse().asDiagonal() * t_inverse);
}

MassFunction apply_despecialization(const MassFunction& m, const DespecializationMatrix& d, double tol) {
  require_same_frame(m.frame(), d.frame());
  Vector out = (m.values().transpose() * d.matrix()).transpose();
  for (Eigen::Index a = 0; a < out.size(); ++a) {
    if (out(a) < -tol)
      throw NotRetractable("de-specialization gives mass " + std::to_string(out(a)) + " to " +
                           display(m.frame(), Subset(static_cast<std::uint32_t>(a))) +
                           ": the evidence was not part of this belief state");
    if (out(a) < 0.0) out(a) = 0.0;
  }
  return MassFunction(m.frame(), std::move(out), tol);
}

GeneralizationMatrix enlargement_matrix(const Frame& frame, Subset a) {
  frame.require_matrix_size();
  frame.check(a);
  const std::uint32_t size = frame.subset_count();
  Matrix g = Matrix::Zero(size, size);
  for (std::uint32_t x = 0; x < size; ++x) g(x, x | a.bits()) = 1.0;
  return GeneralizationMatrix(frame, std::move(g));
}

GeneralizationMatrix disjunctive_matrix(const MassFunction& m) {
  const Frame& frame = m.frame();
  frame.require_matrix_size();
  const std::uint32_t size = frame.subset_count();
  Matrix g = Matrix::Zero(size, size);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t x = 0; x < size; ++x) g(a, a | x) += m.values()(x);
  return GeneralizationMatrix(frame, std::move(g));
}

}  // namespace tbm
