#include "tbm/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

#include "tbm/commitment.hpp"
#include "tbm/dynamics.hpp"

namespace tbm::verify {
namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vector(m.row(r).transpose())));
  return out;
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Accumulates per-instance deviations into a report; keeps the first witness.
class Tracker {
 public:
  Tracker(std::string check, const Frame& frame, std::uint64_t seed, double tolerance) {
    report_.check = std::move(check);
    report_.frame_size = frame.size();
    report_.seed = seed;
    report_.tolerance = tolerance;
  }

  void observe(double deviation, const std::function<Json()>& witness) {
    ++report_.instances;
    report_.worst_deviation = std::max(report_.worst_deviation, deviation);
    if (!(deviation <= report_.tolerance)) flag(witness);
  }

  // Boolean outcome for checks without a numeric deviation.
  void observe_outcome(bool ok, const std::function<Json()>& witness) {
    ++report_.instances;
    if (!ok) flag(witness);
  }

  VerificationReport& report() { return report_; }
  VerificationReport take() { return std::move(report_); }

 private:
  void flag(const std::function<Json()>& witness) {
    if (report_.violations++ == 0) {
      Json w = witness();
      w["check"] = report_.check;
      w["n"] = report_.frame_size;
      w["seed"] = report_.seed;
      report_.witness = w.dump();
    }
  }

  VerificationReport report_;
};

// Naive double sum over pairs of focal sets; independent of the q-product path.
Vector conjunctive_double_sum(const Vector& m0, const Vector& m1) {
  Vector out = Vector::Zero(m0.size());
  for (Eigen::Index x = 0; x < m0.size(); ++x)
    for (Eigen::Index y = 0; y < m1.size(); ++y) out(x & y) += m0(x) * m1(y);
  return out;
}

Vector disjunctive_double_sum(const Vector& m0, const Vector& m1) {
  Vector out = Vector::Zero(m0.size());
  for (Eigen::Index x = 0; x < m0.size(); ++x)
    for (Eigen::Index y = 0; y < m1.size(); ++y) out(x | y) += m0(x) * m1(y);
  return out;
}

// Every mass flowing to Z for conditioning on X u Y flows to Z u Y' for X u Y':
// r_Y(W u Y) = r_empty(W) for W subset of X.
double enlargement_invariance_deviation(const MassFunction& enlarged, Subset a, Subset x) {
  const Vector base = condition(enlarged, x).values();
  double worst = 0.0;
  for_each_subset_of(a, [&](Subset y) {
    const Vector r = condition(enlarged, x | y).values();
    double moved = 0.0;
    for_each_subset_of(x, [&](Subset w) {
      worst = std::max(worst, std::abs(r((w | y).bits()) - base(w.bits())));
      moved += r((w | y).bits());
    });
    worst = std::max(worst, std::abs(moved - r.sum()));
  });
  return worst;
}

std::size_t or_default(std::size_t samples, std::size_t fallback) { return samples == 0 ? fallback : samples; }

}  // namespace

// ---------------------------------------------------------------------------
// Sampler

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

Subset Sampler::subset(const Frame& frame) {
  return Subset(std::uniform_int_distribution<std::uint32_t>(0, frame.universe().bits())(engine_));
}

Vector Sampler::random_distribution(std::size_t count) {
  Vector w(static_cast<Eigen::Index>(count));
  const double sparsity = uniform(0.0, 0.8);
  for (auto& v : w) v = uniform() < sparsity ? 0.0 : uniform();
  if (w.sum() <= 0.0) w(std::uniform_int_distribution<Eigen::Index>(0, w.size() - 1)(engine_)) = 1.0;
  return w / w.sum();
}

MassFunction Sampler::mass(const Frame& frame) {
  return MassFunction(frame, random_distribution(frame.subset_count()));
}

MassFunction Sampler::mass_with_commonality_floor(const Frame& frame, double floor) {
  const double share = uniform(floor + 1e-3, std::min(1.0, floor + 0.5));
  Vector masses = (1.0 - share) * random_distribution(frame.subset_count());
  masses(frame.universe().bits()) += share;
  return MassFunction(frame, std::move(masses));
}

SpecializationMatrix Sampler::specialization(const Frame& frame, std::optional<Subset> target) {
  const std::uint32_t size = frame.subset_count();
  const std::uint32_t allowed = target ? target->bits() : frame.universe().bits();
  Matrix s = Matrix::Zero(size, size);
  for (std::uint32_t a = 0; a < size; ++a) {
    std::vector<std::uint32_t> targets;
    for_each_subset_of(Subset(a & allowed), [&](Subset b) { targets.push_back(b.bits()); });
    const Vector w = random_distribution(targets.size());
    for (std::size_t k = 0; k < targets.size(); ++k) s(a, targets[k]) = w(static_cast<Eigen::Index>(k));
  }
  return SpecializationMatrix(frame, std::move(s));
}

SpecializationMatrix Sampler::non_dempsterian(const Frame& frame) {
  if (frame.size() < 2) throw InvalidArgument("every specialization on a one-element frame is Dempsterian");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix s = dempsterian_matrix(mass(frame)).matrix();
    const std::uint32_t row = std::uniform_int_distribution<std::uint32_t>(1, frame.universe().bits())(engine_);
    std::vector<std::uint32_t> targets;
    for_each_subset_of(Subset(row), [&](Subset b) { targets.push_back(b.bits()); });
    const Vector w = random_distribution(targets.size());
    const double mix = uniform(0.3, 0.7);
    s.row(row) *= 1.0 - mix;
    for (std::size_t k = 0; k < targets.size(); ++k) s(row, targets[k]) += mix * w(static_cast<Eigen::Index>(k));
    if (!is_dempsterian(frame, s, 1e-6)) return SpecializationMatrix(frame, std::move(s));
  }
  throw Error("could not sample a non-Dempsterian specialization");
}

SpecializationMatrix Sampler::dominated_by(const MassFunction& m0) {
  const Frame& frame = m0.frame();
  const std::uint32_t size = frame.subset_count();
  const Matrix identity = Matrix::Identity(size, size);
  Matrix s(size, size);
  for (std::uint32_t a = 0; a < size; ++a) {
    const double keep = uniform() < 0.25 ? 1.0 : uniform();
    const Matrix refine = keep * identity + (1.0 - keep) * specialization(frame).matrix();
    s.row(a) = condition(m0, Subset(a)).values().transpose() * refine;
  }
  return SpecializationMatrix(frame, std::move(s));
}

// ---------------------------------------------------------------------------
// Checks

VerificationReport check_theorem1(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                  const Options& options) {
  Tracker tracker("theorem1", frame, seed, options.tolerance);
  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Subset c = rng.subset(frame);
    const MassFunction m = rng.mass(frame);
    const SpecializationMatrix s_c = conditioning_matrix(frame, c);
    const SpecializationMatrix s = (i % 10 == 0) ? s_c : rng.specialization(frame, c);
    const Vector pl_s = pl_from_mass(apply(m, s)).values;
    const Vector pl_c = pl_from_mass(apply(m, s_c)).values;
    const double excess = (pl_s - pl_c).maxCoeff();
    const double deviation = std::max(positive_part(pl_s(frame.complement(c).bits())), positive_part(excess));
    tracker.observe(deviation, [&] {
      return Json{{"sample", i}, {"C", frame.key(c)}, {"m", to_json(m.values())}, {"S", to_json(s.matrix())}};
    });
  }
  tracker.report().detail = "pl'(not C) = 0 and pl_C >= pl' for S mapping into C";
  return tracker.take();
}

std::vector<VerificationReport> check_lemma1(const Frame& frame) {
  Tracker idempotent("lemma1.idempotent", frame, 0, 0.0);
  Tracker composition("lemma1.composition", frame, 0, 0.0);
  const std::uint32_t size = frame.subset_count();
  std::vector<SpecializationMatrix> conditioning;
  conditioning.reserve(size);
  for (std::uint32_t c = 0; c < size; ++c) conditioning.push_back(conditioning_matrix(frame, Subset(c)));
  for (std::uint32_t c = 0; c < size; ++c) {
    const Matrix& s = conditioning[c].matrix();
    idempotent.observe(max_abs(s * s - s), [&] { return Json{{"C", frame.key(Subset(c))}}; });
    for (std::uint32_t d = 0; d < size; ++d) {
      const double deviation = max_abs(s * conditioning[d].matrix() - conditioning[c & d].matrix());
      composition.observe(deviation, [&] { return Json{{"C", frame.key(Subset(c))}, {"C2", frame.key(Subset(d))}}; });
    }
  }
  idempotent.report().detail = "S_C S_C = S_C for every C, exact";
  composition.report().detail = "S_C S_C' = S_(C n C') for every pair, exact";
  return {idempotent.take(), composition.take()};
}

std::vector<VerificationReport> check_theorem2(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options) {
  Tracker commuting("theorem2.dempsterian", frame, seed, options.tolerance);
  Tracker witnesses("theorem2.witness", frame, seed, options.tolerance);
  Sampler rng(seed);
  const std::uint32_t size = frame.subset_count();
  std::vector<SpecializationMatrix> conditioning;
  for (std::uint32_t c = 0; c < size; ++c) conditioning.push_back(conditioning_matrix(frame, Subset(c)));

  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m = rng.mass(frame);
    const SpecializationMatrix s =
        (options.inject_fault && frame.size() >= 2) ? rng.non_dempsterian(frame) : dempsterian_matrix(m);
    double worst = 0.0;
    Subset worst_c;
    for (std::uint32_t c = 0; c < size; ++c) {
      const double deviation = commute_check(s, conditioning[c], options.tolerance).deviation;
      if (deviation > worst) {
        worst = deviation;
        worst_c = Subset(c);
      }
    }
    commuting.observe(worst, [&] {
      return Json{{"sample", i}, {"C", frame.key(worst_c)}, {"S", to_json(s.matrix())}};
    });
  }
  commuting.report().detail = "every Dempsterian S_m commutes with every S_C";

  if (frame.size() < 2) {
    witnesses.report().detail = "skipped: every specialization on a one-element frame is Dempsterian";
    return {commuting.take(), witnesses.take()};
  }
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const SpecializationMatrix s = rng.non_dempsterian(frame);
    double strongest = 0.0;
    for (std::uint32_t c = 0; c < size; ++c)
      strongest = std::max(strongest, commute_check(s, conditioning[c], options.tolerance).deviation);
    weakest = std::min(weakest, strongest);
    witnesses.observe_outcome(strongest > options.tolerance,
                              [&] { return Json{{"sample", i}, {"S", to_json(s.matrix())}}; });
  }
  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "every sampled non-Dempsterian S fails to commute with some S_C; weakest witness %.3g", weakest);
  witnesses.report().detail = buffer;
  return {commuting.take(), witnesses.take()};
}

VerificationReport check_theorem3(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                  const Options& options) {
  Tracker tracker("theorem3", frame, seed, options.tolerance);
  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m1 = rng.mass(frame);
    const MassFunction m2 = (i % 20 == 0) ? vacuous(frame) : rng.mass(frame);
    const SpecializationMatrix s1 =
        (options.inject_fault && frame.size() >= 2) ? rng.non_dempsterian(frame) : dempsterian_matrix(m1);
    const SpecializationMatrix s2 = dempsterian_matrix(m2);
    const Matrix combined = dempsterian_matrix(combine_conjunctive(m1, m2)).matrix();
    const Matrix s12 = s1.matrix() * s2.matrix();
    const Matrix s21 = s2.matrix() * s1.matrix();
    const double deviation = std::max({max_abs(s12 - s21), max_abs(s12 - combined), max_abs(s21 - combined)});
    tracker.observe(deviation, [&] {
      return Json{{"sample", i}, {"m1", to_json(m1.values())}, {"m2", to_json(m2.values())},
                  {"S1", to_json(s1.matrix())}};
    });
  }
  tracker.report().detail = "S_m1 S_m2 = S_m2 S_m1 = S_(m1 (+) m2)";
  return tracker.take();
}

std::vector<VerificationReport> check_theorem4(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options) {
  Tracker domination("theorem4", frame, seed, options.tolerance);
  Tracker identity("theorem4.identity", frame, seed, 1e-12);
  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m0 = rng.mass(frame);
    const SpecializationMatrix s0 = dempsterian_matrix(m0);
    const SpecializationMatrix s = (i % 10 == 0) ? s0 : rng.dominated_by(m0);
    const MassFunction m = rng.mass(frame);

    // Membership in the family: each row is at least as committed as m0.
    const Vector pl0 = pl_from_mass(m0).values;
    double row_excess = 0.0;
    for (std::uint32_t a = 0; a < frame.subset_count(); ++a) {
      const MassFunction row(frame, s.matrix().row(a).transpose());
      row_excess = std::max(row_excess, (pl_from_mass(row).values - pl0).maxCoeff());
    }
    const MassFunction via_s0 = apply(m, s0);
    const double excess = (pl_from_mass(apply(m, s)).values - pl_from_mass(via_s0).values).maxCoeff();
    domination.observe(std::max(positive_part(row_excess), positive_part(excess)), [&] {
      return Json{{"sample", i}, {"m0", to_json(m0.values())}, {"m", to_json(m.values())},
                  {"S", to_json(s.matrix())}};
    });
    identity.observe(max_abs_diff(via_s0.values(), combine_conjunctive(m, m0).values()), [&] {
      return Json{{"sample", i}, {"m0", to_json(m0.values())}, {"m", to_json(m.values())}};
    });
  }
  domination.report().detail = "rows dominated by m0 imply pl(m S) <= pl(m S_m0)";
  identity.report().detail = "m S_m0 = m (+) m0";
  return {domination.take(), identity.take()};
}

std::vector<VerificationReport> check_eigen(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                            const Options& options) {
  Tracker diagonal("eigen.diagonal", frame, seed, 1e-12);
  Tracker structure("eigen", frame, seed, options.tolerance);
  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m = (i == 0) ? vacuous(frame) : rng.mass(frame);
    const EigenStructure e = eigen_structure(dempsterian_matrix(m), options.tolerance);
    const Vector q = q_from_mass(m).values;
    const auto witness = [&] { return Json{{"sample", i}, {"m", to_json(m.values())}}; };
    diagonal.observe(std::max(e.diagonal_error, max_abs_diff(e.eigenvalues, q)), witness);
    structure.observe(std::max(e.reconstruction_error, e.eigenvector_residual), witness);
  }
  diagonal.report().detail = "diag(S_m) = q";
  structure.report().detail = "S_m = T Lambda T^-1 and t S_m = q(A) t for rows t of T^-1";
  return {diagonal.take(), structure.take()};
}

std::vector<VerificationReport> check_dynamics(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options) {
  const double tol = options.tolerance;
  Tracker conditioning("dynamics.conditioning", frame, seed, tol);
  Tracker conjunctive("dynamics.conjunctive", frame, seed, tol);
  Tracker retraction("dynamics.retraction", frame, seed, 1e-8);
  Tracker disjunctive("dynamics.disjunctive", frame, seed, tol);
  Tracker enlargement("dynamics.enlargement", frame, seed, tol);
  Sampler rng(seed);
  const std::uint32_t top = frame.universe().bits();

  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m = rng.mass(frame);
    const Subset c = rng.subset(frame);
    const Subset c2 = rng.subset(frame);
    const Subset not_c = frame.complement(c);

    {
      const MassFunction direct = condition(m, c);
      double deviation = max_abs_diff(direct.values(), apply(m, conditioning_matrix(frame, c)).values());
      const Vector bel = bel_from_mass(m).values;
      const Vector bel_c = bel_from_mass(direct).values;
      for (std::uint32_t b = 0; b <= top; ++b)
        deviation = std::max(deviation, std::abs(bel_c(b) - (bel(b | not_c.bits()) - bel(not_c.bits()))));
      deviation = std::max(deviation, std::abs(pl_from_mass(direct).values(not_c.bits())));
      deviation = std::max(deviation, max_abs_diff(condition(direct, c2).values(), condition(m, c & c2).values()));
      conditioning.observe(deviation, [&] {
        return Json{{"sample", i}, {"m", to_json(m.values())}, {"C", frame.key(c)}, {"C2", frame.key(c2)}};
      });
    }
    {
      const MassFunction m1 = rng.mass(frame);
      const MassFunction m2 = rng.mass(frame);
      const MassFunction m01 = combine_conjunctive(m, m1);
      double deviation = max_abs_diff(m01.values(), conjunctive_double_sum(m.values(), m1.values()));
      deviation = std::max(deviation, max_abs_diff(m01.values(), combine_conjunctive(m1, m).values()));
      deviation = std::max(deviation, max_abs_diff(combine_conjunctive(m01, m2).values(),
                                                   combine_conjunctive(m, combine_conjunctive(m1, m2)).values()));
      deviation = std::max(deviation, max_abs_diff(combine_conjunctive(m, vacuous(frame)).values(), m.values()));
      deviation = std::max(deviation, max_abs_diff(q_from_mass(m01).values,
                                                   q_from_mass(m).values.cwiseProduct(q_from_mass(m1).values)));
      const SpecializationMatrix s1 = dempsterian_matrix(m1);
      const SpecializationMatrix s_c = conditioning_matrix(frame, c);
      deviation = std::max(deviation, max_abs_diff(apply(apply(m, s1), s_c).values(),
                                                   apply(apply(m, s_c), s1).values()));
      deviation = std::max(deviation, max_abs_diff(apply(m, s1).values(), m01.values()));
      deviation = std::max(deviation, max_abs_diff(apply(m, s1).values(), apply(m1, dempsterian_matrix(m)).values()));
      conjunctive.observe(deviation, [&] {
        return Json{{"sample", i}, {"m0", to_json(m.values())}, {"m1", to_json(m1.values())},
                    {"m2", to_json(m2.values())}, {"C", frame.key(c)}};
      });
    }
    {
      const MassFunction m1 = rng.mass_with_commonality_floor(frame, 0.05);
      const MassFunction m01 = combine_conjunctive(m, m1);
      double deviation = max_abs_diff(retract(m01, m1, tol).values(), m.values());
      const DespecializationMatrix d = despecialize_matrix(dempsterian_matrix(m1), tol);
      deviation = std::max(deviation, max_abs_diff(apply_despecialization(m01, d, tol).values(), m.values()));
      retraction.observe(deviation, [&] {
        return Json{{"sample", i}, {"m0", to_json(m.values())}, {"m1", to_json(m1.values())}};
      });
    }
    {
      const MassFunction m1 = rng.mass(frame);
      const MassFunction m_or = combine_disjunctive(m, m1);
      double deviation = max_abs_diff(m_or.values(), disjunctive_double_sum(m.values(), m1.values()));
      deviation = std::max(deviation, max_abs_diff(b_from_mass(m_or).values,
                                                   b_from_mass(m).values.cwiseProduct(b_from_mass(m1).values)));
      deviation = std::max(deviation, max_abs_diff(apply(m, disjunctive_matrix(m1)).values(), m_or.values()));
      if (m.conflict() < 1.0 - tol && m1.conflict() < 1.0 - tol) {
        const MassFunction n0 = normalize(m);
        const MassFunction n1 = normalize(m1);
        deviation = std::max(deviation, max_abs_diff(bel_from_mass(combine_disjunctive(n0, n1)).values,
                                                     bel_from_mass(n0).values.cwiseProduct(bel_from_mass(n1).values)));
      }
      disjunctive.observe(deviation, [&] {
        return Json{{"sample", i}, {"mE", to_json(m.values())}, {"mF", to_json(m1.values())}};
      });
    }
    {
      const Subset a = rng.subset(frame);
      const MassFunction enlarged = enlarge(m, a);
      double deviation = max_abs_diff(enlarged.values(), apply(m, enlargement_matrix(frame, a)).values());
      for_each_subset_of(frame.complement(a), [&](Subset x) {
        deviation = std::max(deviation, enlargement_invariance_deviation(enlarged, a, x));
      });
      enlargement.observe(deviation, [&] {
        return Json{{"sample", i}, {"m", to_json(m.values())}, {"A", frame.key(a)}};
      });
    }
  }
  conditioning.report().detail = "direct rule = S_C path = bel closed form; pl_C(not C) = 0; composition";
  conjunctive.report().detail = "q-product = double sum; commutative, associative, vacuous-neutral; matrix paths";
  retraction.report().detail = "retract and de-specialization invert combination when q_E > 0.05";
  disjunctive.report().detail = "double sum = b-product = G_m path; bel-product for normalized inputs";
  enlargement.report().detail = "matrix path; conditioning on X u Y invariant in Y subset of A";
  return {conditioning.take(), conjunctive.take(), retraction.take(), disjunctive.take(), enlargement.take()};
}

// ---------------------------------------------------------------------------
// Driver

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"theorem1", "lemma1", "theorem2", "theorem3",
                                                 "theorem4", "eigen",  "dynamics"};
  return names;
}

namespace {

// splitmix64 finalizer over (base, check name, n).
std::uint64_t derive_seed(std::uint64_t base, std::string_view check, int n) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : check) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  std::uint64_t z = base + h + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

std::vector<VerificationReport> run_all(const RunConfig& config) {
  for (const auto& name : config.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw InvalidArgument("unknown check '" + name + "'");
  std::vector<VerificationReport> reports;
  for (int n : config.sizes) {
    const Frame frame = Frame::of_size(n);
    frame.require_matrix_size();
    for (const auto& name : config.checks) {
      const std::uint64_t seed = derive_seed(config.seed, name, n);
      const auto& opts = config.options;
      if (name == "theorem1") reports.push_back(check_theorem1(frame, or_default(config.samples, 500), seed, opts));
      if (name == "lemma1") append(reports, check_lemma1(frame));
      if (name == "theorem2") append(reports, check_theorem2(frame, or_default(config.samples, 100), seed, opts));
      if (name == "theorem3") reports.push_back(check_theorem3(frame, or_default(config.samples, 200), seed, opts));
      if (name == "theorem4") append(reports, check_theorem4(frame, or_default(config.samples, 300), seed, opts));
      if (name == "eigen") append(reports, check_eigen(frame, or_default(config.samples, 200), seed, opts));
      if (name == "dynamics") append(reports, check_dynamics(frame, or_default(config.samples, 500), seed, opts));
    }
  }
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  Json doc;
  doc["passed"] = all_passed(reports);
  Json list = Json::array();
  for (const auto& r : reports) {
    Json entry{{"check", r.check},
               {"n", r.frame_size},
               {"seed", r.seed},
               {"instances", r.instances},
               {"violations", r.violations},
               {"worst_deviation", r.worst_deviation},
               {"tolerance", r.tolerance},
               {"passed", r.passed()},
               {"detail", r.detail}};
    if (r.witness) entry["witness"] = Json::parse(*r.witness);
    list.push_back(std::move(entry));
  }
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace tbm::verify
