#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tbm/specialization.hpp"

namespace tbm::verify {

// Outcome of one property check on one frame size.
struct VerificationReport {
  std::string check;
  int frame_size = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t violations = 0;
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
  // JSON object holding the first violating instance.
  std::optional<std::string> witness;

  bool passed() const { return violations == 0 && worst_deviation <= tolerance; }
};

struct Options {
  double tolerance = 1e-9;
  // Test hook: perturbs one entry of each Dempsterian matrix built by the
  // commutation checks so that they must fail.
  bool inject_fault = false;
};

// Random instances. Deterministic for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Independent uniforms with a random subset zeroed, normalized to one.
  MassFunction mass(const Frame& frame);
  // Like mass() but every q(A) is at least floor (m(Omega) >= floor).
  MassFunction mass_with_commonality_floor(const Frame& frame, double floor);
  Subset subset(const Frame& frame);
  double uniform(double lo = 0.0, double hi = 1.0);

  // Each row A is a random distribution over the subsets of A n target.
  SpecializationMatrix specialization(const Frame& frame, std::optional<Subset> target = std::nullopt);
  // A Dempsterian matrix with one row re-mixed so that it is valid but not Dempsterian.
  // Needs n >= 2: on a one-element frame every specialization is Dempsterian.
  SpecializationMatrix non_dempsterian(const Frame& frame);
  // Row A is (m0 conditioned on A) further specialized at random, so every
  // row is at least as committed as m0.
  SpecializationMatrix dominated_by(const MassFunction& m0);

  std::mt19937_64& engine() { return engine_; }

 private:
  Vector random_distribution(std::size_t count);

  std::mt19937_64 engine_;
};

// Least committed conditioning: random S mapping everything into C versus S_C.
VerificationReport check_theorem1(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                  const Options& options = {});
// Conditioning matrices are idempotent and compose by intersection, exhaustively.
std::vector<VerificationReport> check_lemma1(const Frame& frame);
// Dempsterian matrices commute with every S_C; perturbed ones fail against some S_C.
std::vector<VerificationReport> check_theorem2(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options = {});
// S_m1 S_m2 = S_m2 S_m1 = S_(m1 (+) m2).
VerificationReport check_theorem3(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                  const Options& options = {});
// For S whose rows are dominated by m0: pl(m S) <= pl(m S_m0), and m S_m0 = m (+) m0.
std::vector<VerificationReport> check_theorem4(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options = {});
// diag(S_m) = q, S_m = T Lambda T^-1, rows of T^-1 are left eigenvectors.
std::vector<VerificationReport> check_eigen(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                            const Options& options = {});
// Conditioning, combination, retraction, disjunction and enlargement invariants.
std::vector<VerificationReport> check_dynamics(const Frame& frame, std::size_t samples, std::uint64_t seed,
                                               const Options& options = {});

// Check names accepted by run_all.
const std::vector<std::string>& check_names();

struct RunConfig {
  std::vector<int> sizes = {1, 2, 3, 4};
  std::vector<std::string> checks = check_names();
  // 0 selects each check's default sample count.
  std::size_t samples = 0;
  std::uint64_t seed = 20240101;
  Options options;
};

std::vector<VerificationReport> run_all(const RunConfig& config);

bool all_passed(const std::vector<VerificationReport>& reports);

// JSON document with one entry per report.
std::string to_json(const std::vector<VerificationReport>& reports);

}  // namespace tbm::verify
