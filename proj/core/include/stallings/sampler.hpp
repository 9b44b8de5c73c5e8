#ifndef STALLINGS_SAMPLER_HPP
#define STALLINGS_SAMPLER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

/// A permutation of {1,..,n}, stored 0-based with its inverse alongside.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_images(std::vector<int> images);  // 0-based, validated

  int degree() const { return static_cast<int>(fwd_.size()); }
  int apply(int x) const { return fwd_[static_cast<std::size_t>(x)]; }
  int apply_inverse(int x) const { return inv_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return fwd_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(std::vector<int> fwd, std::vector<int> inv)
      : fwd_(std::move(fwd)), inv_(std::move(inv)) {}
  std::vector<int> fwd_, inv_;
};

/// Word map: substitute sigmas for the basis letters and evaluate.
/// Convention, pinned by test: the leftmost letter acts first.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& sigmas);

/// Orbit of a single point under the word map (leftmost letter first).
int track_point(const Word& w, const std::vector<Permutation>& sigmas, int start);

struct ExhaustiveBudget {
  int max_n = 5;
  int max_k = 2;
};

/// Exact fraction of k-tuples of permutations under which every generator
/// image fixes the point 1. Since the stabilizer is a subgroup, checking
/// generators checks all of H.
mpq_class exhaustive_probability(const GeneratingSet& h, int n,
                                 const ExhaustiveBudget& budget = {});

struct EstimateReport {
  enum class Kind { Probability, FixedPointAverage };
  Kind kind;
  double estimate = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  double standard_error = 0.0;
  std::optional<mpq_class> exact;  // present in exhaustive mode
  std::string rng_name;            // PRNG recorded for reproducibility
};

/// Seeded Monte Carlo estimate of the stabilizer probability. Trial i
/// draws its permutations from a splitmix64 stream derived from
/// (seed, i), so results do not depend on any execution schedule.
EstimateReport monte_carlo_probability(const GeneratingSet& h, int n, long trials,
                                       std::uint64_t seed);

/// Sample mean of the fixed-point count of the image of w.
EstimateReport average_fixed_points_mc(const Word& w, int n, long trials, std::uint64_t seed);

/// exhaustive_probability wrapped as a report (exact field set).
EstimateReport exhaustive_report(const GeneratingSet& h, int n,
                                 const ExhaustiveBudget& budget = {});

}  // namespace stallings

#endif
