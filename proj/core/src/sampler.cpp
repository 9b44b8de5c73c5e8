#include "stallings/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stallings/detail/splitmix.hpp"
#include "stallings/errors.hpp"

namespace stallings {

namespace {

constexpr const char* kRngName = "splitmix64";

std::vector<int> inverse_of(const std::vector<int>& fwd) {
  std::vector<int> inv(fwd.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) inv[static_cast<std::size_t>(fwd[i])] = static_cast<int>(i);
  return inv;
}

Permutation random_permutation(int n, detail::SplitMix64& rng) {
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
  }
  return Permutation::from_images(std::move(a));
}

void check_sigmas(const Word& w, const std::vector<Permutation>& sigmas) {
  if (static_cast<int>(sigmas.size()) != w.ambient_rank()) {
    throw PreconditionError("word map: need one permutation per basis letter");
  }
  for (const Permutation& s : sigmas) {
    if (s.degree() != sigmas.front().degree()) {
      throw PreconditionError("word map: permutation degrees differ");
    }
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("permutation degree must be >= 1");
  std::vector<int> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.end(), 0);
  std::vector<int> b = a;
  return Permutation(std::move(a), std::move(b));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw PreconditionError("permutation degree must be >= 1");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x : images) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) {
      throw PreconditionError("images do not form a bijection");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  std::vector<int> inv = inverse_of(images);
  return Permutation(std::move(images), std::move(inv));
}

int track_point(const Word& w, const std::vector<Permutation>& sigmas, int start) {
  int y = start;
  for (const Letter& l : w.letters()) {
    const Permutation& s = sigmas[static_cast<std::size_t>(l.generator - 1)];
    y = l.sign > 0 ? s.apply(y) : s.apply_inverse(y);
  }
  return y;
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& sigmas) {
  check_sigmas(w, sigmas);
  const int n = sigmas.empty() ? 1 : sigmas.front().degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = track_point(w, sigmas, x);
  return Permutation::from_images(std::move(images));
}

mpq_class exhaustive_probability(const GeneratingSet& h, int n, const ExhaustiveBudget& budget) {
  if (n < 1) throw PreconditionError("exhaustive_probability: n must be >= 1");
  if (n > budget.max_n || h.ambient_rank > budget.max_k) {
    throw BudgetError("exhaustive enumeration budget exceeded (n <= " +
                      std::to_string(budget.max_n) + ", k <= " + std::to_string(budget.max_k) +
                      ")");
  }

  // All n! permutations once; tuples iterated by odometer over indices.
  std::vector<Permutation> all;
  std::vector<int> seed_images(static_cast<std::size_t>(n));
  std::iota(seed_images.begin(), seed_images.end(), 0);
  std::vector<int> current = seed_images;
  do {
    all.push_back(Permutation::from_images(current));
  } while (std::next_permutation(current.begin(), current.end()));

  const int k = h.ambient_rank;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(k), 0);
  std::vector<Permutation> sigmas(static_cast<std::size_t>(k), all.front());

  mpz_class hits(0), total(0);
  for (;;) {
    for (int i = 0; i < k; ++i) sigmas[static_cast<std::size_t>(i)] = all[odometer[static_cast<std::size_t>(i)]];
    bool ok = true;
    for (const Word& g : h.generators) {
      if (track_point(g, sigmas, 0) != 0) {
        ok = false;
        break;
      }
    }
    hits += ok;
    total += 1;

    int pos = 0;
    while (pos < k) {
      if (++odometer[static_cast<std::size_t>(pos)] < all.size()) break;
      odometer[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
  }

  mpq_class p(hits, total);
  p.canonicalize();
  return p;
}

EstimateReport monte_carlo_probability(const GeneratingSet& h, int n, long trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("monte_carlo_probability: trials must be >= 1");
  if (n < 1) throw PreconditionError("monte_carlo_probability: n must be >= 1");

  long hits = 0;
  std::vector<Permutation> sigmas;
  for (long t = 0; t < trials; ++t) {
    detail::SplitMix64 rng(detail::derive_stream(seed, static_cast<std::uint64_t>(t)));
    sigmas.clear();
    for (int i = 0; i < h.ambient_rank; ++i) sigmas.push_back(random_permutation(n, rng));
    bool ok = true;
    for (const Word& g : h.generators) {
      if (track_point(g, sigmas, 0) != 0) {
        ok = false;
        break;
      }
    }
    hits += ok;
  }

  EstimateReport report;
  report.kind = EstimateReport::Kind::Probability;
  report.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  report.trials = trials;
  report.seed = seed;
  report.standard_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(trials));
  report.rng_name = kRngName;
  return report;
}

EstimateReport average_fixed_points_mc(const Word& w, int n, long trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("average_fixed_points_mc: trials must be >= 1");
  if (n < 1) throw PreconditionError("average_fixed_points_mc: n must be >= 1");

  double sum = 0.0, sum_sq = 0.0;
  std::vector<Permutation> sigmas;
  for (long t = 0; t < trials; ++t) {
    detail::SplitMix64 rng(detail::derive_stream(seed, static_cast<std::uint64_t>(t)));
    sigmas.clear();
    for (int i = 0; i < w.ambient_rank(); ++i) sigmas.push_back(random_permutation(n, rng));
    int fixed = 0;
    for (int x = 0; x < n; ++x) fixed += (track_point(w, sigmas, x) == x);
    sum += fixed;
    sum_sq += static_cast<double>(fixed) * fixed;
  }

  EstimateReport report;
  report.kind = EstimateReport::Kind::FixedPointAverage;
  report.estimate = sum / static_cast<double>(trials);
  report.trials = trials;
  report.seed = seed;
  if (trials > 1) {
    double variance =
        (sum_sq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1);
    report.standard_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(trials));
  }
  report.rng_name = kRngName;
  return report;
}

EstimateReport exhaustive_report(const GeneratingSet& h, int n, const ExhaustiveBudget& budget) {
  mpq_class p = exhaustive_probability(h, n, budget);

  EstimateReport report;
  report.kind = EstimateReport::Kind::Probability;
  report.estimate = p.get_d();
  mpz_class total;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(total.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(h.ambient_rank));
  report.trials = total.fits_slong_p() ? total.get_si() : -1;
  report.standard_error = 0.0;
  report.exact = p;
  report.rng_name = "none (exhaustive)";
  return report;
}

}  // namespace stallings
