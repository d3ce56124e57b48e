#pragma once

#include <cstdint>
#include <utility>

namespace swarmsim {

/// splitmix64 finalizer; stateless 64-bit mixing.
std::uint64_t mix64(std::uint64_t x);

/// Derives the seed of a child stream from a master seed and two indices
/// (e.g. robot id and trial id). The formula is fixed so results are
/// reproducible independent of execution order or worker count.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

/// xoshiro256++ stream with typed draw helpers.
///
/// Every helper consumes a fixed number of 64-bit words (normal: 2,
/// uniform/bernoulli/exponential/symmetric: 1), so two streams with the
/// same seed stay draw-for-draw aligned regardless of parameter values.
///
/// A stream constructed with reflect=true produces the mirror image of the
/// plain stream with the same seed: motor-noise pairs come out swapped,
/// bernoulli(p) answers the exact complement of the plain bernoulli(1-p),
/// and symmetric draws are negated. Word consumption is unchanged.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, bool reflect = false);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; consumes exactly two words.
  double normal();
  double normal(double mean, double sd);

  /// The per-step motor noise draws (right, left), each N(0, sd^2).
  /// Reflected streams return the two draws swapped.
  std::pair<double, double> motor_noise_pair(double sd);

  /// True with probability p. Reflected streams return the complement of
  /// what a plain stream would return for probability 1-p.
  bool bernoulli(double p);

  /// Exponential with the given mean.
  double exponential(double mean);

  /// Uniform in [-amplitude, amplitude); negated on reflected streams.
  double symmetric(double amplitude);

  bool reflected() const { return reflected_; }

 private:
  std::uint64_t state_[4];
  bool reflected_;
};

}  // namespace swarmsim
