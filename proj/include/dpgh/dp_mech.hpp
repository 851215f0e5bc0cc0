#ifndef DPGH_DP_MECH_HPP_
#define DPGH_DP_MECH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dpgh {

// Seedable 64-bit generator (splitmix64 seeding, xoshiro256** stream).
// Child streams are a pure function of (this stream's seed, label), so
// sibling computations can draw independently of scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in (0, 1).
  double uniform_open();
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

  Rng child(std::string_view label) const;

 private:
  std::uint64_t seed_;
  std::uint64_t state_[4];
};

// Privacy parameter. The infinite value is the noiseless mode: every noise
// draw is 0 and every quantity scaled by 1/ε vanishes.
class Epsilon {
 public:
  // Throws std::domain_error unless value > 0 (+inf is accepted).
  explicit Epsilon(double value);
  static Epsilon infinite();

  bool is_infinite() const;
  double value() const { return value_; }
  // 1/ε, or 0 in noiseless mode.
  double inverse() const { return is_infinite() ? 0.0 : 1.0 / value_; }

  friend Epsilon operator/(Epsilon e, double divisor);
  friend Epsilon operator*(Epsilon e, double factor);

 private:
  double value_;
};

// Scale parameter of a noise distribution; the noiseless scale draws 0.
class NoiseScale {
 public:
  // Throws std::domain_error unless 0 < b < inf.
  explicit NoiseScale(double b);
  static NoiseScale noiseless();
  // Δ/ε, noiseless when ε is infinite.
  static NoiseScale calibrated(double sensitivity, Epsilon eps);

  bool is_noiseless() const { return noiseless_; }
  // Infinity in noiseless mode, which makes the ledger cost Δ/b vanish.
  double value() const;

 private:
  NoiseScale() = default;
  double b_ = 0.0;
  bool noiseless_ = true;
};

// Laplace(0, b) by inverse CDF.
double sample_laplace(NoiseScale b, Rng& rng);
// Exponential with the given mean by inverse CDF.
double sample_exponential(NoiseScale mean, Rng& rng);

double laplace_cdf(double x, double b);
double exponential_cdf(double x, double mean);

struct LedgerEntry {
  std::string mechanism;
  double sensitivity;
  double scale;
  std::size_t count;

  double cost() const;
};

// Audit log of privacy charges. Algorithms split their budget statically;
// the ledger re-adds what was actually charged so the split can be checked.
// Cost of an entry is count·Δ/b.
class PrivacyLedger {
 public:
  PrivacyLedger() : budget_(Epsilon::infinite()) {}
  explicit PrivacyLedger(Epsilon budget) : budget_(budget) {}

  void charge(std::string mechanism, double sensitivity, double scale,
              std::size_t count = 1);
  void charge(std::string mechanism, double sensitivity, NoiseScale scale,
              std::size_t count = 1) {
    charge(std::move(mechanism), sensitivity, scale.value(), count);
  }
  // Sequential composition with another ledger's charges.
  void append(const PrivacyLedger& other);

  double total() const;
  Epsilon budget() const { return budget_; }
  // total ≤ budget·(1 + 1e-12).
  bool within_budget() const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }

 private:
  Epsilon budget_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace dpgh

#endif  // DPGH_DP_MECH_HPP_
