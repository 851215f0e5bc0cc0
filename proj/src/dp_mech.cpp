#include "dpgh/dp_mech.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dpgh {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& word : state_) word = splitmix64(x);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("uniform_index bound must be positive");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

Rng Rng::child(std::string_view label) const {
  std::uint64_t mix = seed_ ^ rotl(fnv1a(label), 17);
  return Rng(splitmix64(mix));
}

Epsilon::Epsilon(double value) : value_(value) {
  if (!(value > 0.0)) throw std::domain_error("epsilon must be positive");
}

Epsilon Epsilon::infinite() {
  return Epsilon(std::numeric_limits<double>::infinity());
}

bool Epsilon::is_infinite() const { return std::isinf(value_); }

Epsilon operator/(Epsilon e, double divisor) {
  return Epsilon(e.value_ / divisor);
}

Epsilon operator*(Epsilon e, double factor) {
  return Epsilon(e.value_ * factor);
}

NoiseScale::NoiseScale(double b) : b_(b), noiseless_(false) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::domain_error("noise scale must be positive and finite");
  }
}

NoiseScale NoiseScale::noiseless() { return NoiseScale(); }

NoiseScale NoiseScale::calibrated(double sensitivity, Epsilon eps) {
  if (eps.is_infinite()) return noiseless();
  return NoiseScale(sensitivity / eps.value());
}

double NoiseScale::value() const {
  return noiseless_ ? std::numeric_limits<double>::infinity() : b_;
}

double sample_laplace(NoiseScale b, Rng& rng) {
  if (b.is_noiseless()) return 0.0;
  const double u = rng.uniform_open() - 0.5;
  const double magnitude = -b.value() * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

double sample_exponential(NoiseScale mean, Rng& rng) {
  if (mean.is_noiseless()) return 0.0;
  return -mean.value() * std::log1p(-rng.uniform());
}

double laplace_cdf(double x, double b) {
  return x < 0 ? 0.5 * std::exp(x / b) : 1.0 - 0.5 * std::exp(-x / b);
}

double exponential_cdf(double x, double mean) {
  return x <= 0 ? 0.0 : -std::expm1(-x / mean);
}

double LedgerEntry::cost() const {
  return static_cast<double>(count) * sensitivity / scale;
}

void PrivacyLedger::charge(std::string mechanism, double sensitivity,
                           double scale, std::size_t count) {
  if (sensitivity < 0.0 || !(scale > 0.0)) {
    throw std::domain_error("ledger charge needs Δ ≥ 0 and b > 0");
  }
  entries_.push_back({std::move(mechanism), sensitivity, scale, count});
}

void PrivacyLedger::append(const PrivacyLedger& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

double PrivacyLedger::total() const {
  double sum = 0.0;
  for (const LedgerEntry& e : entries_) sum += e.cost();
  return sum;
}

bool PrivacyLedger::within_budget() const {
  return total() <= budget_.value() * (1.0 + 1e-12);
}

}  // namespace dpgh
