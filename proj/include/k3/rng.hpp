#pragma once

#include <optional>
#include <random>

#include "k3/doublesextic.hpp"
#include "k3/quartics.hpp"

namespace k3 {

// deterministic source for generic-point draws; every report quotes the seed
class Draw {
 public:
  explicit Draw(uint64_t seed) : rng_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  Rat rat(int range = 9) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    Rat r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  Rat nonzero(int range = 9) {
    while (true) {
      Rat r = rat(range);
      if (r != 0) return r;
    }
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

  QuarticCoeffsP tupleP() {
    QuarticCoeffsP c;
    c.alpha = nonzero();
    c.beta = nonzero();
    c.gamma = nonzero();
    c.delta = nonzero();
    c.epsilon = nonzero();
    c.zeta = nonzero();
    c.eta = nonzero();
    c.iota = nonzero();
    c.kappa = nonzero();
    c.lambda = nonzero();
    return c;
  }

  QuarticCoeffsPPrime tuplePPrime() {
    return {nonzero(), nonzero(), nonzero(), nonzero(), nonzero(), nonzero(), nonzero()};
  }

  VinbergCoeffs tupleVinberg() {
    return {nonzero(), nonzero(), nonzero(), nonzero(), nonzero(), nonzero(), nonzero(),
            nonzero()};
  }

  // small integral branch configuration with distinct mu, nu and the gauge
  // constraint c0 + e2 = (1 + d2/2)(mu + nu)
  SexticConfig sextic_config() {
    while (true) {
      SexticConfig c;
      c.mu = rat(6);
      c.nu = rat(6);
      c.d2 = rat(4);
      c.e2 = rat(6);
      c.d0 = rat(6);
      c.e1 = rat(6);
      c.e0 = rat(6);
      if (c.mu == c.nu || c.d2 == -1) continue;
      c.c0 = (1 + c.d2 / 2) * (c.mu + c.nu) - c.e2;
      if (c.valid()) return c;
    }
  }

 private:
  std::mt19937_64 rng_;
  uint64_t seed_;
};

// redraws until the classifier reproduces the expected multiset; the accepted
// tuple is the certified-generic witness for that table row
template <class TupleFn, class ModelFn>
std::optional<typename std::invoke_result<TupleFn>::type> draw_generic(
    TupleFn&& draw_tuple, ModelFn&& to_model, const std::string& expected, int attempts = 60) {
  auto want = parse_multiset(expected);
  for (int i = 0; i < attempts; ++i) {
    auto tuple = draw_tuple();
    try {
      FiberConfig cfg = classify_fibers(to_model(tuple));
      if (cfg.type_multiset() == want) return tuple;
    } catch (const DegenerateModel&) {
    }
  }
  return std::nullopt;
}

}  // namespace k3
