#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rilab {

// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource budget exhausted (S-pair count, reduction degree, retry cap).
// Never a wrong answer: callers either raise the budget or report exit code 3.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Malformed input: parse errors, bad config, shape mismatches.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// Operation preconditions violated (ring mismatch, containment failure, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based seed expansion: every randomized step draws a fresh
// sub-seed derived from (top-level seed, counter), so runs replay exactly
// and sub-seeds can be logged.
class SeedStream {
  public:
    explicit SeedStream(uint64_t seed) : seed_(seed) {}

    uint64_t fork(uint64_t counter) const {
        uint64_t s = seed_ ^ (0x6a09e667f3bcc909ULL + counter * 0x1f83d9abfb41bd6bULL);
        return splitmix64(s);
    }

    uint64_t next() { return fork(counter_++); }

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

  private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

// Deterministic PRNG for coefficient choices (xorshift-based; stable across
// platforms, unlike std::uniform_int_distribution).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // value in [0, n)
    uint64_t below(uint64_t n) { return n ? next_u64() % n : 0; }

  private:
    uint64_t state_;
};

}  // namespace rilab
