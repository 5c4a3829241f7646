#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono {

using Int = mpz_class;
using Rat = mpq_class;

// Domain error carrying an optional machine-readable witness (a factor, an
// element outside a module, ...) serialized as text.
class Error : public std::runtime_error {
  public:
    explicit Error(std::string what, std::string witness = {})
        : std::runtime_error(std::move(what)), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

  private:
    std::string witness_;
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_str(const std::string& s)
{
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

bool is_prime(const Int& p);

// Strips every factor of the primes in S from x (the "S-free part").
// x = 0 stays 0; the sign is kept.
Int s_free_part(const Int& x, const std::vector<Int>& S);
Rat s_free_part(const Rat& x, const std::vector<Int>& S);

// Deterministic PRNG for test corpora and randomized property checks.
// (xoshiro-style; the standard distributions are not portable.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);
    // uniform in [lo, hi] inclusive
    long range(long lo, long hi);

  private:
    std::uint64_t s_[4];
};

}  // namespace mono
