#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace segre {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in prime field") {}
};

/// Element of F_p, always kept in canonical form [0, p).
struct Fp {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

/// Arithmetic modulo a prime p < 2^32, so that products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Fp from_int(std::int64_t v) const;
  Fp from_uint(std::uint64_t v) const { return Fp{static_cast<std::uint32_t>(v % p_)}; }

  Fp add(Fp a, Fp b) const {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Fp{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Fp sub(Fp a, Fp b) const {
    return Fp{static_cast<std::uint32_t>(a.value >= b.value ? a.value - b.value
                                                            : a.value + p_ - b.value)};
  }
  Fp neg(Fp a) const { return a.is_zero() ? a : Fp{static_cast<std::uint32_t>(p_ - a.value)}; }
  Fp mul(Fp a, Fp b) const {
    return Fp{static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
  }
  Fp pow(Fp a, std::uint64_t e) const;
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  /// Signed representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Fp a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A prime with exactly `bits` bits (20 <= bits <= 62), a pure function of the seed.
std::uint64_t random_prime(int bits, std::uint64_t seed);

/// Mixes a seed with a stream label; used to derive independent child seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Prime modulus plus the master seed from which all randomness is derived.
struct FieldConfig {
  std::uint64_t p;
  std::uint64_t seed;

  /// Default: a 31-bit prime drawn from the seed.
  static FieldConfig from_seed(std::uint64_t seed);
  /// Validates p (prime, 2^20 < p < 2^32).
  static FieldConfig with_prime(std::uint64_t p, std::uint64_t seed);

  PrimeField field() const { return PrimeField(p); }
};

/// Seeded random source; the only source of randomness in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  Fp element(const PrimeField& f) { return f.from_uint(next()); }
  Fp nonzero(const PrimeField& f);
  /// A fresh generator whose stream does not overlap this one.
  Rng split() { return Rng(derive_seed(seed_, next())); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace segre
