#include "segre/gf.hpp"

#include <string>

namespace segre {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("field modulus must be below 2^32: " + std::to_string(p));
  }
  if (!is_prime(p)) throw std::invalid_argument("field modulus is not prime: " + std::to_string(p));
}

Fp PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  return Fp{static_cast<std::uint32_t>(powmod(a.value, e, p_))};
}

Fp PrimeField::inv(Fp a) const {
  if (a.is_zero()) throw DivisionByZero();
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = a.value;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

std::int64_t PrimeField::to_signed(Fp a) const {
  auto v = static_cast<std::int64_t>(a.value);
  return v > static_cast<std::int64_t>(p_ / 2) ? v - static_cast<std::int64_t>(p_) : v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(int bits, std::uint64_t seed) {
  if (bits < 2 || bits > 62) throw std::invalid_argument("random_prime: bits out of range");
  std::mt19937_64 gen(seed);
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  for (;;) {
    std::uint64_t candidate = top | (gen() & (top - 1)) | 1;
    if (bits == 2) candidate = 2 + (gen() & 1);
    if (is_prime(candidate)) return candidate;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

FieldConfig FieldConfig::from_seed(std::uint64_t seed) {
  return FieldConfig{random_prime(31, derive_seed(seed, 0x5eed)), seed};
}

FieldConfig FieldConfig::with_prime(std::uint64_t p, std::uint64_t seed) {
  if (p <= (std::uint64_t{1} << 20)) {
    throw std::invalid_argument("prime must exceed 2^20 for randomized genericity: " + std::to_string(p));
  }
  PrimeField check(p);  // throws unless prime and < 2^32
  return FieldConfig{p, seed};
}

Fp Rng::nonzero(const PrimeField& f) {
  for (;;) {
    Fp a = element(f);
    if (!a.is_zero()) return a;
  }
}

}  // namespace segre
