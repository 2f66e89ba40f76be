#pragma once

#include <cstdint>

namespace cechkit {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  /// Throws NonPrimeModulus unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const;

  Scalar from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Scalar a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace cechkit
