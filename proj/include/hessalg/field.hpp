#pragma once
// Prime field arithmetic. Everything in hessalg is exact; no floating point.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hessalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The prime field F_p with p < 2^31. Elements are plain residues in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
      throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b; // a, b < 2^31 so no overflow
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
  std::uint32_t p_;
};

/// A field element carrying its modulus. Convenient for small computations
/// and tests; matrices store raw residues instead.
class Scalar {
public:
  Scalar(std::int64_t v, PrimeField f) : f_(f), v_(f.reduce(v)) {}

  std::uint32_t value() const noexcept { return v_; }
  PrimeField field() const noexcept { return f_; }

  Scalar inverse() const { return {f_.inv(v_), f_}; }

  friend Scalar operator+(Scalar a, Scalar b) { return {a.check(b).add(a.v_, b.v_), a.f_}; }
  friend Scalar operator-(Scalar a, Scalar b) { return {a.check(b).sub(a.v_, b.v_), a.f_}; }
  friend Scalar operator*(Scalar a, Scalar b) { return {a.check(b).mul(a.v_, b.v_), a.f_}; }
  friend Scalar operator/(Scalar a, Scalar b) { return a * b.inverse(); }
  Scalar operator-() const { return {f_.neg(v_), f_}; }

  friend bool operator==(const Scalar &, const Scalar &) = default;

private:
  const PrimeField &check(const Scalar &o) const {
    if (!(f_ == o.f_)) throw Error("scalars from different fields");
    return f_;
  }

  PrimeField f_;
  std::uint32_t v_;
};

} // namespace hessalg
