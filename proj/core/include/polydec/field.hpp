#ifndef POLYDEC_FIELD_HPP
#define POLYDEC_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "polydec/errors.hpp"
#include "polydec/rng.hpp"

namespace polydec {

enum class FieldKind { prime_field, rationals };

class FieldElem;

/// Exact coefficient domain: GF(p) for an odd prime p, or arbitrary-precision
/// rationals. Characteristic 2 is rejected outright: formal differentiation of
/// squares vanishes there and the whole derivative-span machinery degenerates.
/// Moduli are capped below 2^61 so products fit a widening 128-bit multiply.
///
/// Contexts are immutable values; copying is cheap and thread-safe.
class FieldCtx {
 public:
  static FieldCtx gf(std::uint64_t p);
  static FieldCtx rationals(std::int64_t sample_bound = 100);
  /// Parses "gf:<p>" or "q".
  static FieldCtx from_spec(std::string_view spec);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::prime_field; }
  std::uint64_t modulus() const;
  /// Coefficient magnitude used when sampling rational instances.
  std::int64_t sample_bound() const noexcept { return sample_bound_; }
  std::string spec_string() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  /// Canonical text form: decimal residue for GF(p), "num/den" for rationals.
  /// Rejects non-canonical GF residues (sign, value >= p) with ParseError.
  FieldElem from_string(std::string_view text) const;
  /// Uniform over GF(p); for rationals, a uniform integer in [-B, B].
  FieldElem sample_uniform(SeededRng& rng) const;

  bool operator==(const FieldCtx& o) const noexcept {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldCtx& o) const noexcept { return !(*this == o); }

 private:
  FieldCtx(FieldKind k, std::uint64_t p, std::int64_t bound)
      : kind_(k), p_(p), sample_bound_(bound) {}

  FieldKind kind_;
  std::uint64_t p_;  // 0 for rationals
  std::int64_t sample_bound_;
};

/// One exact field element in canonical form: a residue in [0, p) tagged with
/// its modulus, or a reduced fraction with positive denominator. Arithmetic
/// between elements of different contexts throws CtxMismatch.
class FieldElem {
 public:
  FieldElem() = delete;

  bool is_zero() const;
  bool is_one() const;
  FieldKind kind() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Residue value; prime-field elements only.
  std::uint64_t residue() const;
  /// Reduced fraction; rational elements only.
  const mpq_class& ratio() const;

 private:
  friend class FieldCtx;

  struct Fp {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Fp&) const = default;
  };

  explicit FieldElem(Fp f) : rep_(f) {}
  explicit FieldElem(mpq_class q) : rep_(std::move(q)) {}

  const Fp* as_fp() const { return std::get_if<Fp>(&rep_); }
  const mpq_class* as_q() const { return std::get_if<mpq_class>(&rep_); }

  std::variant<Fp, mpq_class> rep_;
};

}  // namespace polydec

#endif
