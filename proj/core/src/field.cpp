#include "polydec/field.hpp"

#include <cctype>
#include <charconv>

namespace polydec {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the listed bases cover all 64-bit integers.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero("inverse of zero in GF(p)");
  // Extended Euclid on signed 128-bit to dodge overflow near 2^61.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldCtx FieldCtx::gf(std::uint64_t p) {
  if (p < 3) throw PreconditionError("GF(p) requires an odd prime p >= 3");
  if (p > kMaxModulus)
    throw PreconditionError("modulus exceeds 2^61-1");
  if (!is_prime_u64(p))
    throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  return FieldCtx(FieldKind::prime_field, p, 0);
}

FieldCtx FieldCtx::rationals(std::int64_t sample_bound) {
  if (sample_bound < 1)
    throw PreconditionError("rational sample bound must be >= 1");
  return FieldCtx(FieldKind::rationals, 0, sample_bound);
}

FieldCtx FieldCtx::from_spec(std::string_view spec) {
  if (spec == "q") return rationals();
  if (spec.substr(0, 3) == "gf:") {
    std::uint64_t p = 0;
    auto body = spec.substr(3);
    auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw ParseError("bad field spec: " + std::string(spec));
    return gf(p);
  }
  throw ParseError("bad field spec: " + std::string(spec) +
                   " (expected gf:<p> or q)");
}

std::uint64_t FieldCtx::modulus() const {
  if (kind_ != FieldKind::prime_field)
    throw PreconditionError("modulus() on the rational field");
  return p_;
}

std::string FieldCtx::spec_string() const {
  return is_prime_field() ? "gf:" + std::to_string(p_) : "q";
}

FieldElem FieldCtx::zero() const { return from_int(0); }

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(std::int64_t v) const {
  if (is_prime_field()) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return FieldElem(FieldElem::Fp{static_cast<std::uint64_t>(r), p_});
  }
  return FieldElem(mpq_class(static_cast<long>(v)));
}

FieldElem FieldCtx::from_string(std::string_view text) const {
  if (text.empty()) throw ParseError("empty field element");
  if (is_prime_field()) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ParseError("bad GF(p) residue: " + std::string(text));
    if (v >= p_)
      throw ParseError("residue " + std::string(text) + " out of range for " +
                       spec_string());
    return FieldElem(FieldElem::Fp{v, p_});
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw ParseError("bad rational: " + std::string(text));
  if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  q.canonicalize();
  return FieldElem(std::move(q));
}

FieldElem FieldCtx::sample_uniform(SeededRng& rng) const {
  if (is_prime_field())
    return FieldElem(FieldElem::Fp{rng.below(p_), p_});
  return FieldElem(
      mpq_class(static_cast<long>(rng.int_between(-sample_bound_, sample_bound_))));
}

bool FieldElem::is_zero() const {
  if (auto* f = as_fp()) return f->v == 0;
  return sgn(*as_q()) == 0;
}

bool FieldElem::is_one() const {
  if (auto* f = as_fp()) return f->v == 1;
  return *as_q() == 1;
}

FieldKind FieldElem::kind() const {
  return as_fp() ? FieldKind::prime_field : FieldKind::rationals;
}

namespace {
[[noreturn]] void ctx_mismatch() {
  throw CtxMismatch("field elements belong to different contexts");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (auto* a = as_fp()) {
    auto* b = o.as_fp();
    if (!b || a->p != b->p) ctx_mismatch();
    std::uint64_t s = a->v + b->v;
    if (s >= a->p) s -= a->p;
    return FieldElem(Fp{s, a->p});
  }
  auto* b = o.as_q();
  if (!b) ctx_mismatch();
  return FieldElem(mpq_class(*as_q() + *b));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (auto* a = as_fp()) {
    auto* b = o.as_fp();
    if (!b || a->p != b->p) ctx_mismatch();
    std::uint64_t s = a->v + a->p - b->v;
    if (s >= a->p) s -= a->p;
    return FieldElem(Fp{s, a->p});
  }
  auto* b = o.as_q();
  if (!b) ctx_mismatch();
  return FieldElem(mpq_class(*as_q() - *b));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (auto* a = as_fp()) {
    auto* b = o.as_fp();
    if (!b || a->p != b->p) ctx_mismatch();
    return FieldElem(Fp{mulmod(a->v, b->v, a->p), a->p});
  }
  auto* b = o.as_q();
  if (!b) ctx_mismatch();
  return FieldElem(mpq_class(*as_q() * *b));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  return *this * o.inv();
}

FieldElem FieldElem::operator-() const {
  if (auto* a = as_fp()) {
    return FieldElem(Fp{a->v == 0 ? 0 : a->p - a->v, a->p});
  }
  return FieldElem(mpq_class(-*as_q()));
}

FieldElem FieldElem::inv() const {
  if (auto* a = as_fp())
    return FieldElem(Fp{invmod(a->v, a->p), a->p});
  if (sgn(*as_q()) == 0) throw DivisionByZero("inverse of rational zero");
  return FieldElem(mpq_class(1 / *as_q()));
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (auto* a = as_fp()) {
    auto* b = o.as_fp();
    return b && *a == *b;
  }
  auto* b = o.as_q();
  return b && *as_q() == *b;
}

std::string FieldElem::to_string() const {
  if (auto* a = as_fp()) return std::to_string(a->v);
  return as_q()->get_str();
}

std::uint64_t FieldElem::residue() const {
  auto* a = as_fp();
  if (!a) throw PreconditionError("residue() on a rational element");
  return a->v;
}

const mpq_class& FieldElem::ratio() const {
  auto* q = as_q();
  if (!q) throw PreconditionError("ratio() on a GF(p) element");
  return *q;
}

}  // namespace polydec
