#include "polydec/poly.hpp"

#include <algorithm>

namespace polydec {

MultiPoly::MultiPoly(FieldCtx ctx, int nvars)
    : ctx_(std::move(ctx)), nvars_(nvars) {
  if (nvars < 1) throw PreconditionError("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(const FieldCtx& ctx, int nvars,
                              const FieldElem& c) {
  MultiPoly p(ctx, nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldCtx& ctx, int nvars, int var) {
  if (var < 0 || var >= nvars) throw IndexOutOfRange("variable index");
  MultiPoly p(ctx, nvars);
  p.terms_.emplace(Monomial(nvars).times_var(var), ctx.one());
  return p;
}

MultiPoly MultiPoly::from_monomial(const FieldCtx& ctx, Monomial m,
                                   const FieldElem& c) {
  MultiPoly p(ctx, m.nvars());
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

MultiPoly MultiPoly::from_terms(
    const FieldCtx& ctx, int nvars,
    const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms) {
  PolyAccum acc(ctx, nvars);
  for (const auto& [exps, c] : terms) {
    if (static_cast<int>(exps.size()) != nvars)
      throw ArityMismatch("exponent vector length != nvars");
    acc.add(Monomial(exps), ctx.from_int(c));
  }
  return acc.take();
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // leading term has the max degree
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  // Descending graded-lex: only the last term can break homogeneity.
  return std::prev(terms_.end())->first.degree() == d;
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ctx_.zero() : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return terms_.begin()->first;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (ctx_ != o.ctx_) throw CtxMismatch("polynomials over different fields");
  if (nvars_ != o.nvars_) throw ArityMismatch("polynomials over different arities");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  PolyAccum acc(ctx_, nvars_);
  acc.add_poly(*this);
  acc.add_poly(o);
  return acc.take();
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  PolyAccum acc(ctx_, nvars_);
  acc.add_poly(*this);
  for (const auto& [m, c] : o.terms_) acc.add(m, -c);
  return acc.take();
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  PolyAccum acc(ctx_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc.add(ma.times(mb), ca * cb);
  return acc.take();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ctx_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
  if (c.is_zero()) return MultiPoly(ctx_, nvars_);
  MultiPoly r(ctx_, nvars_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

MultiPoly MultiPoly::mul_by_monomial(const Monomial& m) const {
  if (m.nvars() != nvars_) throw ArityMismatch("monomial arity mismatch");
  MultiPoly r(ctx_, nvars_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm.times(m), c);
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw PreconditionError("negative power");
  MultiPoly r = constant(ctx_, nvars_, ctx_.one());
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return ctx_ == o.ctx_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw IndexOutOfRange("derivative variable out of range");
  PolyAccum acc(ctx_, nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(var);
    if (e == 0) continue;
    acc.add(m.divide_var(var), c * ctx_.from_int(e));
  }
  return acc.take();
}

FieldElem MultiPoly::evaluate(const std::vector<FieldElem>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw ArityMismatch("evaluation point has wrong arity");
  FieldElem total = ctx_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exp(i); ++e) t *= point[i];
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute_one(int var) const {
  if (var < 0 || var >= nvars_) throw IndexOutOfRange("variable index");
  if (nvars_ < 2)
    throw PreconditionError("cannot drop the last remaining variable");
  PolyAccum acc(ctx_, nvars_ - 1);
  for (const auto& [m, c] : terms_) acc.add(m.drop_var(var), c);
  return acc.take();
}

MultiPoly MultiPoly::divide_by_var(int var, int k) const {
  MultiPoly r(ctx_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.divide_var(var, k), c);
  return r;
}

std::string MultiPoly::to_string(int first_index) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (negative) cs = cs.substr(1);
    if (m.is_constant()) {
      s += cs;
    } else if (cs == "1") {
      s += m.to_string(first_index);
    } else {
      s += cs + "*" + m.to_string(first_index);
    }
  }
  return s;
}

void PolyAccum::add(const Monomial& m, const FieldElem& c) {
  if (m.nvars() != nvars_) throw ArityMismatch("monomial arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PolyAccum::add_poly(const MultiPoly& p) {
  for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolyAccum::add_scaled(const MultiPoly& p, const FieldElem& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : p.terms()) add(m, v * c);
}

MultiPoly PolyAccum::take() {
  return MultiPoly(ctx_, nvars_, std::move(terms_));
}

PolySystem::PolySystem(FieldCtx ctx, int nvars, std::vector<MultiPoly> polys)
    : ctx_(std::move(ctx)), nvars_(nvars) {
  for (auto& p : polys) push_back(std::move(p));
}

void PolySystem::push_back(MultiPoly p) {
  if (p.ctx() != ctx_) throw CtxMismatch("system/polynomial field mismatch");
  if (p.nvars() != nvars_) throw ArityMismatch("system/polynomial arity mismatch");
  polys_.push_back(std::move(p));
}

int PolySystem::degree() const {
  int d = -1;
  for (const auto& p : polys_) d = std::max(d, p.degree());
  return d;
}

bool PolySystem::is_homogeneous_of_degree(int d) const {
  for (const auto& p : polys_)
    if (p.is_zero() || !p.is_homogeneous() || p.degree() != d) return false;
  return !polys_.empty();
}

bool PolySystem::operator==(const PolySystem& o) const {
  return ctx_ == o.ctx_ && nvars_ == o.nvars_ && polys_ == o.polys_;
}

std::string PolySystem::to_string(int first_index) const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += "\n";
    s += polys_[i].to_string(first_index);
  }
  return s;
}

namespace {

// Memoized power products of the inner system: cache[m] = prod_k h_k^{m_k}.
// Recursing through divide_var fills in all sub-products, so for a quadratic
// outer system this is exactly the pairwise-product table h_k*h_l.
const MultiPoly& power_product(
    const Monomial& m, const PolySystem& h,
    std::map<Monomial, MultiPoly, GrlexDescending>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  MultiPoly value(h.ctx(), h.nvars());
  if (m.is_constant()) {
    value = MultiPoly::constant(h.ctx(), h.nvars(), h.ctx().one());
  } else {
    int var = 0;
    while (m.exp(var) == 0) ++var;
    value = power_product(m.divide_var(var), h, cache) * h[var];
  }
  return cache.emplace(m, std::move(value)).first->second;
}

}  // namespace

PolySystem compose(const PolySystem& g, const PolySystem& h) {
  if (g.ctx() != h.ctx()) throw CtxMismatch("compose over different fields");
  if (g.nvars() != h.size())
    throw ArityMismatch("outer arity " + std::to_string(g.nvars()) +
                        " != inner component count " + std::to_string(h.size()));
  std::map<Monomial, MultiPoly, GrlexDescending> cache;
  PolySystem out(g.ctx(), h.nvars());
  for (int i = 0; i < g.size(); ++i) {
    PolyAccum acc(g.ctx(), h.nvars());
    for (const auto& [m, c] : g[i].terms())
      acc.add_scaled(power_product(m, h, cache), c);
    out.push_back(acc.take());
  }
  return out;
}

PolySystem homogenize(const PolySystem& f, int d) {
  if (d < 0) throw DegreeTooSmall("homogenization degree must be >= 0");
  if (d < f.degree())
    throw DegreeTooSmall("homogenization degree " + std::to_string(d) +
                         " below system degree " + std::to_string(f.degree()));
  const int n = f.nvars();
  PolySystem out(f.ctx(), n + 1);
  out.push_back(MultiPoly::from_monomial(
      f.ctx(), Monomial(n + 1).times_var(0, d), f.ctx().one()));
  for (const auto& p : f.polys()) {
    PolyAccum acc(f.ctx(), n + 1);
    for (const auto& [m, c] : p.terms())
      acc.add(m.insert_var(0, d - m.degree()), c);
    out.push_back(acc.take());
  }
  return out;
}

PolySystem dehomogenize(const PolySystem& F) {
  if (F.nvars() < 2)
    throw PreconditionError("dehomogenize needs the homogenizing variable");
  PolySystem out(F.ctx(), F.nvars() - 1);
  for (const auto& p : F.polys()) out.push_back(p.substitute_one(0));
  return out;
}

std::vector<FieldElem> evaluate(const PolySystem& f,
                                const std::vector<FieldElem>& point) {
  std::vector<FieldElem> out;
  out.reserve(f.size());
  for (const auto& p : f.polys()) out.push_back(p.evaluate(point));
  return out;
}

}  // namespace polydec
