#include "gamesem/canon.hpp"

#include <cmath>

namespace gs {

std::string ruleName(Rule r) {
  switch (r) {
    case Rule::AndAssoc: return "and-assoc";
    case Rule::AndTopR: return "and-top-right";
    case Rule::AndTopL: return "and-top-left";
    case Rule::Curry: return "curry";
    case Rule::ImpTopL: return "imp-top-left";
    case Rule::ImpAnd: return "imp-and";
    case Rule::ImpTopR: return "imp-top-right";
    case Rule::ForallAnd: return "forall-and";
    case Rule::ForallTop: return "forall-top";
    case Rule::ImpForall: return "imp-forall";
    case Rule::AndComm: return "and-comm";
    case Rule::ForallSwap: return "forall-swap";
  }
  return "?";
}

std::optional<Fm> applyRule(Rule r, const Fm& a) {
  auto k = a->kind;
  switch (r) {
    case Rule::AndAssoc:
      if (k == Formula::And && a->r->kind == Formula::And)
        return fAnd(fAnd(a->l, a->r->l), a->r->r);
      break;
    case Rule::AndTopR:
      if (k == Formula::And && a->r->kind == Formula::Top) return a->l;
      break;
    case Rule::AndTopL:
      if (k == Formula::And && a->l->kind == Formula::Top) return a->r;
      break;
    case Rule::Curry:
      if (k == Formula::Imp && a->l->kind == Formula::And)
        return fImp(a->l->l, fImp(a->l->r, a->r));
      break;
    case Rule::ImpTopL:
      if (k == Formula::Imp && a->l->kind == Formula::Top) return a->r;
      break;
    case Rule::ImpAnd:
      if (k == Formula::Imp && a->r->kind == Formula::And)
        return fAnd(fImp(a->l, a->r->l), fImp(a->l, a->r->r));
      break;
    case Rule::ImpTopR:
      if (k == Formula::Imp && a->r->kind == Formula::Top) return fTop();
      break;
    case Rule::ForallAnd:
      if (k == Formula::Forall && a->l->kind == Formula::And) {
        FoVar y = freshA(a->bound.name);
        return fAnd(fForall(a->bound, a->l->l),
                    fForall(y, substFo(a->l->r, a->bound, FoTerm::mkVar(y))));
      }
      break;
    case Rule::ForallTop:
      if (k == Formula::Forall && a->l->kind == Formula::Top) return fTop();
      break;
    case Rule::ImpForall:
      if (k == Formula::Imp && a->r->kind == Formula::Forall) {
        const Fm& all = a->r;
        if (freeVars(a->l).count(all->bound)) {
          FoVar y = freshA(all->bound.name);
          return fForall(y, fImp(a->l, substFo(all->l, all->bound, FoTerm::mkVar(y))));
        }
        return fForall(all->bound, fImp(a->l, all->l));
      }
      break;
    case Rule::AndComm:
      if (k == Formula::And) return fAnd(a->r, a->l);
      break;
    case Rule::ForallSwap:
      if (k == Formula::Forall && a->l->kind == Formula::Forall)
        return fForall(a->l->bound, fForall(a->bound, a->l->l));
      break;
  }
  return std::nullopt;
}

Fm subformula(const Fm& a, const Path& p) {
  Fm cur = a;
  for (int d : p) cur = d == 0 ? cur->l : cur->r;
  return cur;
}

static Fm replaceFrom(const Fm& a, const Path& p, size_t i, const Fm& r) {
  if (i == p.size()) return r;
  switch (a->kind) {
    case Formula::Imp:
      return p[i] == 0 ? fImp(replaceFrom(a->l, p, i + 1, r), a->r) : fImp(a->l, replaceFrom(a->r, p, i + 1, r));
    case Formula::And:
      return p[i] == 0 ? fAnd(replaceFrom(a->l, p, i + 1, r), a->r) : fAnd(a->l, replaceFrom(a->r, p, i + 1, r));
    case Formula::Forall:
      return fForall(a->bound, replaceFrom(a->l, p, i + 1, r));
    default:
      throw Error("invalid formula path");
  }
}

Fm replaceAt(const Fm& a, const Path& p, const Fm& r) { return replaceFrom(a, p, 0, r); }

static constexpr Rule kOriented[] = {Rule::AndAssoc, Rule::AndTopR, Rule::AndTopL, Rule::Curry,
                                     Rule::ImpTopL,  Rule::ImpAnd,  Rule::ImpTopR, Rule::ForallAnd,
                                     Rule::ForallTop, Rule::ImpForall};

// Leftmost-innermost redex.
static bool findRedex(const Fm& a, Path& path, Rule& rule, Fm& out) {
  if (a->kind == Formula::Imp || a->kind == Formula::And) {
    path.push_back(0);
    if (findRedex(a->l, path, rule, out)) return true;
    path.back() = 1;
    if (findRedex(a->r, path, rule, out)) return true;
    path.pop_back();
  } else if (a->kind == Formula::Forall) {
    path.push_back(0);
    if (findRedex(a->l, path, rule, out)) return true;
    path.pop_back();
  }
  for (Rule r : kOriented) {
    if (auto res = applyRule(r, a)) {
      rule = r;
      out = *res;
      return true;
    }
  }
  return false;
}

CanonResult canonicalize(const Fm& a) {
  CanonResult res{a, {}};
  for (;;) {
    Path p;
    Rule r;
    Fm contractum;
    if (!findRedex(res.formula, p, r, contractum)) break;
    Fm before = subformula(res.formula, p);
    Fm whole = replaceAt(res.formula, p, contractum);
    res.trace.push_back({r, p, before, contractum, res.formula, whole});
    res.formula = whole;
  }
  return res;
}

static bool isR(const Fm& a) { return isAtomic(a); }

static bool isA(const Fm& a) {
  if (isR(a)) return true;
  return a->kind == Formula::Imp && isArrowCanonical(a->l) && isA(a->r);
}

bool isArrowCanonical(const Fm& a) {
  if (a->kind == Formula::Forall) return isArrowCanonical(a->l);
  return isA(a);
}

static bool isB(const Fm& a) {
  if (a->kind == Formula::And) return isB(a->l) && isArrowCanonical(a->r);
  return isArrowCanonical(a);
}

bool isCanonical(const Fm& a) { return a->kind == Formula::Top || isB(a); }

std::vector<Fm> conjuncts(const Fm& c) {
  if (c->kind == Formula::Top) return {};
  if (c->kind != Formula::And) return {c};
  auto v = conjuncts(c->l);
  v.push_back(c->r);
  return v;
}

Fm bigAnd(const std::vector<Fm>& qs) {
  if (qs.empty()) return fTop();
  Fm acc = qs[0];
  for (size_t i = 1; i < qs.size(); ++i) acc = fAnd(acc, qs[i]);
  return acc;
}

static std::optional<mpz_class> power(const mpz_class& b, const mpz_class& e, size_t cap) {
  if (!e.fits_ulong_p()) return std::nullopt;
  unsigned long ex = e.get_ui();
  size_t bits = mpz_sizeinbase(b.get_mpz_t(), 2);
  if ((bits - 1) * static_cast<double>(ex) > static_cast<double>(cap)) return std::nullopt;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), ex);
  return r;
}

static bool tooBig(const mpz_class& v, size_t cap) { return mpz_sizeinbase(v.get_mpz_t(), 2) > cap; }

std::optional<Measure> measure(const Fm& a, size_t cap) {
  switch (a->kind) {
    case Formula::Top:
    case Formula::Bot:
    case Formula::Atom:
      return Measure{2, 2};
    case Formula::And: {
      auto l = measure(a->l, cap), r = measure(a->r, cap);
      if (!l || !r) return std::nullopt;
      Measure m{2 * (l->phi + 1) * r->phi, 2 * (l->psi + 1) * r->psi};
      if (tooBig(m.phi, cap) || tooBig(m.psi, cap)) return std::nullopt;
      return m;
    }
    case Formula::Imp: {
      auto l = measure(a->l, cap), r = measure(a->r, cap);
      if (!l || !r) return std::nullopt;
      auto phi = power(r->phi, l->phi, cap), psi = power(r->psi, l->psi, cap);
      if (!phi || !psi) return std::nullopt;
      return Measure{*phi, *psi};
    }
    case Formula::Forall: {
      auto b = measure(a->l, cap);
      if (!b) return std::nullopt;
      Measure m{b->phi * b->phi, 2 * b->psi};
      if (tooBig(m.phi, cap)) return std::nullopt;
      return m;
    }
  }
  return std::nullopt;
}

bool lexGreater(const Measure& a, const Measure& b) {
  if (a.phi != b.phi) return a.phi > b.phi;
  return a.psi > b.psi;
}

namespace {

constexpr size_t kExactBits = 1 << 14;
constexpr long double kEps = 1e-17L;

using LD = long double;

struct Approx {
  int h;
  LD lo, hi;
};

LD down(LD x) { return x > 0 ? x * (1 - kEps) - kEps : x * (1 + kEps) - kEps; }
LD up(LD x) { return x > 0 ? x * (1 + kEps) + kEps : x * (1 - kEps) + kEps; }
LD log2Down(LD x) { return x <= 0 ? -INFINITY : down(std::log2(x)); }
LD log2Up(LD x) { return x <= 0 ? -INFINITY : up(std::log2(x)); }

Approx toApprox(const BigNum& n) {
  if (!n.exact) return {n.h, n.lo, n.hi};
  size_t bits = mpz_sizeinbase(n.v.get_mpz_t(), 2);
  if (bits < 1000) {
    LD d = static_cast<LD>(n.v.get_d());
    return {0, down(d), up(d)};
  }
  long e;
  double d = mpz_get_d_2exp(&e, n.v.get_mpz_t());
  LD l = static_cast<LD>(e) + std::log2(static_cast<LD>(d));
  return {1, down(l), up(l)};
}

BigNum normalize(Approx a) {
  while (a.hi > 1e300L) a = {a.h + 1, log2Down(a.lo), log2Up(a.hi)};
  while (a.h > 0 && a.hi < 1000) a = {a.h - 1, down(std::exp2(a.lo)), up(std::exp2(a.hi))};
  BigNum r;
  r.exact = false;
  r.h = a.h;
  r.lo = a.lo;
  r.hi = a.hi;
  return r;
}

Approx lift(Approx a, int h) {
  while (a.h < h) a = {a.h + 1, log2Down(a.lo), log2Up(a.hi)};
  return a;
}

bool small(const BigNum& n) { return n.exact && mpz_sizeinbase(n.v.get_mpz_t(), 2) <= kExactBits; }

BigNum bigLog2(const BigNum& x) {
  if (x.exact) {
    size_t bits = mpz_sizeinbase(x.v.get_mpz_t(), 2);
    if (mpz_scan1(x.v.get_mpz_t(), 0) == bits - 1) return BigNum::of(mpz_class(static_cast<unsigned long>(bits - 1)));
  }
  Approx a = toApprox(x);
  if (a.h > 0) return normalize({a.h - 1, a.lo, a.hi});
  return normalize({0, log2Down(a.lo), log2Up(a.hi)});
}

BigNum bigExp2(const BigNum& y) {
  if (y.exact && y.v.fits_ulong_p() && y.v.get_ui() <= kExactBits) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, y.v.get_ui());
    return BigNum::of(r);
  }
  Approx a = toApprox(y);
  return normalize({a.h + 1, a.lo, a.hi});
}

// log2(2^x + 2^y)
LD log2Sum(LD x, LD y) {
  LD m = std::max(x, y), n = std::min(x, y);
  return m + std::log2(1 + std::exp2(n - m));
}

}  // namespace

BigNum BigNum::of(const mpz_class& x) {
  BigNum n;
  n.v = x;
  if (mpz_sizeinbase(x.get_mpz_t(), 2) > kExactBits) return normalize(toApprox(n));
  return n;
}

std::string BigNum::str() const {
  if (exact) return v.get_str();
  std::string s = "2^";
  for (int i = 1; i < h; ++i) s += "2^";
  return s + "[" + std::to_string(static_cast<double>(lo)) + "," + std::to_string(static_cast<double>(hi)) + "]";
}

Cmp compare(const BigNum& a, const BigNum& b) {
  if (a.exact && b.exact) {
    int c = cmp(a.v, b.v);
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  Approx x = toApprox(a), y = toApprox(b);
  int h = std::max(x.h, y.h);
  x = lift(x, h);
  y = lift(y, h);
  if (x.lo > y.hi) return Cmp::Greater;
  if (x.hi < y.lo) return Cmp::Less;
  return Cmp::Unknown;
}

BigNum bigAdd(const BigNum& a, const BigNum& b) {
  if (small(a) && small(b)) return BigNum::of(a.v + b.v);
  Approx x = toApprox(a), y = toApprox(b);
  int h = std::max(x.h, y.h);
  x = lift(x, h);
  y = lift(y, h);
  if (h == 0) return normalize({0, down(x.lo + y.lo), up(x.hi + y.hi)});
  if (h == 1) return normalize({1, down(log2Sum(x.lo, y.lo)), up(log2Sum(x.hi, y.hi))});
  LD lo = std::max(x.lo, y.lo), hi = std::max(x.hi, y.hi);
  // the sum is at most twice the maximum; one level further up that is negligible once lo ≥ 64
  return normalize({h, lo, lo >= 64 ? up(hi) : hi + 1});
}

BigNum bigMul(const BigNum& a, const BigNum& b) {
  if (small(a) && small(b)) return BigNum::of(a.v * b.v);
  return bigExp2(bigAdd(bigLog2(a), bigLog2(b)));
}

BigNum bigPow(const BigNum& base, const BigNum& e) {
  if (small(base) && e.exact && e.v.fits_ulong_p()) {
    double bits = static_cast<double>(mpz_sizeinbase(base.v.get_mpz_t(), 2)) * static_cast<double>(e.v.get_ui());
    if (bits <= kExactBits) {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), base.v.get_mpz_t(), e.v.get_ui());
      return BigNum::of(r);
    }
  }
  return bigExp2(bigMul(e, bigLog2(base)));
}

BigMeasure measureBig(const Fm& a) {
  static const BigNum two = BigNum::of(2), one = BigNum::of(1);
  switch (a->kind) {
    case Formula::And: {
      auto l = measureBig(a->l), r = measureBig(a->r);
      return {bigMul(bigMul(two, bigAdd(l.phi, one)), r.phi), bigMul(bigMul(two, bigAdd(l.psi, one)), r.psi)};
    }
    case Formula::Imp: {
      auto l = measureBig(a->l), r = measureBig(a->r);
      return {bigPow(r.phi, l.phi), bigPow(r.psi, l.psi)};
    }
    case Formula::Forall: {
      auto b = measureBig(a->l);
      return {bigMul(b.phi, b.phi), bigMul(two, b.psi)};
    }
    default:
      return {two, two};
  }
}

static std::optional<bool> lexDescent(const BigMeasure& b, const BigMeasure& a) {
  Cmp p = compare(b.phi, a.phi);
  if (p == Cmp::Greater) return true;
  if (p == Cmp::Less) return false;
  if (p == Cmp::Unknown) return std::nullopt;
  Cmp q = compare(b.psi, a.psi);
  if (q == Cmp::Unknown) return std::nullopt;
  return q == Cmp::Greater;
}

namespace {

bool atLeast(const BigNum& x, long v) {
  Cmp c = compare(x, BigNum::of(v));
  return c == Cmp::Greater || c == Cmp::Equal;
}

// Sufficient conditions for descent at the redex once the factors shared by both sides
// are cancelled: each inequality below holds as soon as the listed components measure
// at least 2, which is checked on the actual values.
std::optional<bool> ruleBound(const RewriteStep& s) {
  const Fm& r = s.before;
  auto ok = [](std::initializer_list<Fm> fs) {
    for (auto& f : fs) {
      auto m = measureBig(f);
      if (!atLeast(m.phi, 2) || !atLeast(m.psi, 2)) return false;
    }
    return true;
  };
  switch (s.rule) {
    case Rule::AndAssoc:  // 4(a+1)(b+1)c > (4(a+1)b+2)c
      return ok({r->l, r->r->l, r->r->r});
    case Rule::AndTopR:  // 4(a+1) > a
      return ok({r->l});
    case Rule::AndTopL:  // 6a > a
      return ok({r->r});
    case Rule::Curry:  // c^(2(a+1)b) > c^(ab)
      return ok({r->l->l, r->l->r, r->r});
    case Rule::ImpTopL:  // a² > a
      return ok({r->r});
    case Rule::ImpAnd:  // (2(b+1)c)^a ≥ 4b^a·c^a > 2(b^a+1)c^a
      return ok({r->l, r->r->l, r->r->r});
    case Rule::ImpTopR:  // 2^a > 2
      return ok({r->l});
    case Rule::ForallAnd:  // 4(a+1)²b² ≥ 4a²b² > 2(a²+1)b²
      return ok({r->l->l, r->l->r});
    case Rule::ForallTop:  // 4 > 2
      return true;
    case Rule::ImpForall:  // φ: (b²)^a = (b^a)²;  ψ: (2b)^a = 2^(a-1)·2b^a > 2b^a
      return ok({r->l, r->r->l});
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string descentMethodName(DescentMethod m) {
  switch (m) {
    case DescentMethod::ExactWhole: return "exact";
    case DescentMethod::IntervalWhole: return "interval";
    case DescentMethod::Redex: return "redex";
    case DescentMethod::RuleBound: return "rule-bound";
    case DescentMethod::Undecided: return "undecided";
  }
  return "?";
}

DescentCheck checkDescent(const RewriteStep& s) {
  DescentCheck out;
  auto wb = measureBig(s.wholeBefore), wa = measureBig(s.wholeAfter);
  if (auto d = lexDescent(wb, wa)) {
    out.decreased = *d;
    bool exact = wb.phi.exact && wa.phi.exact && wb.psi.exact && wa.psi.exact;
    out.method = exact ? DescentMethod::ExactWhole : DescentMethod::IntervalWhole;
    return out;
  }
  auto rb = measureBig(s.before), ra = measureBig(s.after);
  if (auto d = lexDescent(rb, ra)) {
    out.decreased = *d;
    out.method = DescentMethod::Redex;
    return out;
  }
  if (auto d = ruleBound(s)) {
    out.decreased = *d;
    out.method = DescentMethod::RuleBound;
    return out;
  }
  return out;
}

}  // namespace gs
