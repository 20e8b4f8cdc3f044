#include "recip/local_field.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "recip/error.hpp"

namespace recip {

namespace {

long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

std::vector<mpz_class> zeros(size_t n) { return std::vector<mpz_class>(n, 0); }

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const size_t n = a.size();
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

FElem::FElem(const LocalField* F, std::vector<mpz_class> flat, long prec) : F_(F), a_(std::move(flat)), prec_(prec) {
  if (static_cast<long>(a_.size()) != static_cast<long>(F_->e()) * F_->d())
    fail(ErrorCode::BadInput, "element has wrong length");
  normalize();
}

void FElem::normalize() {
  prec_ = std::clamp(prec_, 0L, F_->M());
  F_->base().reduce(a_);
  F_->truncate_flat(a_, prec_);
}

O0Elem FElem::coeff(int i) const {
  const int d = F_->d();
  return O0Elem(&F_->base(), std::vector<mpz_class>(a_.begin() + i * d, a_.begin() + (i + 1) * d));
}

bool FElem::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

FElem FElem::operator+(const FElem& o) const {
  std::vector<mpz_class> r = a_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.a_[i];
  return FElem(F_, std::move(r), std::min(prec_, o.prec_));
}

FElem FElem::operator-() const {
  std::vector<mpz_class> r = a_;
  for (auto& x : r) x = -x;
  return FElem(F_, std::move(r), prec_);
}

FElem FElem::operator-(const FElem& o) const {
  std::vector<mpz_class> r = a_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.a_[i];
  return FElem(F_, std::move(r), std::min(prec_, o.prec_));
}

FElem FElem::operator*(const FElem& o) const {
  long prec = F_->M();
  if (prec_ < prec || o.prec_ < prec)
    prec = std::min({prec, prec_ + valuation_lower(o), o.prec_ + valuation_lower(*this)});
  std::vector<mpz_class> r;
  F_->mul_flat(a_, o.a_, r);
  return FElem(F_, std::move(r), prec);
}

bool FElem::operator==(const FElem& o) const {
  const long p = std::min(prec_, o.prec_);
  return truncated(p).a_ == o.truncated(p).a_;
}

FElem FElem::truncated(long prec) const { return FElem(F_, a_, std::min(prec, prec_)); }

FElem FElem::exact() const { return FElem(F_, a_, F_->M()); }

LocalField::LocalField(long p, int N, std::vector<long> gbar, const std::vector<std::vector<mpz_class>>& f,
                       std::string name)
    : base_(p, N, std::move(gbar)),
      name_(std::move(name)),
      e_(static_cast<int>(f.size()) - 1),
      M_(static_cast<long>(e_) * N),
      p_over_pi_(this, zeros(std::max(e_, 1) * base_.degree()), 0),
      eps_(this, zeros(std::max(e_, 1) * base_.degree()), 0) {
  const int d = base_.degree();
  if (e_ < 1) fail(ErrorCode::NotEisenstein, "Eisenstein polynomial must have degree >= 1");
  for (const auto& c : f)
    if (static_cast<int>(c.size()) > d) fail(ErrorCode::BadInput, "Eisenstein coefficient has too many entries");
  f_exact_.assign(f.begin(), f.end());
  for (auto& c : f_exact_) c.resize(d, 0);
  const auto& top = f_exact_.back();
  if (top[0] != 1 || std::any_of(top.begin() + 1, top.end(), [](const mpz_class& x) { return x != 0; }))
    fail(ErrorCode::NotEisenstein, "Eisenstein polynomial must be monic");
  const mpz_class pp = p;
  for (int i = 0; i < e_; ++i)
    for (const auto& x : f_exact_[i])
      if (!mpz_divisible_p(x.get_mpz_t(), pp.get_mpz_t()))
        fail(ErrorCode::NotEisenstein, "lower coefficient not divisible by p");
  std::vector<mpz_class> f0p(d);
  for (int j = 0; j < d; ++j) f0p[j] = f_exact_[0][j] / pp;
  const O0Elem f0_over_p = base_.from_coeffs(f0p);
  if (*base_.val_p(f0_over_p.coeffs()) != 0 || f0_over_p.is_zero())
    fail(ErrorCode::NotEisenstein, "constant term divisible by p^2");
  for (int i = 0; i < e_; ++i) f_.push_back(base_.from_coeffs(f_exact_[i]).coeffs());

  // Teichmuller table.
  const FiniteField& k = base_.residue_field();
  const O0Elem omega = base_.omega();
  O0Elem w = base_.one();
  for (long i = 0; i < k.order() - 1; ++i) {
    teich_.push_back(w);
    w = w * omega;
  }

  // pi^0 .. pi^{2e} directly.
  for (int s = 0; s <= 2 * e_; ++s) {
    if (s == 0) {
      pi_pow_.push_back(one());
    } else if (s < e_) {
      std::vector<mpz_class> a = zeros(e_ * d);
      a[s * d] = 1;
      pi_pow_.push_back(FElem(this, a, M_));
    } else if (s == e_) {
      std::vector<mpz_class> a = zeros(e_ * d);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < d; ++j) a[i * d + j] = -f_exact_[i][j];
      pi_pow_.push_back(FElem(this, a, M_));
    } else {
      pi_pow_.push_back(pi_pow_[s - 1] * pi_pow_[1]);
    }
  }

  // p / pi = -(f_0/p)^{-1} (pi^{e-1} + sum_{i>=1} f_i pi^{i-1}).
  const O0Elem inv_f0p = invert(f0_over_p);
  std::vector<mpz_class> t = zeros(e_ * d);
  t[(e_ - 1) * d] = 1;
  for (int i = 1; i < e_; ++i)
    for (int j = 0; j < d; ++j) t[(i - 1) * d + j] += f_exact_[i][j];
  FElem sum(this, t, M_);
  p_over_pi_ = -(from_o0(inv_f0p) * sum);

  // pi^e / p = -sum (f_i/p) pi^i, and eps is its inverse.
  std::vector<mpz_class> u = zeros(e_ * d);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < d; ++j) u[i * d + j] = -(f_exact_[i][j] / pp);
  eps_ = inverse(FElem(this, u, M_));
  eps_bar_ = k.neg(k.inv(base_.residue(f0_over_p)));

  compute_mu();
}

void LocalField::mul_flat(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                          std::vector<mpz_class>& out) const {
  const int d = base_.degree();
  const int e = e_;
  if (e == 1) {
    out.assign(d, 0);
    base_.mul_into(a, b, out);
    return;
  }
  std::vector<mpz_class> t((2 * e - 1) * d, 0);
  std::span<const mpz_class> as(a), bs(b);
  std::span<mpz_class> ts(t);
  for (int i = 0; i < e; ++i) {
    if (std::all_of(a.begin() + i * d, a.begin() + (i + 1) * d, [](const mpz_class& x) { return x == 0; })) continue;
    for (int j = 0; j < e; ++j)
      base_.mul_add_into(as.subspan(i * d, d), bs.subspan(j * d, d), ts.subspan((i + j) * d, d));
  }
  std::vector<mpz_class> tmp(d);
  for (int s = 2 * e - 2; s >= e; --s) {
    std::span<mpz_class> c = ts.subspan(s * d, d);
    if (std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x == 0; })) continue;
    // pi^e = -sum f_i pi^i
    for (int i = 0; i < e; ++i) {
      base_.mul_into(c, f_[i], tmp);
      for (int j = 0; j < d; ++j) t[(s - e + i) * d + j] -= tmp[j];
    }
  }
  t.resize(e * d);
  base_.reduce(t);
  out = std::move(t);
}

Valuation LocalField::valuation_flat(const std::vector<mpz_class>& a) const {
  const int d = base_.degree();
  Valuation best;
  for (int i = 0; i < e_; ++i) {
    const Valuation v = base_.val_p(std::span<const mpz_class>(a).subspan(i * d, d));
    if (!v) continue;
    const long w = static_cast<long>(e_) * *v + i;
    if (!best || w < *best) best = w;
  }
  return best;
}

void LocalField::truncate_flat(std::vector<mpz_class>& a, long prec) const {
  if (prec >= M_) return;
  const int d = base_.degree();
  for (int i = 0; i < e_; ++i) {
    const long K = ceil_div(prec - i, e_);
    if (K >= N()) continue;
    if (K <= 0) {
      for (int j = 0; j < d; ++j) a[i * d + j] = 0;
      continue;
    }
    const mpz_class pk = ipow(p(), static_cast<unsigned long>(K));
    for (int j = 0; j < d; ++j) mpz_fdiv_r(a[i * d + j].get_mpz_t(), a[i * d + j].get_mpz_t(), pk.get_mpz_t());
  }
}

FElem LocalField::zero() const { return FElem(this, zeros(e_ * d()), M_); }

FElem LocalField::one() const { return from_int(1); }

FElem LocalField::from_int(const mpz_class& n) const {
  std::vector<mpz_class> a = zeros(e_ * d());
  a[0] = n;
  return FElem(this, std::move(a), M_);
}

FElem LocalField::from_o0(const O0Elem& x) const {
  std::vector<mpz_class> a = zeros(e_ * d());
  for (int j = 0; j < d(); ++j) a[j] = x.coeffs()[j];
  return FElem(this, std::move(a), M_);
}

FElem LocalField::from_coeffs(const std::vector<std::vector<mpz_class>>& c) const {
  if (static_cast<int>(c.size()) > e_) fail(ErrorCode::BadInput, "too many pi-coefficients");
  std::vector<mpz_class> a = zeros(e_ * d());
  for (size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(c[i].size()) > d()) fail(ErrorCode::BadInput, "too many O_0 coordinates");
    for (size_t j = 0; j < c[i].size(); ++j) a[i * d() + j] = c[i][j];
  }
  return FElem(this, std::move(a), M_);
}

FElem LocalField::pi() const { return pi_power(1); }

FElem LocalField::pi_power(long s) const {
  if (s < 0) fail(ErrorCode::BadInput, "negative pi power");
  if (s >= M_) return zero();
  if (s <= 2 * e_) return pi_pow_[s];
  // pi^{et + r} = p^t eps^{-t} pi^r, computed by squaring instead.
  return pow(pi_pow_[1], s);
}

O0Elem LocalField::teichmuller_lift(FiniteField::Elem c) const {
  if (c == 0) return base_.zero();
  return teich_[residue_field().log(c)];
}

FElem LocalField::digit_element(FiniteField::Elem c, long s) const {
  if (c == 0) return zero();
  return from_o0(teichmuller_lift(c)) * pi_power(s);
}

FElem LocalField::omega_power(long i) const { return from_o0(teich_[mod(i, q() - 1)]); }

Valuation valuation(const FElem& x) { return x.field().valuation_flat(x.flat()); }

long valuation_lower(const FElem& x) {
  const Valuation v = valuation(x);
  return v ? *v : x.prec();
}

namespace {

// x / pi for v(x) >= 1.
FElem shift_once(const FElem& x) {
  const LocalField& F = x.field();
  const int d = F.d(), e = F.e();
  const mpz_class pp = F.p();
  std::vector<mpz_class> a0(d), rest(e * d, 0);
  for (int j = 0; j < d; ++j) {
    if (!mpz_divisible_p(x.flat()[j].get_mpz_t(), pp.get_mpz_t()))
      fail(ErrorCode::BadInput, "shift_down: valuation below shift");
    a0[j] = x.flat()[j] / pp;
  }
  for (int i = 1; i < e; ++i)
    for (int j = 0; j < d; ++j) rest[(i - 1) * d + j] = x.flat()[i * d + j];
  FElem head = F.from_o0(O0Elem(&F.base(), a0)) * F.p_over_pi();
  return (head + FElem(&F, rest, F.M())).truncated(x.prec() - 1);
}

}  // namespace

FElem shift_down(const FElem& x, long s) {
  if (s < 0) fail(ErrorCode::BadInput, "negative shift");
  if (s == 0) return x;
  const LocalField& F = x.field();
  const Valuation v = valuation(x);
  if (v && *v < s) fail(ErrorCode::BadInput, "shift_down: valuation below shift");
  if (x.prec() <= s) return F.zero().truncated(0);
  const long t = s / F.e();
  FElem y = x;
  if (t > 0) {
    // pi^{et} = p^t / eps^t: divide the coefficients by p^t.
    const mpz_class pt = ipow(F.p(), static_cast<unsigned long>(t));
    std::vector<mpz_class> a = x.flat();
    for (auto& c : a) {
      if (!mpz_divisible_p(c.get_mpz_t(), pt.get_mpz_t()))
        fail(ErrorCode::BadInput, "shift_down: valuation below shift");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pt.get_mpz_t());
    }
    y = (FElem(&F, std::move(a), F.M()) * pow(F.eps(), t)).truncated(x.prec() - F.e() * t);
  }
  for (long r = 0; r < s - F.e() * t; ++r) y = shift_once(y);
  return y;
}

FiniteField::Elem leading_digit(const FElem& x, long l) {
  const LocalField& F = x.field();
  if (x.prec() <= l) fail(ErrorCode::PrecisionExhausted, "digit beyond precision");
  const Valuation v = valuation(x);
  if (v && *v < l) fail(ErrorCode::BadInput, "leading_digit: valuation below level");
  if (!v || *v > l) return 0;
  const int i0 = static_cast<int>(l % F.e());
  const long kk = l / F.e();
  const mpz_class pk = ipow(F.p(), static_cast<unsigned long>(kk));
  const mpz_class pp = F.p();
  std::vector<long> digits(F.d());
  for (int j = 0; j < F.d(); ++j) {
    mpz_class c = x.flat()[i0 * F.d() + j] / pk;
    digits[j] = mod(c, pp).get_si();
  }
  const FiniteField& k = F.residue_field();
  return k.mul(k.from_digits(digits), k.pow(F.eps_residue(), kk));
}

FiniteField::Elem residue(const FElem& x) { return leading_digit(x, 0); }

UnitDecomposition unit_decompose(const FElem& x) {
  const Valuation v = valuation(x);
  if (!v) fail(ErrorCode::PrecisionExhausted, "unit_decompose of an element indistinguishable from zero");
  const LocalField& F = x.field();
  FElem y = shift_down(x, *v);
  const long i = F.residue_field().log(residue(y));
  FElem u = y * F.omega_power(-i);
  return {*v, i, u};
}

Valuation unit_level(const FElem& u) {
  const FElem z = u - u.field().one();
  const Valuation v = valuation(z);
  if (v && *v <= 0) fail(ErrorCode::NotPrincipalUnit, "not a principal unit");
  return v;
}

FElem pow(const FElem& x, const mpz_class& n) {
  if (n < 0) return pow(inverse(x), -n);
  FElem r = x.field().one();
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(n.get_mpz_t(), i)) r = r * x;
  }
  return r.truncated(n == 0 ? x.field().M() : r.prec());
}

namespace {

FElem residue_inverse_lift(const FElem& x) {
  const Valuation v = valuation(x);
  if (!v || *v != 0) fail(ErrorCode::NotAUnit, "element is not a unit");
  const LocalField& F = x.field();
  return F.from_o0(F.base().lift(F.residue_field().inv(residue(x))));
}

}  // namespace

FElem inverse(const FElem& x) {
  const LocalField& F = x.field();
  FElem y = residue_inverse_lift(x);
  const FElem two = F.from_int(2);
  for (long prec = 1; prec < 2 * F.M(); prec *= 2) y = y * (two - x * y);
  return y.truncated(x.prec());
}

FElem inverse_geometric(const FElem& x) {
  const LocalField& F = x.field();
  const FElem c = residue_inverse_lift(x);
  const FElem z = F.one() - x * c;
  FElem sum = F.one(), term = F.one();
  for (long l = 1; l <= F.M(); ++l) {
    term = term * z;
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return (c * sum).truncated(x.prec());
}

FElem divide_exact(const FElem& a, const FElem& b) {
  const Valuation vb = valuation(b);
  if (!vb) fail(ErrorCode::PrecisionExhausted, "division by an element indistinguishable from zero");
  return shift_down(a, *vb) * inverse(shift_down(b, *vb));
}

FElem zp_exp(const FElem& u, const mpz_class& alpha) {
  const LocalField& F = u.field();
  const FElem z = u - F.one();
  const Valuation r = valuation(z);
  if (r && *r < 1) fail(ErrorCode::NotInIdeal, "zp_exp: u - 1 not in the maximal ideal");
  const mpz_class a = mod(alpha, F.base().modulus());
  if (!r) return F.one().truncated(u.prec());
  // u^{p^N} lies in U^{lev^N(r)} with lev(t) = min(pt, t + e).
  long level = *r;
  for (int i = 0; i < F.N() && level < F.M(); ++i) level = std::min(level * F.p(), level + F.e());
  const long target = std::min({level, F.M(), u.prec()});
  FElem sum = F.one(), zl = F.one();
  mpz_class binom = 1;
  for (long l = 1; mpz_cmp_si(a.get_mpz_t(), l) >= 0 && l * *r < target; ++l) {
    binom *= a - (l - 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(l));
    zl = zl * z;
    sum = sum + F.from_int(mod(binom, F.base().modulus())) * zl;
  }
  return sum.truncated(target);
}

HasseReport hasse_forward(const LocalField& F, long t, long C) {
  if (t < 1) fail(ErrorCode::BadInput, "hasse_forward: t must be positive");
  if (C * F.e() >= F.M() || 2 * t * F.p() >= F.M())
    fail(ErrorCode::PrecisionExhausted, "hasse_forward: not enough precision");
  HasseReport rep;
  rep.t = t;
  rep.t_at_most_e1 = F.at_most_e1(t);
  rep.bound = rep.t_at_most_e1 ? F.p() * t : t + F.e();
  rep.ok = true;
  rep.certified_precision = F.M();
  const FiniteField& k = F.residue_field();
  for (long s = t; s < t + C; ++s) {
    for (int a = 0; a < F.d(); ++a) {
      const FElem g = F.one() + F.digit_element(k.exp(a), s);
      const FElem gp = pow(g, F.p());
      const Valuation lv = unit_level(gp);
      HasseGenerator hg{s, a, lv ? *lv : gp.prec(), std::min(F.p() * s, s + F.e())};
      rep.certified_precision = std::min(rep.certified_precision, gp.prec());
      if (hg.landing < rep.bound || hg.landing < std::min(hg.bound, gp.prec())) rep.ok = false;
      rep.generators.push_back(hg);
    }
  }
  return rep;
}

FElem pth_root_in_filtration(const FElem& w, long t) {
  const LocalField& F = w.field();
  if (F.at_most_e1(t)) fail(ErrorCode::BelowThreshold, "p-th root needs t > e/(p-1)");
  const Valuation lw = unit_level(w);
  const long out_prec = w.prec() - F.e();
  if (out_prec <= t) fail(ErrorCode::PrecisionExhausted, "p-th root: not enough precision");
  if (!lw) return F.one().truncated(out_prec);
  if (*lw < t + F.e()) fail(ErrorCode::NotInIdeal, "w is not in U^{t+e}");
  const FiniteField& k = F.residue_field();
  FElem u = F.one();
  const FiniteField::Elem eb = F.eps_residue();
  for (;;) {
    const FElem diff = (w - pow(u.exact(), F.p())).truncated(w.prec());
    const Valuation l = valuation(diff);
    if (!l) break;
    // (1 + x)^p = 1 + p x mod pi^{l+1} for v(x) = l - e > e1
    const FiniteField::Elem theta = leading_digit(diff, *l);
    const FiniteField::Elem eta = k.div(theta, eb);
    u = u * (F.one() + F.digit_element(eta, *l - F.e()));
  }
  return u.truncated(out_prec);
}

FElem random_integral(const LocalField& F, Rng& rng) {
  std::vector<mpz_class> a(F.e() * F.d());
  for (auto& c : a) c = random_below(rng, F.base().modulus());
  return FElem(&F, std::move(a), F.M());
}

FElem random_unit(const LocalField& F, Rng& rng) {
  for (;;) {
    FElem x = random_integral(F, rng);
    if (valuation(x) == 0L) return x;
  }
}

FElem random_principal_unit(const LocalField& F, Rng& rng, long level) {
  return F.one() + F.pi_power(level) * random_integral(F, rng);
}

NormValue norm_to_base(const FElem& x) {
  const LocalField& F = x.field();
  const int n = F.e() * F.d();
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int c = 0; c < n; ++c) {
    std::vector<mpz_class> b(n, 0);
    b[c] = 1;
    std::vector<mpz_class> col;
    F.mul_flat(x.flat(), b, col);
    for (int r = 0; r < n; ++r) m[r][c] = col[r];
  }
  NormValue out{mod(bareiss_det(std::move(m)), F.base().modulus()), F.N()};
  const Valuation v = valuation(x);
  if (!v) return {0, 0};
  if (x.prec() < F.M()) out.prec = std::min<long>(F.N(), F.d() * *v + ceil_div(x.prec() - *v, F.e()));
  out.value = mod(out.value, ipow(F.p(), static_cast<unsigned long>(out.prec)));
  return out;
}

std::string to_string(const FElem& x) {
  const LocalField& F = x.field();
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < F.e(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < F.d(); ++j) os << (j ? "," : "") << x.flat()[i * F.d() + j].get_str();
  }
  os << "] + O(pi^" << x.prec() << ")";
  return os.str();
}

}  // namespace recip

namespace recip {

namespace {

// Phi_{p^j}(x) and its derivative.
std::pair<FElem, FElem> cyclotomic_eval(const FElem& x, long p, long pj1) {
  const LocalField& F = x.field();
  const FElem y = pow(x, pj1);
  const FElem ym1 = pj1 == 1 ? F.one() : pow(x, pj1 - 1);
  FElem val = F.zero(), der = F.zero(), yi = F.one();
  for (long i = 0; i < p; ++i) {
    val = val + yi;
    // d/dx y^i = i p^{j-1} y^{i-1} x^{p^{j-1}-1}
    if (i + 1 < p) der = der + F.from_int((i + 1) * pj1) * yi * ym1;
    yi = yi * y;
  }
  return {val, der};
}

}  // namespace

void LocalField::compute_mu() {
  const long pr = p();
  const FiniteField& k = residue_field();
  std::optional<FElem> best;
  int best_j = 0;
  long pj1 = 1;
  for (int j = 1; pj1 * (pr - 1) <= e_; ++j, pj1 *= pr) {
    const long phi = pj1 * (pr - 1);
    std::ostringstream log;
    log << "j=" << j << ": ";
    if (e_ % phi != 0) {
      log << "phi(p^j)=" << phi << " does not divide e=" << e_ << ", no root";
      mu_log_.push_back(log.str());
      break;
    }
    const long r = e_ / phi;
    const long delta = r * (j * pj1 * (pr - 1) - pj1);
    const long L = delta + 1;
    if (2 * L >= M_) {
      log << "precision too small for level " << L;
      mu_log_.push_back(log.str());
      break;
    }
    // Depth-first search over x = 1 + sum_{1 <= s < L} c_s pi^s, pruned by
    // v(Phi(x)) >= level.
    std::optional<FElem> root;
    long nodes = 0;
    std::function<void(const FElem&, long)> dfs = [&](const FElem& x, long level) {
      if (root) return;
      ++nodes;
      auto [val, der] = cyclotomic_eval(x, pr, pj1);
      const Valuation vv = valuation(val);
      if (vv && *vv < level) return;
      if (level == L) {
        const Valuation vd = valuation(der);
        if (!vd || (vv && *vv <= 2 * *vd)) return;
        FElem z = x;
        for (int it = 0; it < 2 * N() + 8; ++it) {
          auto [fv, fd] = cyclotomic_eval(z, pr, pj1);
          if (!valuation(fv)) break;
          z = (z - divide_exact(fv, fd)).exact();
        }
        root = z.truncated(M_ - delta);
        return;
      }
      for (long c = 0; c < k.order() && !root; ++c)
        dfs(c == 0 ? x : x + digit_element(static_cast<FiniteField::Elem>(c), level), level + 1);
    };
    dfs(one(), 1);
    log << "level " << L << ", " << nodes << " nodes, " << (root ? "root found" : "no root");
    mu_log_.push_back(log.str());
    if (!root) break;
    best = root;
    best_j = j;
  }
  k_ = best_j;
  if (best) {
    zeta_pk_ = best;
    zeta_p_ = pow(*best, ipow(pr, static_cast<unsigned long>(best_j - 1)));
  }
}

}  // namespace recip
