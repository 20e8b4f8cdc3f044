#include "recip/padic.hpp"

#include "recip/error.hpp"
#include "recip/fq_poly.hpp"
#include "recip/integer.hpp"

namespace recip {

PadicCtx::PadicCtx(long p, int N, std::vector<long> gbar)
    : p_(p), N_(N), pN_(ipow(p, static_cast<unsigned long>(N))), residue_(p, std::move(gbar)) {
  if (N < 1) fail(ErrorCode::BadInput, "precision must be positive");
  for (long c : residue_.modulus()) g_.emplace_back(c);
  omega_ = teichmuller(*this, residue_.generator()).coeffs();
}

PadicCtx PadicCtx::conway(long p, int d, int N) { return PadicCtx(p, N, FiniteField::conway_modulus(p, d)); }

O0Elem PadicCtx::zero() const { return O0Elem(this, std::vector<mpz_class>(degree(), 0)); }
O0Elem PadicCtx::one() const { return from_int(1); }

O0Elem PadicCtx::from_int(const mpz_class& n) const {
  std::vector<mpz_class> c(degree(), 0);
  c[0] = n;
  return O0Elem(this, std::move(c));
}

O0Elem PadicCtx::from_coeffs(std::vector<mpz_class> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree()) fail(ErrorCode::BadInput, "too many O_0 coefficients");
  coeffs.resize(degree(), 0);
  return O0Elem(this, std::move(coeffs));
}

O0Elem PadicCtx::lift(FiniteField::Elem c) const {
  const auto dg = residue_.digits(c);
  std::vector<mpz_class> v(dg.begin(), dg.end());
  return O0Elem(this, std::move(v));
}

FiniteField::Elem PadicCtx::residue(const O0Elem& x) const {
  std::vector<long> dg(degree());
  const mpz_class pp = p_;
  for (int i = 0; i < degree(); ++i) dg[i] = mod(x.coeffs()[i], pp).get_si();
  return residue_.from_digits(dg);
}

O0Elem PadicCtx::omega() const { return O0Elem(this, omega_); }

void PadicCtx::reduce(std::span<mpz_class> a) const {
  for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pN_.get_mpz_t());
}

void PadicCtx::add_to(std::span<mpz_class> acc, std::span<const mpz_class> a) const {
  for (size_t i = 0; i < acc.size(); ++i) {
    acc[i] += a[i];
    if (acc[i] >= pN_) acc[i] -= pN_;
  }
}

void PadicCtx::mul_into(std::span<const mpz_class> a, std::span<const mpz_class> b, std::span<mpz_class> out) const {
  for (auto& x : out) x = 0;
  mul_add_into(a, b, out);
}

void PadicCtx::mul_add_into(std::span<const mpz_class> a, std::span<const mpz_class> b,
                            std::span<mpz_class> acc) const {
  const int d = degree();
  if (d == 1) {
    mpz_addmul(acc[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
    mpz_fdiv_r(acc[0].get_mpz_t(), acc[0].get_mpz_t(), pN_.get_mpz_t());
    return;
  }
  std::vector<mpz_class> t(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) mpz_addmul(t[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (t[k] == 0) continue;
    for (int i = 0; i < d; ++i) mpz_submul(t[k - d + i].get_mpz_t(), t[k].get_mpz_t(), g_[i].get_mpz_t());
  }
  for (int i = 0; i < d; ++i) {
    acc[i] += t[i];
    mpz_fdiv_r(acc[i].get_mpz_t(), acc[i].get_mpz_t(), pN_.get_mpz_t());
  }
}

Valuation PadicCtx::val_p(std::span<const mpz_class> a) const {
  Valuation best;
  for (const auto& x : a) {
    if (x == 0) continue;
    const long v = recip::val_p(x, p_);
    if (!best || v < *best) best = v;
  }
  return best;
}

O0Elem::O0Elem(const PadicCtx* ctx, std::vector<mpz_class> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ctx_->degree()) fail(ErrorCode::BadInput, "O_0 element has wrong length");
  ctx_->reduce(c_);
}

bool O0Elem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

O0Elem O0Elem::operator+(const O0Elem& o) const {
  O0Elem r = *this;
  ctx_->add_to(r.c_, o.c_);
  return r;
}

O0Elem O0Elem::operator-() const {
  O0Elem r = *this;
  for (auto& x : r.c_)
    if (x != 0) x = ctx_->modulus() - x;
  return r;
}

O0Elem O0Elem::operator-(const O0Elem& o) const { return *this + (-o); }

O0Elem O0Elem::operator*(const O0Elem& o) const {
  O0Elem r = ctx_->zero();
  ctx_->mul_into(c_, o.c_, r.c_);
  return r;
}

Valuation val_p(const O0Elem& x) { return x.ctx().val_p(x.coeffs()); }

O0Elem divide_by_p_power(const O0Elem& x, long s) {
  const mpz_class ps = ipow(x.ctx().p(), static_cast<unsigned long>(s));
  std::vector<mpz_class> c = x.coeffs();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), ps.get_mpz_t()))
      fail(ErrorCode::NotAUnit, "coefficient not divisible by p^s");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ps.get_mpz_t());
  }
  return O0Elem(&x.ctx(), std::move(c));
}

O0Elem pow(const O0Elem& x, const mpz_class& e) {
  if (e < 0) return pow(invert(x), -e);
  O0Elem r = x.ctx().one();
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * x;
  }
  return r;
}

namespace {

FiniteField::Elem unit_residue(const O0Elem& x) {
  const Valuation v = val_p(x);
  if (!v) fail(ErrorCode::NotAUnit, "element is zero at working precision");
  if (*v > 0) fail(ErrorCode::NotAUnit, "element divisible by p");
  return x.ctx().residue(x);
}

}  // namespace

O0Elem invert(const O0Elem& x) {
  const PadicCtx& ctx = x.ctx();
  O0Elem y = ctx.lift(ctx.residue_field().inv(unit_residue(x)));
  const O0Elem two = ctx.from_int(2);
  // y <- y (2 - x y) doubles the number of correct digits
  for (int prec = 1; prec < ctx.precision(); prec *= 2) y = y * (two - x * y);
  return y;
}

O0Elem invert_geometric(const O0Elem& x) {
  const PadicCtx& ctx = x.ctx();
  const O0Elem c = ctx.lift(ctx.residue_field().inv(unit_residue(x)));
  // x c = 1 - z with z in p O_0, so 1/(x c) = sum z^l
  const O0Elem z = ctx.one() - x * c;
  O0Elem sum = ctx.one(), term = ctx.one();
  for (int l = 1; l < ctx.precision(); ++l) {
    term = term * z;
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return c * sum;
}

O0Elem teichmuller(const PadicCtx& ctx, FiniteField::Elem c) {
  if (c == 0) fail(ErrorCode::ZeroInput, "Teichmuller lift of zero");
  O0Elem x = ctx.lift(c);
  const mpz_class q = ctx.q();
  for (int i = 0; i < ctx.precision(); ++i) {
    O0Elem nx = pow(x, q);
    if (nx == x) break;
    x = std::move(nx);
  }
  return x;
}

namespace {

O0Elem eval_poly(std::span<const O0Elem> poly, const O0Elem& x) {
  O0Elem r = x.ctx().zero();
  for (size_t i = poly.size(); i-- > 0;) r = r * x + poly[i];
  return r;
}

std::vector<O0Elem> derivative(std::span<const O0Elem> poly) {
  std::vector<O0Elem> d;
  for (size_t i = 1; i < poly.size(); ++i) d.push_back(poly[i] * poly[i].ctx().from_int(static_cast<long>(i)));
  return d;
}

}  // namespace

O0Elem hensel_root(std::span<const O0Elem> poly, const O0Elem& approx) {
  const PadicCtx& ctx = approx.ctx();
  const std::vector<O0Elem> dpoly = derivative(poly);
  if (dpoly.empty()) fail(ErrorCode::HenselHypothesisFailed, "constant polynomial");
  O0Elem a = approx;
  const Valuation vf0 = val_p(eval_poly(poly, a));
  if (!vf0) return a;
  const Valuation vd0 = val_p(eval_poly(dpoly, a));
  if (!vd0 || *vf0 <= 2 * *vd0) fail(ErrorCode::HenselHypothesisFailed, "v(f(a)) <= 2 v(f'(a))");
  for (int iter = 0; iter < 2 * ctx.precision() + 8; ++iter) {
    const O0Elem fa = eval_poly(poly, a);
    const Valuation vf = val_p(fa);
    if (!vf) return a;
    const O0Elem da = eval_poly(dpoly, a);
    const Valuation vd = val_p(da);
    if (!vd || *vd > *vf) fail(ErrorCode::HenselHypothesisFailed, "derivative lost precision");
    const O0Elem unit = divide_by_p_power(da, *vd);
    a = a - divide_by_p_power(fa, *vd) * invert(unit);
  }
  fail(ErrorCode::HenselHypothesisFailed, "Newton iteration did not converge");
}

mpz_class zp_binomial(const PadicCtx& ctx, const mpz_class& alpha, long l) {
  if (l < 0) fail(ErrorCode::BadInput, "negative binomial index");
  // Legendre's formula for v_p(l!)
  long vfact = 0;
  for (long t = l / ctx.p(); t > 0; t /= ctx.p()) vfact += t;
  if (vfact >= ctx.precision()) fail(ErrorCode::PrecisionLoss, "v_p(l!) >= N");
  mpz_class num = 1, den = 1;
  for (long i = 0; i < l; ++i) {
    num *= alpha - i;
    den *= i + 1;
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return mod(r, ctx.modulus());
}

}  // namespace recip
