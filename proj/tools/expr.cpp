#include "expr.hpp"

#include <cctype>
#include <optional>

#include "recip/error.hpp"

namespace recip::cli {

namespace {

// Recursive descent over
//   sum := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] integer)?
//   atom := integer | name | '(' sum ')'
template <class Ops>
class Parser {
 public:
  using V = typename Ops::Value;
  Parser(const Ops& ops, const std::string& s) : ops_(ops), s_(s) {}

  V run() {
    V v = sum();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::BadInput, "cannot parse '" + s_ + "': " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    const size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected a number");
    return mpz_class(s_.substr(start, i_ - start));
  }

  V sum() {
    V v = term();
    for (;;) {
      if (eat('+'))
        v = ops_.add(v, term());
      else if (eat('-'))
        v = ops_.sub(v, term());
      else
        return v;
    }
  }
  V term() {
    V v = unary();
    for (;;) {
      if (eat('*'))
        v = ops_.mul(v, unary());
      else if (eat('/'))
        v = ops_.div(v, unary());
      else
        return v;
    }
  }
  V unary() {
    if (eat('-')) return ops_.sub(ops_.integer(0), unary());
    return power();
  }
  V power() {
    V v = atom();
    if (!eat('^')) return v;
    const bool neg = eat('-');
    const mpz_class e = integer();
    return ops_.pow(v, neg ? mpz_class(-e) : e);
  }
  V atom() {
    skip();
    if (eat('(')) {
      V v = sum();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) return ops_.integer(integer());
    const size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error(i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end");
    const std::string name = s_.substr(start, i_ - start);
    std::optional<V> v = ops_.name(name);
    if (!v) error("unknown symbol '" + name + "'");
    return *v;
  }

  const Ops& ops_;
  const std::string& s_;
  size_t i_ = 0;
};

struct LocalOps {
  using Value = FElem;
  const LocalField& F;
  Value integer(const mpz_class& n) const { return F.from_int(n); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return divide_exact(a, b); }
  Value pow(const Value& a, const mpz_class& e) const { return recip::pow(a, e); }
  std::optional<Value> name(const std::string& s) const {
    if (s == "pi") return F.pi();
    if (s == "w") return F.omega_power(1);
    if (s == "z") {
      if (!F.zeta_p()) fail(ErrorCode::BadInput, "z: the field has no p-th root of unity");
      return *F.zeta_p();
    }
    if (s == "p") return F.from_int(F.p());
    return std::nullopt;
  }
};

struct FqOps {
  using Value = FqRational;
  const FiniteField& F;
  Value integer(const mpz_class& n) const {
    return ff::constant(F.from_int(mod(n, mpz_class(F.characteristic())).get_si()));
  }
  Value add(const Value& a, const Value& b) const { return ff::add(F, a, b); }
  Value sub(const Value& a, const Value& b) const { return ff::sub(F, a, b); }
  Value mul(const Value& a, const Value& b) const { return ff::mul(F, a, b); }
  Value div(const Value& a, const Value& b) const { return ff::div(F, a, b); }
  Value pow(const Value& a, const mpz_class& e) const {
    if (!e.fits_slong_p() || abs(e) > 4096) fail(ErrorCode::BadInput, "exponent too large");
    long n = e.get_si();
    Value base = n < 0 ? ff::div(F, ff::constant(F.one()), a) : a;
    Value r = ff::constant(F.one());
    for (n = std::labs(n); n > 0; --n) r = ff::mul(F, r, base);
    return r;
  }
  std::optional<Value> name(const std::string& s) const {
    if (s == "t") return ff::from_poly(fq::variable(F));
    if (s == "a") return ff::constant(F.variable());
    return std::nullopt;
  }
};

struct RationalOps {
  using Value = mpq_class;
  Value integer(const mpz_class& n) const { return n; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) fail(ErrorCode::BadInput, "division by zero");
    return a / b;
  }
  Value pow(const Value& a, const mpz_class& e) const {
    if (!e.fits_slong_p() || abs(e) > 64) fail(ErrorCode::BadInput, "exponent too large");
    const long n = e.get_si();
    if (n < 0 && a == 0) fail(ErrorCode::BadInput, "division by zero");
    mpq_class r = 1;
    for (long k = 0; k < std::labs(n); ++k) r *= a;
    return n < 0 ? mpq_class(1 / r) : r;
  }
  std::optional<Value> name(const std::string&) const { return std::nullopt; }
};

}  // namespace

FElem parse_local(const LocalField& F, const std::string& text) {
  const LocalOps ops{F};
  return Parser<LocalOps>(ops, text).run();
}

FqRational parse_fq_rational(const FiniteField& F, const std::string& text) {
  const FqOps ops{F};
  return Parser<FqOps>(ops, text).run();
}

mpq_class parse_rational(const std::string& text) {
  const RationalOps ops;
  return Parser<RationalOps>(ops, text).run();
}

}  // namespace recip::cli
