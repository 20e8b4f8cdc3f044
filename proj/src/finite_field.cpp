#include "recip/finite_field.hpp"

#include <map>

#include "recip/error.hpp"
#include "recip/fq_poly.hpp"
#include "recip/integer.hpp"

namespace recip {

namespace {

const std::map<std::pair<long, int>, std::vector<long>>& conway_table() {
  static const std::map<std::pair<long, int>, std::vector<long>> table = {
      {{2, 1}, {1, 1}},  {{2, 2}, {1, 1, 1}},  {{2, 3}, {1, 1, 0, 1}},
      {{3, 1}, {1, 1}},  {{3, 2}, {2, 2, 1}},  {{3, 3}, {1, 2, 0, 1}},
      {{5, 1}, {3, 1}},  {{5, 2}, {2, 4, 1}},  {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},  {{7, 2}, {3, 6, 1}},  {{7, 3}, {4, 0, 6, 1}},
      {{11, 1}, {9, 1}}, {{11, 2}, {2, 7, 1}}, {{11, 3}, {9, 2, 0, 1}},
      {{13, 1}, {11, 1}}, {{13, 2}, {2, 12, 1}}, {{13, 3}, {11, 2, 0, 1}},
  };
  return table;
}

constexpr long kMaxOrder = 1L << 22;

}  // namespace

bool FiniteField::has_conway(long p, int d) { return conway_table().count({p, d}) > 0; }

std::vector<long> FiniteField::conway_modulus(long p, int d) {
  auto it = conway_table().find({p, d});
  if (it == conway_table().end())
    fail(ErrorCode::BadInput, "no default modulus for p=" + std::to_string(p) + ", d=" + std::to_string(d));
  return it->second;
}

FiniteField FiniteField::conway(long p, int d) { return FiniteField(p, conway_modulus(p, d)); }

FiniteField FiniteField::prime(long p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p));
  for (long g = 1; g < p; ++g) {
    long x = g, ord = 1;
    while (x != 1) {
      x = x * g % p;
      ++ord;
    }
    if (ord == p - 1) return FiniteField(p, {mod(-g, p), 1});
  }
  fail(ErrorCode::NotPrime, "no primitive root");
}

FiniteField::FiniteField(long p, std::vector<long> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p));
  while (!modulus_.empty() && mod(modulus_.back(), p) == 0) modulus_.pop_back();
  if (modulus_.size() < 2) fail(ErrorCode::BadInput, "modulus must have degree >= 1");
  for (auto& c : modulus_) c = mod(c, p);
  if (modulus_.back() != 1) fail(ErrorCode::BadInput, "modulus must be monic");
  d_ = static_cast<int>(modulus_.size()) - 1;
  q_ = 1;
  for (int i = 0; i < d_; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) fail(ErrorCode::BadInput, "residue field too large");
  }
  if (d_ >= 2) {
    const FiniteField Fp = prime(p);
    FqPoly g;
    for (long c : modulus_) g.c.push_back(static_cast<Elem>(c));
    if (!fq::is_irreducible(Fp, g)) fail(ErrorCode::NotIrreducible, "modulus is reducible mod p");
    variable_ = static_cast<Elem>(p);
  } else {
    variable_ = static_cast<Elem>(mod(-modulus_[0], p));
  }
  build_tables();
}

FiniteField::Elem FiniteField::from_int(long n) const { return static_cast<Elem>(mod(n, p_)); }

std::vector<long> FiniteField::digits(Elem a) const {
  std::vector<long> out(d_);
  for (int i = 0; i < d_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::from_digits(std::span<const long> digits) const {
  long v = 0;
  for (size_t i = digits.size(); i-- > 0;) v = v * p_ + mod(digits[i], p_);
  return static_cast<Elem>(v);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>((a + b) % p_);
  long r = 0, mult = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (d_ == 1) return static_cast<Elem>((p_ - a) % p_);
  long r = 0, mult = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::scale(Elem a, long c) const {
  c = mod(c, p_);
  if (c == 0 || a == 0) return 0;
  return mul(a, static_cast<Elem>(c));
}

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>(static_cast<long>(a) * b % p_);
  const auto da = digits(a), db = digits(b);
  std::vector<long> prod(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    const long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d_; ++i) prod[k - d_ + i] = mod(prod[k - d_ + i] - c * modulus_[i], p_);
  }
  prod.resize(d_);
  return from_digits(prod);
}

void FiniteField::build_tables() {
  const long n = q_ - 1;
  auto try_generator = [&](Elem g) {
    std::vector<Elem> ex;
    ex.reserve(n);
    Elem x = 1;
    for (long k = 0; k < n; ++k) {
      if (k > 0 && x == 1) return false;
      ex.push_back(x);
      x = mul_slow(x, g);
    }
    if (x != 1) return false;
    exp_ = std::move(ex);
    generator_ = g;
    return true;
  };
  bool found = (variable_ != 0 && try_generator(variable_));
  for (Elem g = 1; !found && g < static_cast<Elem>(q_); ++g) found = try_generator(g);
  if (!found) fail(ErrorCode::NotIrreducible, "no generator found");
  log_.assign(q_, -1);
  for (long k = 0; k < n; ++k) log_[exp_[k]] = k;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const long s = log_[a] + log_[b];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::ZeroInput, "inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) fail(ErrorCode::ZeroInput, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

long FiniteField::log(Elem a) const {
  if (a == 0) fail(ErrorCode::ZeroInput, "log of zero");
  return log_[a];
}

FiniteField::Elem FiniteField::exp(long k) const { return exp_[mod(k, q_ - 1)]; }

FiniteField::Elem FiniteField::frobenius_root(Elem a) const { return a == 0 ? 0 : pow(a, q_ / p_); }

}  // namespace recip
