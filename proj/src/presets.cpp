#include "recip/presets.hpp"

#include <json.hpp>

#include "recip/error.hpp"
#include "recip/finite_field.hpp"

namespace recip {

namespace {

using Poly = std::vector<std::vector<mpz_class>>;

Poly scalar_poly(const std::vector<mpz_class>& c) {
  Poly f;
  for (const auto& x : c) f.push_back({x});
  return f;
}

long parse_long(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::BadInput, "not an integer: " + s);
  }
  if (pos != s.size()) fail(ErrorCode::BadInput, "not an integer: " + s);
  return v;
}

void check_prime(long p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::vector<long> default_modulus(long p, int d) {
  check_prime(p);
  if (FiniteField::has_conway(p, d)) return FiniteField::conway_modulus(p, d);
  if (d == 1) return FiniteField::prime(p).modulus();
  fail(ErrorCode::UnsupportedField, "no shipped modulus for this residue degree");
}

FieldPtr make_qp(long p, int N) { return make_unramified(p, 1, N); }

FieldPtr make_unramified(long p, int d, int N) {
  auto g = default_modulus(p, d);
  const std::string name = d == 1 ? "Q_" + std::to_string(p) : "Q_" + std::to_string(p) + "^(" + std::to_string(d) + ")";
  return std::make_shared<const LocalField>(p, N, g, scalar_poly({-p, 1}), name);
}

FieldPtr make_qp_zeta(long p, int N) {
  auto g = default_modulus(p, 1);
  std::vector<mpz_class> c;
  for (long i = 0; i < p; ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), p, i + 1);
    c.push_back(b);
  }
  return std::make_shared<const LocalField>(p, N, g, scalar_poly(c), "Q_" + std::to_string(p) + "(zeta_" + std::to_string(p) + ")");
}

FieldPtr make_root(long p, int e, int N) {
  if (e < 1) fail(ErrorCode::BadInput, "ramification index must be positive");
  auto g = default_modulus(p, 1);
  std::vector<mpz_class> c(e + 1, 0);
  c[0] = -p;
  c[e] = 1;
  return std::make_shared<const LocalField>(p, N, g, scalar_poly(c),
                                            "Q_" + std::to_string(p) + "(" + std::to_string(p) + "^(1/" + std::to_string(e) + "))");
}

FieldPtr make_preset(const std::string& preset, int N) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    const size_t pos = preset.find(':', start);
    parts.push_back(preset.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  const std::string& kind = parts[0];
  if (kind == "qp" && parts.size() == 2) return make_qp(parse_long(parts[1]), N);
  if (kind == "qp-zeta" && parts.size() == 2) return make_qp_zeta(parse_long(parts[1]), N);
  if (kind == "root" && parts.size() == 3) return make_root(parse_long(parts[1]), static_cast<int>(parse_long(parts[2])), N);
  if (kind == "unr" && parts.size() == 3)
    return make_unramified(parse_long(parts[1]), static_cast<int>(parse_long(parts[2])), N);
  fail(ErrorCode::BadInput, "unknown field preset: " + preset);
}

FieldPtr field_from_json(const std::string& text, int N) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::BadInput, std::string("field file: ") + ex.what());
  }
  try {
    const long p = j.at("p").get<long>();
    const int d = j.value("d", 1);
    if (j.contains("N")) N = j.at("N").get<int>();
    std::vector<long> g = j.contains("gbar") ? j.at("gbar").get<std::vector<long>>() : default_modulus(p, d);
    if (static_cast<int>(g.size()) != d + 1) fail(ErrorCode::BadInput, "field file: gbar must have d+1 coefficients");
    Poly f;
    for (const auto& c : j.at("f")) {
      std::vector<mpz_class> v;
      if (c.is_array()) {
        for (const auto& x : c) v.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
      } else {
        v.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>()));
      }
      f.push_back(std::move(v));
    }
    return std::make_shared<const LocalField>(p, N, g, f, j.value("name", std::string("custom")));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::BadInput, std::string("field file: ") + ex.what());
  }
}

}  // namespace recip
