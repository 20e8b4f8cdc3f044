#pragma once

#include <memory>
#include <string>
#include <vector>

#include "recip/local_field.hpp"

namespace recip {

using FieldPtr = std::shared_ptr<const LocalField>;

// Residue-field modulus used when none is given: the shipped Conway
// polynomial, or x - g for the least primitive root when d = 1.
std::vector<long> default_modulus(long p, int d);

FieldPtr make_qp(long p, int N);
// Q_p(zeta_p), f = ((T+1)^p - 1)/T, so pi = zeta_p - 1.
FieldPtr make_qp_zeta(long p, int N);
// Q_p(p^{1/e}), f = T^e - p.
FieldPtr make_root(long p, int e, int N);
// Unramified of degree d, pi = p.
FieldPtr make_unramified(long p, int d, int N);

// "qp:5", "qp-zeta:3", "root:3:3", "unr:3:2".
FieldPtr make_preset(const std::string& preset, int N);
// {"p":3, "d":1, "gbar":[...], "f":[[..],..] or [..], "N":32}; N in the
// file wins over the argument when present.
FieldPtr field_from_json(const std::string& text, int N);

}  // namespace recip
