#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expr.hpp"
#include "recip/acceptance.hpp"
#include "recip/error.hpp"
#include "recip/function_field.hpp"
#include "recip/global_recip.hpp"
#include "recip/norm_residue.hpp"
#include "recip/orders.hpp"
#include "recip/presets.hpp"
#include "recip/rational_symbols.hpp"
#include "recip/symbols.hpp"

using nlohmann::json;
using namespace recip;

namespace {

struct Config {
  int precision = 64;
  std::uint64_t seed = 0;
  long budget = 500;
  std::string field;
  std::string field_file;
  bool json = false;
};

struct Output {
  json result = json::object();
  json certified_precision = nullptr;
  std::vector<std::string> lines;
  int code = 0;
};

json config_json(const Config& c, const std::string& field) {
  json j;
  j["precision"] = c.precision;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["field"] = field.empty() ? json(nullptr) : json(field);
  return j;
}

FieldPtr resolve_field(const Config& c, const std::string& fallback, std::string& used) {
  if (!c.field_file.empty()) {
    std::ifstream in(c.field_file);
    if (!in) fail(ErrorCode::BadInput, "cannot read " + c.field_file);
    std::stringstream ss;
    ss << in.rdbuf();
    FieldPtr F = field_from_json(ss.str(), c.precision);
    used = F->name();
    return F;
  }
  used = c.field.empty() ? fallback : c.field;
  return make_preset(used, c.precision);
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

json place_json(const FiniteField& F, const FFPlace& v) {
  return {{"place", ff::to_string(F, v)}, {"degree", v.degree()}};
}

// Each command fills an Output; the driver prints it.
struct Args {
  std::string x, y, a, b, place, f, g;
  long m = -1, t = -1, p = 3, q = 3;
  bool brute = false;
  std::vector<int> only;
};

Output cmd_tame(const Config& c, const Args& a, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp:5", field);
  const FElem x = cli::parse_local(*F, a.x), y = cli::parse_local(*F, a.y);
  Output o;
  const long lg = tame_log(x, y);
  const FiniteField::Elem r = tame_symbol(x, y);
  o.result["value"] = {{"tame", lg}};
  o.result["residue"] = r;
  o.result["residue_modulus"] = F->q() - 1;
  o.certified_precision = std::min(x.prec(), y.prec());
  o.lines.push_back("tame symbol {x, y} = g^" + std::to_string(lg) + " in F_" + std::to_string(F->q()) +
                    " (residue element " + std::to_string(r) + ")");
  return o;
}

Output cmd_hilbert2(const Config& c, const Args& a, std::string&) {
  const Place v = parse_place(a.place);
  const mpq_class x = cli::parse_rational(a.a), y = cli::parse_rational(a.b);
  Output o;
  const int h = hilbert_quadratic_q(x, y, v);
  o.result["value"] = h;
  o.result["place"] = to_string(v);
  o.lines.push_back("(" + x.get_str() + ", " + y.get_str() + ")_" + to_string(v) + " = " + sign_str(h));
  if (v.kind == Place::Kind::Finite) {
    const long p = v.prime;
    // The oracle works with p-integral representatives: a p^2-multiple
    // changes neither the class nor the symbol.
    auto integral = [p](const mpq_class& r) {
      const long k = split_rational(r, p).first;
      const long shift = k < 0 ? 2 * ((-k + 1) / 2) : 0;
      return mpq_class(r * mpq_class(ipow(p, static_cast<unsigned long>(shift))));
    };
    const FieldPtr F = make_qp(p, c.precision);
    const bool oracle =
        norm_residue_trivial(rational_to_local(*F, integral(x)), rational_to_local(*F, integral(y)), 2, c.seed);
    o.result["oracle"] = oracle ? 1 : -1;
    o.result["agree"] = oracle == (h == 1);
    o.certified_precision = F->M();
    o.lines.push_back(std::string("norm-residue oracle: ") + (oracle ? "+1" : "-1") + (oracle == (h == 1) ? " (agrees)" : " (DISAGREES)"));
    if (oracle != (h == 1)) o.code = 1;
  }
  return o;
}

Output cmd_wild(const Config& c, const Args& a, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp-zeta:3", field);
  const FElem x = cli::parse_local(*F, a.x);
  Output o;
  const long j = wild_symbol_zeta(x);
  const bool oracle = norm_residue_trivial(x, *F->zeta_p(), F->p(), c.seed);
  o.result["value"] = {{"wild", j}};
  o.result["oracle_trivial"] = oracle;
  o.result["agree"] = oracle == (j == 0);
  o.certified_precision = x.prec();
  o.lines.push_back("h(x, zeta_" + std::to_string(F->p()) + ") = zeta^" + std::to_string(j));
  o.lines.push_back(std::string("norm-residue oracle: ") + (oracle ? "trivial" : "nontrivial") + (oracle == (j == 0) ? " (agrees)" : " (DISAGREES)"));
  if (oracle != (j == 0)) o.code = 1;
  return o;
}

Output cmd_norm_oracle(const Config& c, const Args& a, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp:5", field);
  const FElem x = cli::parse_local(*F, a.x), y = cli::parse_local(*F, a.y);
  const long m = a.m < 0 ? 2 : a.m;
  Output o;
  const KummerNormGroup H(*F, m, y, std::max(c.budget, 4000L), c.seed);
  const bool t = H.contains(x);
  o.result["value"] = t ? 1 : -1;
  o.result["trivial"] = t;
  o.result["m"] = m;
  o.result["y_is_power"] = H.y_is_power();
  o.result["classes_rank"] = H.classes().rank();
  o.result["samples"] = H.samples();
  o.certified_precision = std::min(x.prec(), y.prec());
  o.lines.push_back("h_" + std::to_string(m) + "(x, y) " + (t ? "= 1: x is a norm" : "!= 1: x is not a norm") + " from F(y^(1/" +
                    std::to_string(m) + "))");
  return o;
}

Output cmd_order(const Config& c, const Args& a, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp-zeta:3", field);
  if (a.m < 0) fail(ErrorCode::BadInput, "--m is required");
  Output o;
  const OrderIndex idx = index_in_of(*F, a.m);
  o.result["m"] = a.m;
  o.result["s"] = idx.s;
  o.result["index"] = idx.value.get_str();
  o.lines.push_back("[O_F : R_" + std::to_string(a.m) + "] = " + std::to_string(F->q()) + "^" + std::to_string(idx.s) + " = " + idx.value.get_str());
  if (a.brute) {
    const mpz_class b = index_brute_force(*F, a.m);
    o.result["brute_force"] = b.get_str();
    o.lines.push_back("brute force: " + b.get_str() + (b == idx.value ? " (agrees)" : " (DISAGREES)"));
    if (b != idx.value) o.code = 1;
  }
  if (!a.x.empty()) {
    const FElem x = cli::parse_local(*F, a.x);
    const OrderRm R(*F, a.m);
    const bool in = R.contains(x);
    o.result["x"] = {{"in_order", in}, {"unit", in && R.is_unit(x)}, {"in_maximal_ideal", in && R.in_maximal_ideal(x)}};
    o.lines.push_back(std::string("x ") + (in ? "lies in R_m" : "is not in R_m") + (in ? (R.is_unit(x) ? ", unit" : ", in the maximal ideal") : ""));
  }
  o.certified_precision = F->M();
  return o;
}

Output cmd_m0(const Config& c, const Args&, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp-zeta:3", field);
  Output o;
  const OptimalOrderReport r = estimate_m0(*F, default_m0_oracle(*F, c.seed), c.budget);
  o.result["label"] = "experimental upper/lower evidence";
  o.result["bound"] = r.bound;
  o.result["estimated_m0"] = r.estimated_m0 ? json(*r.estimated_m0) : json(nullptr);
  o.result["monotone"] = r.monotone;
  o.result["pairs_evaluated"] = r.pairs_evaluated;
  json certs = json::array();
  for (const auto& ct : r.certificates) {
    json j{{"m", ct.m}, {"kind", ct.kind}, {"pairs", ct.pairs}};
    if (ct.kind == "witness") j["pair"] = {{"type", ct.type}, {"x", ct.x}, {"y", ct.y}};
    else if (!ct.x.empty()) j["note"] = ct.x;
    certs.push_back(j);
    o.lines.push_back("m=" + std::to_string(ct.m) + ": " + ct.kind + (ct.kind == "witness" ? " " + ct.type + " {" + ct.x + ", " + ct.y + "}" : "") +
                      " after " + std::to_string(ct.pairs) + " pairs");
  }
  o.result["certificates"] = certs;
  o.certified_precision = r.certified_precision;
  o.lines.push_back("bound B = " + std::to_string(r.bound) + ", estimated m0 = " +
                    (r.estimated_m0 ? std::to_string(*r.estimated_m0) : std::string("none")) + (r.monotone ? ", monotone" : ", NOT monotone"));
  o.lines.push_back("experimental upper/lower evidence: vanishing is sampled on spanning sets, not proved");
  if (!r.monotone) o.code = 1;
  return o;
}

Output cmd_hasse(const Config& c, const Args& a, std::string& field) {
  const FieldPtr F = resolve_field(c, "qp-zeta:3", field);
  Output o;
  std::vector<long> ts;
  const long p = F->p(), e = F->e();
  const long top = floor_rational(mpq_class(p) * F->e1() + mpq_class(std::max(0, F->k() - 1) * e));
  if (a.t >= 1) {
    ts.push_back(a.t);
  } else {
    for (long t = 1; 2 * t * p < F->M() && t <= top + 2; ++t) ts.push_back(t);
  }
  json fw = json::array();
  long cert = F->M();
  for (long t : ts) {
    const HasseReport r = hasse_forward(*F, t);
    fw.push_back({{"t", t}, {"bound", r.bound}, {"regime", r.t_at_most_e1 ? "pt" : "t+e"}, {"ok", r.ok}});
    cert = std::min(cert, r.certified_precision);
    o.lines.push_back("(U^" + std::to_string(t) + ")^p in U^" + std::to_string(r.bound) + (r.ok ? ": ok" : ": FAILED"));
    if (!r.ok) o.code = 1;
  }
  json roots = json::array();
  const FiniteField& k = F->residue_field();
  for (long i = top + 1; i <= top + e + 1 && a.t < 1; ++i)
    for (long d = 0; d < F->d(); ++d) {
      const FElem w = F->one() + F->digit_element(k.exp(d), i);
      const FElem u = pth_root_in_filtration(w, i - e);
      const FElem diff = pow(u, p) - w;
      const Valuation v = valuation(diff);
      const bool ok = !v || *v >= std::min(u.prec(), diff.prec());
      roots.push_back({{"level", i}, {"a", d}, {"root_precision", u.prec()}, {"ok", ok}});
      o.lines.push_back("p-th root of 1+w^" + std::to_string(d) + "*pi^" + std::to_string(i) + (ok ? ": ok" : ": FAILED") +
                        " (precision " + std::to_string(u.prec()) + ")");
      if (!ok) o.code = 1;
    }
  o.result["forward"] = fw;
  o.result["roots"] = roots;
  o.result["root_threshold"] = top;
  o.certified_precision = cert;
  return o;
}

Output cmd_moore(const Config&, const Args& a, std::string&) {
  const mpq_class x = cli::parse_rational(a.a), y = cli::parse_rational(a.b);
  const MooreReport r = moore_product_q(x, y);
  Output o;
  json table = json::array();
  for (const auto& e : r.table) {
    table.push_back({{"place", to_string(e.place)}, {"m_v", e.m_v}, {"exponent", e.exponent}, {"value", e.value},
                     {"closed_form", e.closed_form}});
    o.lines.push_back(to_string(e.place) + ": " + sign_str(e.value) + " (m_v = " + std::to_string(e.m_v) + ")");
  }
  o.result["table"] = table;
  o.result["product"] = r.product;
  o.result["consistent"] = r.consistent;
  o.lines.push_back("product " + sign_str(r.product));
  if (r.product != 1 || !r.consistent) o.code = 1;
  return o;
}

Output cmd_lattice(const Config&, const Args& a, std::string&) {
  const long p = a.p;
  long m = a.m;
  if (m < 0) {
    const FieldPtr F = make_qp_zeta(p, 16);
    m = m0_bound(*F);
  }
  const GlobalOrderLattice L = global_optimal_lattice(p, m);
  Output o;
  json basis = json::array();
  for (const auto& row : L.basis) {
    json r = json::array();
    std::string line;
    for (const auto& v : row) {
      r.push_back(v.get_str());
      line += (line.empty() ? "" : " ") + v.get_str();
    }
    basis.push_back(r);
    o.lines.push_back("  [" + line + "]");
  }
  const FieldPtr F = make_qp_zeta(p, 16);
  const OrderIndex closed = index_in_of(*F, m);
  const bool contains_one = lattice_contains_one(L), closed_mul = lattice_closed(L);
  o.result["p"] = p;
  o.result["m"] = m;
  o.result["basis"] = basis;
  o.result["index"] = L.index.get_str();
  o.result["closed_form_index"] = closed.value.get_str();
  o.result["contains_one"] = contains_one;
  o.result["multiplicatively_closed"] = closed_mul;
  o.lines.insert(o.lines.begin(), "HNF basis of R_" + std::to_string(m) + " in Z[zeta_" + std::to_string(p) + "] (columns):");
  o.lines.push_back("index " + L.index.get_str() + ", closed form " + closed.value.get_str());
  bool ok = contains_one && closed_mul && L.index == closed.value;
  if (a.brute) {
    const mpz_class b = lattice_index_brute_force(p, m);
    o.result["brute_force_index"] = b.get_str();
    o.lines.push_back("brute force " + b.get_str());
    ok = ok && b == L.index;
  }
  o.lines.push_back(std::string("contains 1: ") + (contains_one ? "yes" : "NO") + ", closed under products: " + (closed_mul ? "yes" : "NO"));
  if (!ok) o.code = 1;
  return o;
}

Output cmd_weil(const Config&, const Args& a, std::string&) {
  const FiniteField F = make_fq(a.q);
  const FqRational f = cli::parse_fq_rational(F, a.f), g = cli::parse_fq_rational(F, a.g);
  const WeilReport r = weil_reciprocity_check(F, f, g);
  Output o;
  json table = json::array();
  for (const auto& e : r.table) {
    json j = place_json(F, e.place);
    j["symbol"] = fq::to_string(F, e.symbol);
    j["norm"] = fq::to_string(F, FqPoly::constant(e.norm));
    table.push_back(j);
    o.lines.push_back(ff::to_string(F, e.place) + ": symbol " + fq::to_string(F, e.symbol) + ", norm " + fq::to_string(F, FqPoly::constant(e.norm)));
  }
  o.result["table"] = table;
  o.result["product"] = fq::to_string(F, FqPoly::constant(r.product));
  o.result["ok"] = r.ok;
  o.lines.push_back("product " + fq::to_string(F, FqPoly::constant(r.product)) + (r.ok ? "" : " (RECIPROCITY FAILS)"));
  if (!r.ok) o.code = 1;
  return o;
}

Output cmd_ff_hilbert(const Config&, const Args& a, std::string&) {
  const FiniteField F = make_fq(a.q);
  const FqRational f = cli::parse_fq_rational(F, a.f), g = cli::parse_fq_rational(F, a.g);
  const FFHilbertReport r = ff_hilbert_check(F, f, g);
  Output o;
  json table = json::array();
  for (const auto& e : r.table) {
    json j = place_json(F, e.place);
    j["m_v"] = e.m_v.get_str();
    j["exponent"] = e.exponent.get_str();
    j["value"] = fq::to_string(F, FqPoly::constant(e.value));
    j["norm"] = fq::to_string(F, FqPoly::constant(e.norm));
    j["agrees"] = e.agrees;
    j["m_v_prime_to_p"] = e.prime_to_p;
    table.push_back(j);
    o.lines.push_back(ff::to_string(F, e.place) + ": exponent " + e.exponent.get_str() + ", value " +
                      fq::to_string(F, FqPoly::constant(e.value)) + (e.agrees ? "" : " (DISAGREES with norm)"));
  }
  o.result["table"] = table;
  o.result["product"] = fq::to_string(F, FqPoly::constant(r.product));
  o.result["ok"] = r.ok;
  o.lines.push_back("product " + fq::to_string(F, FqPoly::constant(r.product)) + (r.ok ? "" : " (FAILS)"));
  if (!r.ok) o.code = 1;
  return o;
}

Output cmd_residue(const Config&, const Args& a, std::string&) {
  const FiniteField F = make_fq(a.q);
  const FqRational f = cli::parse_fq_rational(F, a.f), g = cli::parse_fq_rational(F, a.g);
  const ResidueReport r = residue_theorem_check(F, f, g);
  Output o;
  o.result["constant_differential"] = r.constant_differential;
  json table = json::array();
  for (const auto& e : r.table) {
    json j = place_json(F, e.place);
    j["residue"] = fq::to_string(F, e.residue);
    j["trace"] = fq::to_string(F, FqPoly::constant(e.trace));
    table.push_back(j);
    o.lines.push_back(ff::to_string(F, e.place) + ": residue " + fq::to_string(F, e.residue) + ", trace " + fq::to_string(F, FqPoly::constant(e.trace)));
  }
  o.result["table"] = table;
  o.result["sum"] = fq::to_string(F, FqPoly::constant(r.sum));
  o.result["ok"] = r.ok;
  if (r.constant_differential) o.lines.push_back("dg = 0: constant differential, nothing to check");
  o.lines.push_back("sum of traces " + fq::to_string(F, FqPoly::constant(r.sum)) + (r.ok ? "" : " (FAILS)"));
  if (!r.ok) o.code = 1;
  return o;
}

Output cmd_selftest(const Config& c, const Args& a, std::string&) {
  Output o;
  json rows = json::array();
  bool all = true;
  for (const auto& r : run_acceptance(c.seed, a.only)) {
    rows.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    o.lines.push_back(format_result(r, false));
    all = all && r.passed;
  }
  o.result["criteria"] = rows;
  o.result["all_passed"] = all;
  if (!all) o.code = 1;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recip: local symbols, reciprocity laws and orders at desk scale"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  Args args;
  app.add_option("--precision", cfg.precision, "p-adic precision N")->envname("RECIP_PRECISION")->check(CLI::Range(8, 4096));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--budget", cfg.budget, "sample budget")->check(CLI::PositiveNumber);
  auto* field_opt = app.add_option("--field", cfg.field, "field preset: qp:P, qp-zeta:P, root:P:E, unr:P:D");
  app.add_option("--field-file", cfg.field_file, "JSON field descriptor")->excludes(field_opt);
  app.add_flag("--json", cfg.json, "JSON output");

  using Handler = Output (*)(const Config&, const Args&, std::string&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    subs.emplace_back(s, h);
    return s;
  };

  auto* tame = add("tame", "tame symbol of two elements", cmd_tame);
  tame->add_option("--x", args.x)->required();
  tame->add_option("--y", args.y)->required();
  auto* h2 = add("hilbert2", "quadratic Hilbert symbol over Q", cmd_hilbert2);
  h2->add_option("--place", args.place, "prime or inf")->required();
  h2->add_option("--a", args.a)->required();
  h2->add_option("--b", args.b)->required();
  auto* wz = add("wild-zeta", "h(x, zeta_p) over Q_p(zeta_p)", cmd_wild);
  wz->add_option("--x", args.x)->required();
  auto* no = add("norm-oracle", "is x a norm from F(y^(1/m))", cmd_norm_oracle);
  no->add_option("--x", args.x)->required();
  no->add_option("--y", args.y)->required();
  no->add_option("--m", args.m, "2 or p (default 2)");
  auto* ord = add("order", "index and membership for R_m", cmd_order);
  ord->add_option("--m", args.m)->required()->check(CLI::NonNegativeNumber);
  ord->add_option("--x", args.x);
  ord->add_flag("--brute", args.brute, "also count cosets");
  add("m0", "experimental optimal-order level", cmd_m0);
  auto* hv = add("hasse-verify", "p-th power inclusions and p-th roots", cmd_hasse);
  hv->add_option("--t", args.t, "single level");
  auto* mo = add("moore", "Moore product over Q", cmd_moore);
  mo->add_option("--a", args.a)->required();
  mo->add_option("--b", args.b)->required();
  auto* la = add("lattice", "global order in Z[zeta_p] as an HNF lattice", cmd_lattice);
  la->add_option("--p", args.p)->check(CLI::IsMember({3L, 5L, 7L}));
  la->add_option("--m", args.m, "local level (default: the bound B)")->check(CLI::NonNegativeNumber);
  la->add_flag("--brute", args.brute, "also count cosets");
  for (auto [name, help, h] : {std::tuple{"weil", "Weil reciprocity on P^1 over F_q", cmd_weil},
                               std::tuple{"ff-hilbert", "Hilbert reciprocity on P^1 over F_q", cmd_ff_hilbert},
                               std::tuple{"residue", "residue theorem for f dg on P^1 over F_q", cmd_residue}}) {
    auto* s = add(name, help, h);
    s->add_option("--q", args.q)->required();
    s->add_option("--f", args.f)->required();
    s->add_option("--g", args.g)->required();
  }
  auto* st = add("selftest", "run the acceptance suite", cmd_selftest);
  st->add_option("--only", args.only, "criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    const std::string command = sub->get_name();
    std::string field;
    try {
      const Output o = handler(cfg, args, field);
      if (cfg.json) {
        json j;
        j["command"] = command;
        j["config"] = config_json(cfg, field);
        j["result"] = o.result;
        j["certified_precision"] = o.certified_precision;
        j["schema"] = "v1";
        std::cout << j.dump(2) << "\n";
      } else {
        if (!field.empty()) std::cout << "field " << field << "\n";
        for (const auto& l : o.lines) std::cout << l << "\n";
      }
      return o.code;
    } catch (const Error& e) {
      const ErrorCode c = e.code();
      const bool usage = c == ErrorCode::BadInput || c == ErrorCode::NotPrime || c == ErrorCode::ZeroInput ||
                         c == ErrorCode::NotEisenstein || c == ErrorCode::NotIrreducible;
      if (cfg.json) {
        json j;
        j["command"] = command;
        j["config"] = config_json(cfg, field);
        j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
        j["schema"] = "v1";
        std::cout << j.dump(2) << "\n";
      } else {
        std::cerr << "error: " << e.what() << "\n";
      }
      return usage ? 2 : 1;
    }
  }
  return 2;
}
