#include "cyclokit/cli.hpp"

#include <CLI11.hpp>
#include <string>
#include <vector>

#include "cyclokit/automorphisms.hpp"
#include "cyclokit/errors.hpp"
#include "cyclokit/moduli.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/quadcyclo.hpp"
#include "cyclokit/report.hpp"
#include "cyclokit/verify.hpp"

namespace cyclokit {

namespace {

struct Outcome {
  json report;
  bool mismatch = false;
};

Outcome analyze(const FieldProfile& field, u64 n) {
  require_coprime_to_char(field, n);
  std::vector<std::string> bad;
  bool checked = false;
  json r;
  r["n"] = n;
  r["n_F"] = n_F(field, n);
  r["order"] = order_of_zeta(field, n);
  r["degree"] = extension_degree(field, n);
  r["t"] = t_nF(field, n);
  r["order_two"] = is_order_two(field, n);
  r["kappa"] = to_json(kappa_class(field, zeta(n)));
  bool quad = is_quadratic(field, n);
  r["quadratic"] = quad;

  const bool char2 = field.is_finite() && field.characteristic() == 2;
  const bool concrete = field.is_rational() || embedding_available(field);
  if (quad) {
    QuadMinPoly mp = min_poly(field, n);
    r["minpoly"] = to_json(mp);
    if (char2) {
      auto g = artin_schreier_generator(field, n);
      r["generator"] = {{"kind", "artin_schreier"},
                        {"element", "(" + g.numerator.to_string() + ")/(" +
                                        g.denominator.to_string() + ")"},
                        {"polynomial", g.polynomial()}};
      if (concrete) r["quad_class"] = to_json(chi_as(field, n));
    } else {
      auto g = radical_generator(field, n);
      r["generator"] = {{"kind", "radical"},
                        {"element", g.element.to_string()},
                        {"square", g.square.to_string()},
                        {"polynomial", g.polynomial()}};
      if (concrete) r["quad_class"] = to_json(chi_rad(field, n));
    }
    json gal = json::array();
    for (const auto& j : galois_image(field, n)) gal.push_back(j.value);
    r["galois_image"] = gal;

    if (field.is_rational()) {
      RationalMinPoly o = rational_min_poly(n);
      checked = true;
      if (mp.trace_concrete->integer != o.trace) bad.push_back("trace differs from Z[x]/Phi_n");
      if (mp.norm_concrete->integer != o.norm) bad.push_back("norm differs from Z[x]/Phi_n");
      if (mp.yogh.value != o.conjugate_exponent) bad.push_back("yogh differs from Z[x]/Phi_n");
    } else if (embedding_available(field)) {
      BruteMinPoly o = brute_min_poly(field, n);
      checked = true;
      if (mp.trace_concrete != o.trace) bad.push_back("trace differs from the explicit field");
      if (mp.norm_concrete != o.norm) bad.push_back("norm differs from the explicit field");
      if (mp.yogh.value != o.conjugate_exponent) bad.push_back("yogh differs from the explicit field");
    }
  }
  if (field.is_finite()) {
    try {
      u64 ob = brute_order(field, n);
      checked = true;
      if (ob != order_of_zeta(field, n)) bad.push_back("order differs from the explicit field");
    } catch (const SizeBoundError&) {
    }
  }
  return {make_report("analyze", field, r, checked, bad), !bad.empty()};
}

Outcome moduli(const FieldProfile& field, std::optional<u64> prime) {
  std::vector<std::string> bad;
  bool checked = false;
  json r;
  if (prime) {
    ModuliDescription d = m2p(field, *prime);
    r = to_json(d);
    r["prime"] = *prime;
    r["nu"] = to_json(nu(field, *prime));
    r["ell"] = to_json(ell(field, *prime));
    if (*prime == 2) {
      if (auto c2 = has_property_C2(field))
        r["c2"] = *c2;
      else
        r["c2"] = nullptr;
    }
    auto elems = d.presentation.enumerate();
    for (const auto& z : elems) {
      if (!m2_membership(field, z)) bad.push_back(z.to_string() + " is not quadratic");
    }
    if (embedding_available(field)) {
      checked = true;
      std::vector<RootOfUnity> expected;
      for (const auto& z : brute_moduli(field))
        if (pfree_quotient(z.order(), *prime) == 1) expected.push_back(z);
      if (expected != elems) bad.push_back("p-primary moduli differ from the explicit field");
    }
    return {make_report("moduli", field, r, checked, bad), !bad.empty()};
  }
  MuSubset full = full_moduli(field);
  SMaxPartition part = s_max(field);
  r["kind"] = "full";
  r["presentation"] = full.to_string();
  r["cardinality"] = full.cardinality();
  json classes = json::array();
  for (const auto& c : part.classes) classes.push_back(to_json(field, c));
  r["classes"] = classes;
  r["g2"] = to_json(g2(field));
  if (embedding_available(field)) {
    checked = true;
    if (brute_moduli(field) != full.enumerate()) bad.push_back("moduli space differs from the explicit field");
  } else if (field.is_rational()) {
    checked = true;
    for (const auto& z : full.enumerate())
      if (CycloRing(z.order()).degree() != 2) bad.push_back(z.to_string() + " is not quadratic");
  }
  return {make_report("moduli", field, r, checked, bad), !bad.empty()};
}

Outcome verify(const FieldProfile& field, u64 max_n) {
  if (!field.is_finite()) throw PreconditionError("verify requires a finite field");
  VerifyReport rep = verify_field_parallel(field, max_n);
  json r = to_json(rep);
  r["threads"] = max_threads();
  return {make_report("verify", field, r, true, rep.mismatches), !rep.ok()};
}

Outcome classify(const FieldProfile& field) {
  std::vector<std::string> bad;
  bool checked = false;
  json r;
  SMaxPartition part = s_max(field);
  SMaxPartition closed = s_max_closed_form(field);
  json classes = json::array();
  for (const auto& c : part.classes) {
    json cj = to_json(field, c);
    const bool char2 = field.is_finite() && field.characteristic() == 2;
    if (field.is_rational() || embedding_available(field))
      cj["quad_class"] = to_json(char2 ? chi_as(field, c.representative_n)
                                       : chi_rad(field, c.representative_n));
    classes.push_back(cj);
  }
  r["s_max"] = classes;
  bool agree = part.classes.size() == closed.classes.size();
  for (std::size_t i = 0; agree && i < part.classes.size(); ++i)
    agree = part.classes[i].primes == closed.classes[i].primes;
  if (!agree) bad.push_back("union-find partition differs from the closed form");
  r["full_moduli"] = to_json(full_moduli(field));
  r["g2"] = to_json(g2(field));
  if (auto c2 = has_property_C2(field))
    r["c2"] = *c2;
  else
    r["c2"] = nullptr;
  json primes = json::array();
  std::vector<u64> ps = field.is_rational() ? std::vector<u64>{2, 3}
                                            : prime_divisors(field.q() * field.q() - 1);
  for (u64 p : ps)
    primes.push_back({{"p", p}, {"ell", to_json(ell(field, p))}, {"nu", to_json(nu(field, p))}});
  r["primes"] = primes;
  r["quad_moduli"] = to_json(quad_moduli_summary(field));
  if (embedding_available(field)) {
    checked = true;
    if (brute_moduli(field) != full_moduli(field).enumerate())
      bad.push_back("moduli space differs from the explicit field");
  }
  return {make_report("classify", field, r, checked, bad), !bad.empty()};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cyclokit: quadratic cyclotomic extensions over Q and F_q"};
  app.require_subcommand(1);
  std::string field_spec;
  u64 n = 0, max_n = 0, prime = 0;

  auto* a = app.add_subcommand("analyze", "minimal polynomial and invariants of zeta_n");
  a->add_option("--field", field_spec, "Q, q:<p> or q:<p>^<k>")->required();
  a->add_option("--n", n, "order of the root of unity")->required()->check(CLI::PositiveNumber);
  auto* m = app.add_subcommand("moduli", "roots generating quadratic extensions");
  m->add_option("--field", field_spec)->required();
  auto* prime_opt = m->add_option("--prime", prime, "restrict to p-power roots");
  auto* v = app.add_subcommand("verify", "compare formulas against explicit arithmetic");
  v->add_option("--field", field_spec)->required();
  v->add_option("--max-n", max_n, "largest divisor of q^2-1 to check");
  auto* c = app.add_subcommand("classify", "partition and classes of quadratic extensions");
  c->add_option("--field", field_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  FieldProfile field;
  try {
    field = parse_field_spec(field_spec);
  } catch (const PreconditionError& e) {
    err << "field spec: " << e.what() << "\n";
    return kExitParse;
  } catch (const SizeBoundError& e) {
    err << "field spec: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Outcome o;
    if (a->parsed())
      o = analyze(field, n);
    else if (m->parsed())
      o = moduli(field, prime_opt->count() ? std::optional<u64>(prime) : std::nullopt);
    else if (v->parsed())
      o = verify(field, max_n);
    else
      o = classify(field);
    out << o.report.dump(2) << "\n";
    return o.mismatch ? kExitMismatch : kExitOk;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const SizeBoundError& e) {
    err << "size bound: " << e.what() << "\n";
    return kExitSizeBound;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace cyclokit
