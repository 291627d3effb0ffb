#include "cyclokit/report.hpp"

namespace cyclokit {

json to_json(const RootOfUnity& z) { return z.to_string(); }

json to_json(const ResidueClass& r) { return {{"value", r.value}, {"modulus", r.modulus}}; }

json to_json(const ExtendedNat& v) {
  if (v.is_finite()) return v.value();
  return "inf";
}

json to_json(const FieldValue& v) {
  json j;
  j["coeffs"] = v.coeffs;
  if (v.integer) j["int"] = *v.integer;
  return j;
}

json to_json(const QuadMinPoly& mp) {
  json j{{"n", mp.n},
         {"case", to_string(mp.case_tag)},
         {"yogh", mp.yogh.value},
         {"conjugate", to_json(mp.conjugate)},
         {"trace_symbolic", mp.trace_display},
         {"norm_symbolic", mp.norm_display},
         {"trace_expanded", mp.trace.to_string()},
         {"norm_expanded", mp.norm.to_string()},
         {"polynomial", mp.polynomial()}};
  if (mp.trace_concrete) j["trace_concrete"] = to_json(*mp.trace_concrete);
  if (mp.norm_concrete) j["norm_concrete"] = to_json(*mp.norm_concrete);
  return j;
}

json to_json(const KappaClass& k) {
  return {{"branch", to_string(k.branch)},
          {"t", k.t},
          {"two_power", k.two_power},
          {"representative", k.representative.to_string()},
          {"in_field", k.in_field}};
}

json to_json(const MuSubset& s) {
  json j{{"presentation", s.to_string()}, {"finite", s.is_finite()}};
  if (s.is_finite()) j["cardinality"] = s.cardinality();
  return j;
}

json to_json(const ModuliDescription& d) {
  json j{{"kind", d.kind}, {"presentation", d.presentation.to_string()},
         {"class_count", d.class_count}};
  j["cardinality"] = d.cardinality ? json(*d.cardinality) : json("inf");
  if (d.presentation.is_finite() && d.presentation.cardinality() <= 64) {
    json elems = json::array();
    for (const auto& z : d.presentation.enumerate()) elems.push_back(to_json(z));
    j["elements"] = elems;
  }
  return j;
}

json to_json(const FieldProfile& field, const SMaxClass& c) {
  json j{{"primes", c.primes},
         {"representative_n", c.representative_n},
         {"mu_M", c.mu_M.to_string()},
         {"mu_MF", c.mu_MF.to_string()},
         {"moduli", to_json(c.moduli())}};
  j["minpoly"] = to_json(min_poly(field, c.representative_n));
  return j;
}

json to_json(const QuadClass& c) {
  json j{{"kind", c.kind == QuadClass::Kind::SquareClass ? "square_class" : "artin_schreier"},
         {"nontrivial", c.nontrivial},
         {"value", to_json(c.value)}};
  if (c.squarefree) j["squarefree"] = *c.squarefree;
  if (c.nonresidue) j["nonresidue"] = *c.nonresidue;
  if (c.trace_bit) j["trace_bit"] = *c.trace_bit;
  return j;
}

json to_json(const QuadModuliSummary& s) {
  json j{{"separable_index", s.separable_index}, {"inseparable_classes", s.inseparable_classes}};
  j["separable_classes"] = s.separable_classes ? json(*s.separable_classes) : json("inf");
  return j;
}

json to_json(const VerifyReport& r) {
  return {{"max_n", r.max_n}, {"checked", r.checked}, {"quadratic", r.quadratic},
          {"mismatch_count", r.mismatches.size()}};
}

json make_report(const std::string& command, const FieldProfile& field, json results,
                 bool oracle_checked, const std::vector<std::string>& mismatches) {
  return {{"command", command},
          {"field", field.to_string()},
          {"results", std::move(results)},
          {"oracle_checked", oracle_checked},
          {"mismatches", mismatches}};
}

}  // namespace cyclokit
