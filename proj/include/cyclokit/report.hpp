#pragma once

#include <json.hpp>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/moduli.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/quadcyclo.hpp"
#include "cyclokit/roots.hpp"
#include "cyclokit/verify.hpp"

namespace cyclokit {

using nlohmann::json;

json to_json(const RootOfUnity& z);
json to_json(const ResidueClass& r);
json to_json(const ExtendedNat& v);
json to_json(const FieldValue& v);
json to_json(const QuadMinPoly& mp);
json to_json(const KappaClass& k);
json to_json(const MuSubset& s);
json to_json(const ModuliDescription& d);
json to_json(const FieldProfile& field, const SMaxClass& c);
json to_json(const QuadClass& c);
json to_json(const QuadModuliSummary& s);
json to_json(const VerifyReport& r);

json make_report(const std::string& command, const FieldProfile& field, json results,
                 bool oracle_checked, const std::vector<std::string>& mismatches);

}  // namespace cyclokit
