#pragma once

#include <string>
#include <vector>

#include "cyclokit/field_profile.hpp"

namespace cyclokit {

struct VerifyReport {
  FieldProfile field;
  u64 max_n = 0;
  u64 checked = 0;
  u64 quadratic = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
  bool operator==(const VerifyReport&) const = default;
};

// Checks every n | q^2 - 1 with n <= max_n (0 means no cap) against the
// explicit oracle: orders, degrees, minimal polynomials, conjugate
// exponents, kappa classes, G2 membership and the quadratic character.
VerifyReport verify_field_serial(const FieldProfile& field, u64 max_n = 0);
// Same checks with the divisors distributed over OpenMP threads; the report
// is identical to the serial one.
VerifyReport verify_field_parallel(const FieldProfile& field, u64 max_n = 0);

// Finite fields F_q with q <= max_q.
std::vector<FieldProfile> finite_fields_up_to(u64 max_q);

struct FrobeniusReport {
  u64 fields = 0;
  u64 checked = 0;
  std::vector<std::string> mismatches;
  bool operator==(const FrobeniusReport&) const = default;
};

// yogh(F_q, n) = q mod n for every quadratic n | q^2 - 1, symbolic only.
FrobeniusReport frobenius_sweep_serial(const std::vector<FieldProfile>& fields);
FrobeniusReport frobenius_sweep_parallel(const std::vector<FieldProfile>& fields);

int max_threads();

}  // namespace cyclokit
