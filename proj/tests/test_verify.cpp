#include <doctest.h>

#include "cyclokit/errors.hpp"
#include "cyclokit/quadcyclo.hpp"
#include "cyclokit/verify.hpp"

using namespace cyclokit;

TEST_SUITE("verify") {

TEST_CASE("serial and parallel sweeps agree and are clean") {
  for (const FieldProfile& F : finite_fields_up_to(64)) {
    VerifyReport s = verify_field_serial(F);
    VerifyReport p = verify_field_parallel(F);
    CHECK(s == p);
    CHECK_MESSAGE(s.ok(), F.to_string() << ": " << (s.mismatches.empty() ? "" : s.mismatches.front()));
    CHECK(s.checked == divisors(F.q() * F.q() - 1).size());
    u64 quad = 0;
    for (u64 n : divisors(F.q() * F.q() - 1))
      if (is_quadratic(F, n)) ++quad;
    CHECK(s.quadratic == quad);
  }
}

TEST_CASE("larger fields") {
  for (u64 q : {81, 97, 121, 128, 243, 257}) {
    FieldProfile F = parse_field_spec("q:" + std::to_string(q));
    VerifyReport r = verify_field_parallel(F);
    CHECK_MESSAGE(r.ok(), F.to_string() << ": " << (r.mismatches.empty() ? "" : r.mismatches.front()));
  }
}

TEST_CASE("max_n caps the divisors") {
  FieldProfile F23 = FieldProfile::finite_field(23);
  VerifyReport r = verify_field_serial(F23, 16);
  u64 expected = 0;
  for (u64 n : divisors(528))
    if (n <= 16) ++expected;
  CHECK(r.checked == expected);
  CHECK(r.ok());
  CHECK(verify_field_parallel(F23, 528).ok());
}

TEST_CASE("verify preconditions") {
  CHECK_THROWS_AS(verify_field_serial(FieldProfile::rationals()), PreconditionError);
  CHECK_THROWS_AS(verify_field_parallel(FieldProfile::finite_field(1031)), SizeBoundError);
}

TEST_CASE("Frobenius sweep") {
  auto fields = finite_fields_up_to(100);
  FrobeniusReport s = frobenius_sweep_serial(fields);
  FrobeniusReport p = frobenius_sweep_parallel(fields);
  CHECK(s == p);
  CHECK(s.mismatches.empty());
  CHECK(s.fields == fields.size());
  u64 expected = 0;
  for (const auto& F : fields) {
    u64 q = F.q();
    for (u64 n : divisors(q * q - 1))
      if (q % n != 1 % n) ++expected;
  }
  CHECK(s.checked == expected);
  CHECK(max_threads() >= 1);
}

}  // TEST_SUITE
