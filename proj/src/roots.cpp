#include "cyclokit/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "cyclokit/errors.hpp"

namespace cyclokit {

RootOfUnity RootOfUnity::canonical(u64 n, i64 j) {
  if (n == 0) throw PreconditionError("root of unity order must be >= 1");
  u64 r = ResidueClass::of(j, n).value;
  RootOfUnity z;
  if (r == 0) return z;
  u64 g = std::gcd(r, n);
  z.num_ = r / g;
  z.den_ = n / g;
  return z;
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 6 || s.rfind("z(", 0) != 0 || s.back() != ')')
    throw PreconditionError("expected root of the form z(n,j): " + std::string(text));
  auto comma = s.find(',');
  if (comma == std::string::npos) throw PreconditionError("missing comma in " + s);
  u64 n = 0;
  i64 j = 0;
  const char* b = s.data() + 2;
  const char* m = s.data() + comma;
  const char* e = s.data() + s.size() - 1;
  auto r1 = std::from_chars(b, m, n);
  auto r2 = std::from_chars(m + 1, e, j);
  if (r1.ec != std::errc{} || r1.ptr != m || r2.ec != std::errc{} || r2.ptr != e)
    throw PreconditionError("malformed root " + s);
  return canonical(n, j);
}

u64 RootOfUnity::exponent_in(u64 n) const {
  if (n == 0 || n % den_ != 0) throw PreconditionError("root order must divide n");
  return num_ * (n / den_);
}

std::string RootOfUnity::to_string() const {
  return "z(" + std::to_string(den_) + "," + std::to_string(num_) + ")";
}

RootOfUnity canonical(u64 n, i64 j) { return RootOfUnity::canonical(n, j); }

RootOfUnity multiply(const RootOfUnity& a, const RootOfUnity& b) {
  u64 l = lcm_checked(a.denominator(), b.denominator());
  u64 x = (a.exponent_in(l) + b.exponent_in(l)) % l;
  return canonical(l, static_cast<i64>(x));
}

RootOfUnity power(const RootOfUnity& z, i64 k) {
  u64 n = z.denominator();
  u64 kk = ResidueClass::of(k, n).value;
  return canonical(n, static_cast<i64>(mul_mod(z.numerator(), kk, n)));
}

RootOfUnity inverse(const RootOfUnity& z) { return power(z, -1); }

u64 primitive_order(const RootOfUnity& z) { return z.denominator(); }

RootOfUnity primary_component(const RootOfUnity& z, u64 d) {
  u64 n = z.order();
  if (n == 1) return z;
  u64 n1 = 1;
  for (const auto& pp : factorize(n)) {
    if (d % pp.prime == 0) n1 *= ipow(pp.prime, pp.exponent);
  }
  u64 n2 = n / n1;
  ResidueClass parts[] = {{1 % n1, n1}, {0, n2}};
  u64 u = crt(parts).value;
  return power(z, static_cast<i64>(u));
}

CycloSum CycloSum::constant(i64 c) {
  CycloSum s;
  s.add_term(RootOfUnity{}, c);
  return s;
}

CycloSum CycloSum::root(const RootOfUnity& z, i64 coeff) {
  CycloSum s;
  s.add_term(z, coeff);
  return s;
}

void CycloSum::add_term(const RootOfUnity& z, i64 coeff) {
  if (coeff == 0) return;
  // One representative per coset {x, zeta_2 x}: the odd-order root when the
  // coset has one, otherwise the exponent class in [0, 1/2).
  RootOfUnity r = z;
  u64 d = r.denominator();
  if ((d % 4 == 2) || (d % 4 == 0 && 2 * r.numerator() >= d)) {
    r = multiply(r, canonical(2, 1));
    coeff = -coeff;
  }
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<i64> CycloSum::as_integer() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_.begin()->first.is_identity()) return terms_.begin()->second;
  return std::nullopt;
}

u64 CycloSum::conductor() const {
  u64 l = 1;
  for (const auto& [z, c] : terms_) l = lcm_checked(l, z.order());
  return l;
}

std::string CycloSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [z, c] : terms_) {
    i64 mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (z.is_identity()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += z.to_string();
    }
  }
  return out;
}

CycloSum CycloSum::operator+(const CycloSum& o) const {
  CycloSum r = *this;
  for (const auto& [z, c] : o.terms_) r.add_term(z, c);
  return r;
}

CycloSum CycloSum::operator-(const CycloSum& o) const { return *this + (-o); }

CycloSum CycloSum::operator-() const {
  CycloSum r;
  for (const auto& [z, c] : terms_) r.terms_.emplace(z, -c);
  return r;
}

CycloSum CycloSum::operator*(const CycloSum& o) const {
  CycloSum r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(multiply(a, b), ca * cb);
  return r;
}

CycloSum CycloSum::operator*(i64 c) const {
  CycloSum r;
  for (const auto& [z, v] : terms_) r.add_term(z, v * c);
  return r;
}

struct MuSubset::Node {
  Kind kind;
  u64 param = 0;
  std::vector<MuSubset> operands;
};

MuSubset MuSubset::empty() { return MuSubset(std::make_shared<Node>(Node{Kind::Empty, 0, {}})); }
MuSubset MuSubset::all() { return MuSubset(std::make_shared<Node>(Node{Kind::All, 0, {}})); }

MuSubset MuSubset::mu(u64 n) {
  if (n == 0) throw PreconditionError("mu(n) requires n >= 1");
  return MuSubset(std::make_shared<Node>(Node{Kind::Mu, n, {}}));
}

MuSubset MuSubset::prim(u64 n) {
  if (n == 0) throw PreconditionError("primitive set requires n >= 1");
  return MuSubset(std::make_shared<Node>(Node{Kind::PrimSet, n, {}}));
}

MuSubset MuSubset::product(std::vector<MuSubset> factors) {
  if (factors.empty()) return mu(1);
  return MuSubset(std::make_shared<Node>(Node{Kind::InternalProduct, 0, std::move(factors)}));
}

MuSubset MuSubset::difference(MuSubset a, MuSubset b) {
  return MuSubset(std::make_shared<Node>(Node{Kind::Difference, 0, {std::move(a), std::move(b)}}));
}

MuSubset MuSubset::union_of(std::vector<MuSubset> parts) {
  if (parts.empty()) return empty();
  return MuSubset(std::make_shared<Node>(Node{Kind::Union, 0, std::move(parts)}));
}

MuSubset::Kind MuSubset::kind() const { return node_->kind; }
u64 MuSubset::parameter() const { return node_->param; }
const std::vector<MuSubset>& MuSubset::operands() const { return node_->operands; }

namespace {

bool pairwise_coprime_supports(const std::vector<MuSubset>& ops, std::vector<u64>& sup) {
  sup.clear();
  for (const auto& op : ops) {
    auto s = op.support();
    if (!s) return false;
    for (u64 prev : sup)
      if (std::gcd(prev, *s) != 1) return false;
    sup.push_back(*s);
  }
  return true;
}

}  // namespace

std::optional<u64> MuSubset::support() const {
  switch (node_->kind) {
    case Kind::Empty:
      return 1;
    case Kind::All:
      return std::nullopt;
    case Kind::Mu:
    case Kind::PrimSet:
      return node_->param;
    case Kind::Difference:
      return node_->operands[0].support();
    case Kind::InternalProduct:
    case Kind::Union: {
      u64 l = 1;
      for (const auto& op : node_->operands) {
        auto s = op.support();
        if (!s) return std::nullopt;
        l = lcm_checked(l, *s);
      }
      return l;
    }
  }
  return std::nullopt;
}

bool MuSubset::is_finite() const { return support().has_value(); }

bool MuSubset::contains(const RootOfUnity& z) const {
  switch (node_->kind) {
    case Kind::Empty:
      return false;
    case Kind::All:
      return true;
    case Kind::Mu:
      return node_->param % z.order() == 0;
    case Kind::PrimSet:
      return node_->param == z.order();
    case Kind::Difference:
      return node_->operands[0].contains(z) && !node_->operands[1].contains(z);
    case Kind::Union:
      return std::any_of(node_->operands.begin(), node_->operands.end(),
                         [&](const MuSubset& s) { return s.contains(z); });
    case Kind::InternalProduct: {
      std::vector<u64> sup;
      if (pairwise_coprime_supports(node_->operands, sup)) {
        u64 total = 1;
        for (u64 s : sup) total *= s;
        if (total % z.order() != 0) return false;
        for (std::size_t i = 0; i < sup.size(); ++i) {
          if (!node_->operands[i].contains(primary_component(z, sup[i]))) return false;
        }
        return true;
      }
      for (const auto& op : node_->operands)
        if (!op.is_finite())
          throw PreconditionError("membership in an infinite non-coprime product is undecided");
      auto elems = enumerate();
      return std::binary_search(elems.begin(), elems.end(), z);
    }
  }
  return false;
}

std::vector<RootOfUnity> MuSubset::enumerate() const {
  std::vector<RootOfUnity> out;
  switch (node_->kind) {
    case Kind::Empty:
      return out;
    case Kind::All:
      throw PreconditionError("cannot enumerate an infinite subset of mu_inf");
    case Kind::Mu:
    case Kind::PrimSet: {
      u64 n = node_->param;
      for (u64 j = 0; j < n; ++j) {
        if (node_->kind == Kind::PrimSet && std::gcd(j, n) != 1) continue;
        out.push_back(canonical(n, static_cast<i64>(j)));
      }
      break;
    }
    case Kind::Difference: {
      for (const auto& z : node_->operands[0].enumerate())
        if (!node_->operands[1].contains(z)) out.push_back(z);
      break;
    }
    case Kind::Union: {
      std::set<RootOfUnity> acc;
      for (const auto& op : node_->operands)
        for (const auto& z : op.enumerate()) acc.insert(z);
      out.assign(acc.begin(), acc.end());
      break;
    }
    case Kind::InternalProduct: {
      std::set<RootOfUnity> acc{RootOfUnity{}};
      for (const auto& op : node_->operands) {
        auto elems = op.enumerate();
        std::set<RootOfUnity> next;
        for (const auto& a : acc)
          for (const auto& b : elems) next.insert(multiply(a, b));
        acc = std::move(next);
      }
      out.assign(acc.begin(), acc.end());
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 MuSubset::cardinality() const {
  switch (node_->kind) {
    case Kind::Empty:
      return 0;
    case Kind::Mu:
      return node_->param;
    case Kind::PrimSet:
      return euler_phi(node_->param);
    case Kind::InternalProduct: {
      std::vector<u64> sup;
      if (pairwise_coprime_supports(node_->operands, sup)) {
        u64 total = 1;
        for (const auto& op : node_->operands) total *= op.cardinality();
        return total;
      }
      break;
    }
    default:
      break;
  }
  return enumerate().size();
}

std::string MuSubset::to_string() const {
  auto wrap = [](const MuSubset& s) {
    auto k = s.kind();
    std::string body = s.to_string();
    bool atomic = k == Kind::Mu || k == Kind::PrimSet || k == Kind::Empty || k == Kind::All;
    return atomic ? body : "(" + body + ")";
  };
  auto join = [&](const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < node_->operands.size(); ++i) {
      if (i) out += sep;
      out += wrap(node_->operands[i]);
    }
    return out;
  };
  switch (node_->kind) {
    case Kind::Empty:
      return "{}";
    case Kind::All:
      return "mu(inf)";
    case Kind::Mu:
      return "mu(" + std::to_string(node_->param) + ")";
    case Kind::PrimSet:
      return "P(" + std::to_string(node_->param) + ")";
    case Kind::InternalProduct:
      return join(" . ");
    case Kind::Difference:
      return join(" - ");
    case Kind::Union:
      return join(" u ");
  }
  return {};
}

}  // namespace cyclokit
