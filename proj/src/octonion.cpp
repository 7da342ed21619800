#include "octo/octonion.hpp"

#include <algorithm>
#include <set>

namespace octo {
namespace {

bool is_imaginary(int slot) { return slot >= 1 && slot < kBasisSize; }

std::string triple_str(const char* open, int a, int b, int c, const char* close) {
  return std::string(open) + "e" + std::to_string(a) + ",e" + std::to_string(b) + ",e" +
         std::to_string(c) + close;
}

}  // namespace

std::string basis_name(int slot) {
  if (slot == kUnitSlot) return "1";
  return "e" + std::to_string(slot - 1);
}

std::string to_string(const SignedBasis& b) {
  return (b.sign < 0 ? "-" : "") + basis_name(b.slot);
}

StructureConstants StructureConstants::from_table(const Table& table) {
  for (int s = 0; s < kBasisSize; ++s) {
    if (table[kUnitSlot][s] != SignedBasis{1, s} || table[s][kUnitSlot] != SignedBasis{1, s})
      throw InputError("unit is not neutral for " + basis_name(s));
  }
  std::vector<Line> lines;
  for (int a = 1; a < kBasisSize; ++a) {
    if (table[a][a] != SignedBasis{-1, kUnitSlot})
      throw InputError(basis_name(a) + " does not square to -1");
    for (int b = 1; b < kBasisSize; ++b) {
      if (a == b) continue;
      const auto p = table[a][b];
      if (!is_imaginary(p.slot) || p.slot == a || p.slot == b || std::abs(p.sign) != 1)
        throw InputError("product " + basis_name(a) + basis_name(b) + " is not a third imaginary unit");
      if (table[b][a] != SignedBasis{-p.sign, p.slot})
        throw InputError(basis_name(a) + " and " + basis_name(b) + " do not anticommute");
      if (a < b) {
        Line l = sorted_line({a - 1, b - 1, p.slot - 1});
        if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
      }
    }
  }
  if (lines.size() != kPointCount) throw InputError("product triples do not form 7 lines");
  if (!verify_projective_plane(lines).passed())
    throw InputError("product triples do not form a projective plane");
  StructureConstants sc;
  sc.table_ = table;
  return sc;
}

namespace {

StructureConstants::Table identity_and_squares() {
  StructureConstants::Table t{};
  for (int s = 0; s < kBasisSize; ++s) {
    t[kUnitSlot][s] = {1, s};
    t[s][kUnitSlot] = {1, s};
  }
  for (int s = 1; s < kBasisSize; ++s) t[s][s] = {-1, kUnitSlot};
  return t;
}

void set_cyclic(StructureConstants::Table& t, int a, int b, int c) {
  const int sa = imaginary_slot(a), sb = imaginary_slot(b), sc = imaginary_slot(c);
  t[sa][sb] = {1, sc};
  t[sb][sa] = {-1, sc};
  t[sb][sc] = {1, sa};
  t[sc][sb] = {-1, sa};
  t[sc][sa] = {1, sb};
  t[sa][sc] = {-1, sb};
}

}  // namespace

StructureConstants StructureConstants::from_fano(const OrientedFanoPlane& plane) {
  auto t = identity_and_squares();
  for (const auto& l : plane.lines()) set_cyclic(t, l[0], l[1], l[2]);
  return from_table(t);
}

StructureConstants StructureConstants::from_index_rules() {
  auto t = identity_and_squares();
  for (int n = 0; n < kPointCount; ++n) {
    const int i1 = (n + 1) % 7, i2 = (n + 2) % 7, i4 = (n + 4) % 7;
    const int s1 = imaginary_slot(i1), s2 = imaginary_slot(i2), s4 = imaginary_slot(i4);
    // e_{n+1} e_{n+2} = e_{n+4} = -e_{n+2} e_{n+1}
    t[s1][s2] = {1, s4};
    t[s2][s1] = {-1, s4};
    // e_{n+2} e_{n+4} = e_{n+1} = -e_{n+4} e_{n+2}
    t[s2][s4] = {1, s1};
    t[s4][s2] = {-1, s1};
    // e_{n+4} e_{n+1} = e_{n+2} = -e_{n+1} e_{n+4}
    t[s4][s1] = {1, s2};
    t[s1][s4] = {-1, s2};
  }
  return from_table(t);
}

FanoPlane StructureConstants::plane() const {
  std::vector<Line> lines;
  for (int a = 1; a < kBasisSize; ++a)
    for (int b = a + 1; b < kBasisSize; ++b) {
      Line l = sorted_line({a - 1, b - 1, table_[a][b].slot - 1});
      if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
  return FanoPlane::from_lines(lines);
}

StructureConstants structure_constants(const OrientedFanoPlane& plane) {
  return StructureConstants::from_fano(plane);
}

Octonion Octonion::basis(int slot, int sign) {
  Octonion x;
  x.coeffs_.at(static_cast<std::size_t>(slot)) = sign;
  return x;
}

bool Octonion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int i = 0; i < kBasisSize; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int i = 0; i < kBasisSize; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string to_string(const Octonion& x) {
  std::string out;
  for (int s = 0; s < kBasisSize; ++s) {
    const Rational& c = x[s];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (s == kUnitSlot)
      out += mag.str();
    else if (mag == 1)
      out += basis_name(s);
    else
      out += mag.str() + "*" + basis_name(s);
  }
  return out.empty() ? "0" : out;
}

Octonion multiply(const Octonion& x, const Octonion& y, const StructureConstants& sc) {
  Octonion out;
  for (int i = 0; i < kBasisSize; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < kBasisSize; ++j) {
      if (y[j] == 0) continue;
      const auto p = sc.product(i, j);
      if (p.sign > 0)
        out[p.slot] += x[i] * y[j];
      else
        out[p.slot] -= x[i] * y[j];
    }
  }
  return out;
}

Octonion conjugate(const Octonion& x) {
  Octonion out = -x;
  out[kUnitSlot] = x[kUnitSlot];
  return out;
}

Rational norm(const Octonion& x) {
  Rational n = 0;
  for (const auto& c : x.coeffs()) n += c * c;
  return n;
}

Octonion inverse(const Octonion& x) {
  const Rational n = norm(x);
  if (n == 0) throw DivisionByZeroOctonion();
  return conjugate(x) * Rational(1 / n);
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z,
                    const StructureConstants& sc) {
  return multiply(multiply(x, y, sc), z, sc) - multiply(x, multiply(y, z, sc), sc);
}

Octonion OctonionSampler::next() {
  std::array<Rational, kBasisSize> c;
  for (auto& v : c) {
    const auto num = static_cast<long long>(rng_() % 19) - 9;
    const auto den = static_cast<long long>(rng_() % 3) + 1;
    v = Rational(num, den);
  }
  return Octonion(c);
}

Octonion OctonionSampler::next_nonzero() {
  for (;;) {
    auto x = next();
    if (!x.is_zero()) return x;
  }
}

CheckResult verify_alternative(const StructureConstants& sc) {
  CheckResult r{"associator skew-symmetry"};
  for (int a = 0; a < kPointCount; ++a)
    for (int b = 0; b < kPointCount; ++b)
      for (int c = 0; c < kPointCount; ++c) {
        ++r.checked;
        const auto ea = Octonion::imaginary(a), eb = Octonion::imaginary(b),
                   ec = Octonion::imaginary(c);
        const auto abc = associator(ea, eb, ec, sc);
        const std::array<std::pair<Octonion, std::array<int, 3>>, 3> swapped{{
            {associator(eb, ea, ec, sc), {b, a, c}},
            {associator(ea, ec, eb, sc), {a, c, b}},
            {associator(ec, eb, ea, sc), {c, b, a}},
        }};
        for (const auto& [other, idx] : swapped) {
          if (other == -abc) continue;
          r.fail(triple_str("{", a, b, c, "}") + " = " + to_string(abc) + " but " +
                 triple_str("{", idx[0], idx[1], idx[2], "}") + " = " + to_string(other));
          break;
        }
      }
  return r;
}

CheckReport verify_norm_multiplicative(const StructureConstants& sc, std::size_t trials,
                                       std::uint64_t seed) {
  CheckReport report;
  CheckResult basis{"norm multiplicative on basis pairs"};
  for (int i = 0; i < kBasisSize; ++i)
    for (int j = 0; j < kBasisSize; ++j) {
      ++basis.checked;
      const auto x = Octonion::basis(i), y = Octonion::basis(j);
      if (norm(multiply(x, y, sc)) != norm(x) * norm(y))
        basis.fail("x = " + basis_name(i) + ", y = " + basis_name(j));
    }

  CheckResult sampled{"norm multiplicative on sampled pairs"};
  OctonionSampler sampler(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ++sampled.checked;
    const auto x = sampler.next();
    const auto y = sampler.next();
    const auto lhs = norm(multiply(x, y, sc));
    const auto rhs = norm(x) * norm(y);
    if (lhs != rhs)
      sampled.fail("x = " + to_string(x) + ", y = " + to_string(y) + ": N(xy) = " + lhs.str() +
                   ", N(x)N(y) = " + rhs.str());
  }
  report.checks = {std::move(basis), std::move(sampled)};
  return report;
}

CheckReport verify_quaternion_subalgebras(const StructureConstants& sc, const FanoPlane& plane) {
  CheckReport report;
  for (const auto& line : plane.lines()) {
    const auto p = sc.product(imaginary_slot(line[0]), imaginary_slot(line[1]));
    if (p.slot != imaginary_slot(line[2]))
      throw InputError("plane line does not match the table's product structure");
    const Line cyc = p.sign > 0 ? line : Line{line[0], line[2], line[1]};

    CheckResult r{"quaternion line " + triple_str("(", cyc[0], cyc[1], cyc[2], ")")};
    const std::array<int, 4> slots{kUnitSlot, imaginary_slot(line[0]), imaginary_slot(line[1]),
                                   imaginary_slot(line[2])};
    for (int x : slots)
      for (int y : slots) {
        ++r.checked;
        const int s = sc.product(x, y).slot;
        if (std::find(slots.begin(), slots.end(), s) == slots.end())
          r.fail("span not closed: " + basis_name(x) + basis_name(y) + " = " +
                 to_string(sc.product(x, y)));
      }
    for (int a : line)
      for (int b : line)
        for (int c : line) {
          ++r.checked;
          const auto as = associator(Octonion::imaginary(a), Octonion::imaginary(b),
                                     Octonion::imaginary(c), sc);
          if (!as.is_zero())
            r.fail(triple_str("associator {", a, b, c, "} = ") + to_string(as));
        }
    for (int k = 0; k < 3; ++k) {
      const int i = imaginary_slot(cyc[k]);
      const int j = imaginary_slot(cyc[(k + 1) % 3]);
      const int l = imaginary_slot(cyc[(k + 2) % 3]);
      r.checked += 2;
      if (sc.product(i, j) != SignedBasis{1, l})
        r.fail(basis_name(i) + basis_name(j) + " = " + to_string(sc.product(i, j)) + ", expected " +
               basis_name(l));
      if (sc.product(j, i) != SignedBasis{-1, l})
        r.fail(basis_name(j) + basis_name(i) + " = " + to_string(sc.product(j, i)) +
               ", expected -" + basis_name(l));
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

CheckResult verify_inverses(const StructureConstants& sc, std::size_t samples, std::uint64_t seed) {
  CheckResult r{"inverse round trip"};
  OctonionSampler sampler(seed);
  const auto one = Octonion::unit();
  for (std::size_t t = 0; t < samples; ++t) {
    ++r.checked;
    const auto x = sampler.next_nonzero();
    const auto xi = inverse(x);
    if (multiply(x, xi, sc) != one || multiply(xi, x, sc) != one) r.fail("x = " + to_string(x));
  }
  return r;
}

CheckResult verify_flexible(const StructureConstants& sc, std::size_t samples, std::uint64_t seed) {
  CheckResult r{"flexibility"};
  OctonionSampler sampler(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    ++r.checked;
    const auto x = sampler.next();
    const auto y = sampler.next();
    if (multiply(multiply(x, y, sc), x, sc) != multiply(x, multiply(y, x, sc), sc))
      r.fail("x = " + to_string(x) + ", y = " + to_string(y));
  }
  return r;
}

SignedBasis SignedPermutation::apply(const SignedBasis& b) const {
  if (b.slot == kUnitSlot) return b;
  const int a = b.slot - 1;
  return {b.sign * signs[a], imaginary_slot(perm[a])};
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation inv;
  for (int a = 0; a < kPointCount; ++a) {
    inv.perm[perm[a]] = a;
    inv.signs[perm[a]] = signs[a];
  }
  return inv;
}

bool is_table_isomorphism(const SignedPermutation& map, const StructureConstants& sc1,
                          const StructureConstants& sc2) {
  for (int a = 1; a < kBasisSize; ++a)
    for (int b = 1; b < kBasisSize; ++b) {
      const auto ia = map.apply({1, a});
      const auto ib = map.apply({1, b});
      auto lhs = sc2.product(ia.slot, ib.slot);
      lhs.sign *= ia.sign * ib.sign;
      if (lhs != map.apply(sc1.product(a, b))) return false;
    }
  return true;
}

std::optional<SignedPermutation> tables_isomorphic(const StructureConstants& sc1,
                                                   const StructureConstants& sc2) {
  SignedPermutation map;
  for (int a = 0; a < kPointCount; ++a) map.perm[a] = a;
  do {
    for (unsigned mask = 0; mask < (1u << kPointCount); ++mask) {
      for (int a = 0; a < kPointCount; ++a) map.signs[a] = (mask >> a) & 1u ? -1 : 1;
      if (is_table_isomorphism(map, sc1, sc2)) return map;
    }
  } while (std::next_permutation(map.perm.begin(), map.perm.end()));
  return std::nullopt;
}

}  // namespace octo
