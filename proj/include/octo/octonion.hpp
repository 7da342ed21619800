#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "octo/check_report.hpp"
#include "octo/fano.hpp"
#include "octo/rational.hpp"

namespace octo {

/// Basis slots: 0 is the unit, slot a+1 holds the imaginary unit e_a.
inline constexpr int kBasisSize = 8;
inline constexpr int kUnitSlot = 0;
constexpr int imaginary_slot(int a) { return a + 1; }

/// A basis element with a sign, e.g. -e3 is {-1, imaginary_slot(3)}.
struct SignedBasis {
  int sign = 1;
  int slot = kUnitSlot;

  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

/// Name of a basis slot: "1", "e0", ..., "e6".
std::string basis_name(int slot);
/// "1", "-1", "e4", "-e4", ...
std::string to_string(const SignedBasis& b);

/// Product table of the eight basis elements.
class StructureConstants {
 public:
  using Table = std::array<std::array<SignedBasis, kBasisSize>, kBasisSize>;

  /// Cyclic line (a,b,c) gives e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b and
  /// the negated reverses; e_a^2 = -1; the unit is neutral.
  static StructureConstants from_fano(const OrientedFanoPlane& plane);

  /// e_{n+1} e_{n+2} = e_{n+4} and its cyclic companions, written out
  /// directly from index arithmetic mod 7.
  static StructureConstants from_index_rules();

  /// Accepts a raw table. Throws InputError unless the unit is neutral,
  /// imaginary squares are -1, distinct imaginary units anticommute with an
  /// imaginary product, and the product triples form a Fano plane.
  static StructureConstants from_table(const Table& table);

  [[nodiscard]] SignedBasis product(int left_slot, int right_slot) const {
    return table_[left_slot][right_slot];
  }
  [[nodiscard]] const Table& table() const { return table_; }

  /// Lines {a,b,c} read off the products e_a e_b = ±e_c.
  [[nodiscard]] FanoPlane plane() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  StructureConstants() = default;
  Table table_{};
};

StructureConstants structure_constants(const OrientedFanoPlane& plane);

/// Element of the eight-dimensional algebra with exact rational coefficients.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(const std::array<Rational, kBasisSize>& coeffs) : coeffs_(coeffs) {}

  static Octonion unit() { return basis(kUnitSlot); }
  static Octonion basis(int slot, int sign = 1);
  /// e_a for a in {0..6}.
  static Octonion imaginary(int a, int sign = 1) { return basis(imaginary_slot(a), sign); }

  [[nodiscard]] const Rational& operator[](int slot) const { return coeffs_[slot]; }
  Rational& operator[](int slot) { return coeffs_[slot]; }
  [[nodiscard]] const std::array<Rational, kBasisSize>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= Rational(-1); }
  friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<Rational, kBasisSize> coeffs_{};
};

/// Human-readable sum, e.g. "1 - 2*e4 + 1/3*e0"; "0" for zero.
std::string to_string(const Octonion& x);

class DivisionByZeroOctonion : public std::domain_error {
 public:
  DivisionByZeroOctonion() : std::domain_error("inverse of the zero octonion") {}
};

Octonion multiply(const Octonion& x, const Octonion& y, const StructureConstants& sc);
Octonion conjugate(const Octonion& x);
/// Sum of squared coefficients.
Rational norm(const Octonion& x);
/// conjugate(x) / norm(x). Throws DivisionByZeroOctonion for zero.
Octonion inverse(const Octonion& x);
/// (xy)z - x(yz)
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z,
                    const StructureConstants& sc);

/// Deterministic source of small exact octonions: numerators in [-9, 9],
/// denominators in {1, 2, 3}.
class OctonionSampler {
 public:
  explicit OctonionSampler(std::uint64_t seed) : rng_(seed) {}
  Octonion next();
  Octonion next_nonzero();

 private:
  std::mt19937_64 rng_;
};

/// Associator skew-symmetry under the three transpositions for all 343
/// ordered triples of imaginary basis elements.
CheckResult verify_alternative(const StructureConstants& sc);

/// N(xy) = N(x)N(y) on all 64 basis pairs and on `trials` sampled pairs.
CheckReport verify_norm_multiplicative(const StructureConstants& sc, std::size_t trials,
                                       std::uint64_t seed);

/// One check per line {a,b,c} of `plane`: span{1,e_a,e_b,e_c} closed,
/// associator zero on its imaginary units, and the i,j,k relations for the
/// cyclic order found in the table. Throws InputError if the plane's lines
/// are not product triples of `sc`.
CheckReport verify_quaternion_subalgebras(const StructureConstants& sc, const FanoPlane& plane);

/// x * inverse(x) = inverse(x) * x = 1 on `samples` sampled nonzero x.
CheckResult verify_inverses(const StructureConstants& sc, std::size_t samples, std::uint64_t seed);

/// (xy)x = x(yx) on `samples` sampled pairs.
CheckResult verify_flexible(const StructureConstants& sc, std::size_t samples, std::uint64_t seed);

/// Linear map 1 -> 1, e_a -> signs[a] * e_{perm[a]}.
struct SignedPermutation {
  PointPermutation perm{};
  std::array<int, kPointCount> signs{};

  [[nodiscard]] SignedBasis apply(const SignedBasis& b) const;
  [[nodiscard]] SignedPermutation inverse() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Whether `map` carries products of sc1 onto products of sc2.
bool is_table_isomorphism(const SignedPermutation& map, const StructureConstants& sc1,
                          const StructureConstants& sc2);

/// First signed permutation (permutations lexicographic, then sign masks
/// ascending) that is an isomorphism sc1 -> sc2.
std::optional<SignedPermutation> tables_isomorphic(const StructureConstants& sc1,
                                                   const StructureConstants& sc2);

}  // namespace octo
