#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octo/tournament.hpp"

namespace octo {

/// a + b*omega with omega = (-1 + sqrt(-3)) / 2, so omega^2 = -1 - omega.
/// Components are 64-bit; callers keep magnitudes well inside that range.
struct EisensteinInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr EisensteinInt omega() { return {0, 1}; }
  static constexpr EisensteinInt omega_squared() { return {-1, -1}; }

  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

EisensteinInt eis_add(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt eis_sub(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt eis_neg(const EisensteinInt& x);
/// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y);
/// Complex conjugate: a + b w^2 = (a - b) - b w.
EisensteinInt eis_conj(const EisensteinInt& x);
/// |x|^2 = a^2 - ab + b^2.
std::int64_t eis_norm(const EisensteinInt& x);
/// x / d when d divides x in Z[w], else nullopt. d must be nonzero.
std::optional<EisensteinInt> eis_divide(const EisensteinInt& x, const EisensteinInt& d);

/// Generators of the index-7 ideal and of its mirror image.
inline constexpr EisensteinInt kLambdaGen{2, -1};        // 2 - w
inline constexpr EisensteinInt kMirrorLambdaGen{3, 1};   // 2 - w^2 = 3 + w

/// Integer modulo 7.
class Residue {
 public:
  constexpr Residue() = default;
  explicit constexpr Residue(std::int64_t v) : value_(static_cast<int>(((v % 7) + 7) % 7)) {}

  [[nodiscard]] constexpr int value() const { return value_; }

  friend constexpr Residue operator+(Residue x, Residue y) { return Residue(x.value_ + y.value_); }
  friend constexpr Residue operator-(Residue x, Residue y) { return Residue(x.value_ - y.value_); }
  friend constexpr Residue operator*(Residue x, Residue y) { return Residue(x.value_ * y.value_); }
  friend constexpr bool operator==(Residue, Residue) = default;

 private:
  int value_ = 0;
};

/// Which quotient of Z[w] to use. Standard sends w to 2 with kernel
/// (2 - w); Mirror sends w to 4 with kernel (2 - w^2).
enum class Chirality { Standard, Mirror };

/// Ring homomorphism Z[w] -> Z/7: a + b w -> a + 2b (or a + 4b for Mirror).
Residue reduce(const EisensteinInt& x, Chirality chirality = Chirality::Standard);

struct Representative {
  EisensteinInt value;
  Residue residue;
  std::string label;  // "0", "1", "-1", "ω", "-ω", "ω²", "-ω²"
};

/// 0, +-1, +-w, +-w^2 with their residues, in that order.
std::vector<Representative> residue_representatives(Chirality chirality = Chirality::Standard);

/// True iff r is a nonzero square mod 7, i.e. r in {1, 2, 4}.
bool is_square_residue(Residue r);

/// Edge rule a -> b: b - a a nonzero square (Standard) or a non-square
/// (Mirror, the set {3, 5, 6}).
bool edge_points_forward(Residue from, Residue to, Chirality chirality = Chirality::Standard);

/// K7 on Z/7 with a -> b iff b - a is in {1, 2, 4}; the Mirror rule uses
/// {3, 5, 6}, which is the reverse tournament.
Tournament paley_tournament(Chirality chirality = Chirality::Standard);

}  // namespace octo
