#include "octo/eisenstein.hpp"

namespace octo {

EisensteinInt eis_add(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a + y.a, x.b + y.b};
}

EisensteinInt eis_sub(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a - y.a, x.b - y.b};
}

EisensteinInt eis_neg(const EisensteinInt& x) { return {-x.a, -x.b}; }

EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

EisensteinInt eis_conj(const EisensteinInt& x) { return {x.a - x.b, -x.b}; }

std::int64_t eis_norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

std::optional<EisensteinInt> eis_divide(const EisensteinInt& x, const EisensteinInt& d) {
  const auto n = eis_norm(d);
  if (n == 0) throw InputError("division by zero in Z[w]");
  const auto num = eis_mul(x, eis_conj(d));
  if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
  return EisensteinInt{num.a / n, num.b / n};
}

Residue reduce(const EisensteinInt& x, Chirality chirality) {
  const std::int64_t image_of_omega = chirality == Chirality::Standard ? 2 : 4;
  return Residue(x.a % 7) + Residue(image_of_omega) * Residue(x.b % 7);
}

std::vector<Representative> residue_representatives(Chirality chirality) {
  const EisensteinInt one{1, 0};
  const auto w = EisensteinInt::omega();
  const auto w2 = EisensteinInt::omega_squared();
  const std::vector<std::pair<EisensteinInt, std::string>> values{
      {{0, 0}, "0"}, {one, "1"},          {eis_neg(one), "-1"}, {w, "ω"},
      {eis_neg(w), "-ω"}, {w2, "ω²"}, {eis_neg(w2), "-ω²"}};
  std::vector<Representative> out;
  for (const auto& [v, label] : values) out.push_back({v, reduce(v, chirality), label});
  return out;
}

bool is_square_residue(Residue r) {
  const int v = r.value();
  return v == 1 || v == 2 || v == 4;
}

bool edge_points_forward(Residue from, Residue to, Chirality chirality) {
  const Residue diff = to - from;
  if (diff.value() == 0) return false;
  return chirality == Chirality::Standard ? is_square_residue(diff) : !is_square_residue(diff);
}

Tournament paley_tournament(Chirality chirality) {
  std::uint32_t mask = 0;
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j)
      if (edge_points_forward(Residue(i), Residue(j), chirality)) mask |= 1u << edge_index(i, j);
  return Tournament(mask);
}

}  // namespace octo
