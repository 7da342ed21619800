#include "octo/fano.hpp"

#include <algorithm>
#include <sstream>

namespace octo {
namespace {

std::string line_str(const Line& l) {
  std::ostringstream os;
  os << '{' << l[0] << ',' << l[1] << ',' << l[2] << '}';
  return os.str();
}

void require_point(int p) {
  if (p < 0 || p >= kPointCount)
    throw InputError("point label out of range: " + std::to_string(p));
}

bool has_point(const Line& l, int p) { return l[0] == p || l[1] == p || l[2] == p; }

}  // namespace

Line canonical_cycle(const Line& t) {
  const auto it = std::min_element(t.begin(), t.end());
  const auto k = static_cast<std::size_t>(it - t.begin());
  return {t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
}

Line sorted_line(Line t) {
  std::sort(t.begin(), t.end());
  return t;
}

CheckReport verify_projective_plane(std::span<const Line> lines) {
  if (lines.size() != kPointCount)
    throw InputError("expected 7 lines, got " + std::to_string(lines.size()));
  std::vector<Line> sets;
  sets.reserve(lines.size());
  for (const auto& l : lines) {
    for (int p : l) require_point(p);
    if (l[0] == l[1] || l[1] == l[2] || l[0] == l[2])
      throw InputError("line repeats a point: " + line_str(l));
    sets.push_back(sorted_line(l));
  }

  CheckReport report;

  CheckResult distinct{"7 distinct lines"};
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ++distinct.checked;
      if (sets[i] == sets[j])
        distinct.fail("lines " + std::to_string(i) + " and " + std::to_string(j) + " are both " +
                      line_str(sets[i]));
    }

  CheckResult pairs{"pair coverage"};
  for (int a = 0; a < kPointCount; ++a)
    for (int b = a + 1; b < kPointCount; ++b) {
      ++pairs.checked;
      const auto n = std::count_if(sets.begin(), sets.end(),
                                   [&](const Line& l) { return has_point(l, a) && has_point(l, b); });
      if (n != 1)
        pairs.fail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} lies on " +
                   std::to_string(n) + " lines");
    }

  CheckResult meets{"line intersection"};
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ++meets.checked;
      const auto common = std::count_if(sets[i].begin(), sets[i].end(),
                                        [&](int p) { return has_point(sets[j], p); });
      if (common != 1)
        meets.fail(line_str(sets[i]) + " and " + line_str(sets[j]) + " share " +
                   std::to_string(common) + " points");
    }

  CheckResult degree{"3 lines per point"};
  for (int p = 0; p < kPointCount; ++p) {
    ++degree.checked;
    const auto n =
        std::count_if(sets.begin(), sets.end(), [&](const Line& l) { return has_point(l, p); });
    if (n != 3)
      degree.fail("point " + std::to_string(p) + " lies on " + std::to_string(n) + " lines");
  }

  report.checks = {std::move(distinct), std::move(pairs), std::move(meets), std::move(degree)};
  return report;
}

FanoPlane FanoPlane::from_lines(std::span<const Line> lines) {
  const auto report = verify_projective_plane(lines);
  if (!report.passed()) throw InputError("lines do not form a projective plane");
  FanoPlane plane;
  for (std::size_t i = 0; i < lines.size(); ++i) plane.lines_[i] = sorted_line(lines[i]);
  std::sort(plane.lines_.begin(), plane.lines_.end());
  return plane;
}

bool FanoPlane::contains_line(Line l) const {
  return std::binary_search(lines_.begin(), lines_.end(), sorted_line(l));
}

int FanoPlane::third_point(int a, int b) const {
  require_point(a);
  require_point(b);
  if (a == b) throw InputError("third_point needs distinct points");
  for (const auto& l : lines_)
    if (has_point(l, a) && has_point(l, b))
      for (int p : l)
        if (p != a && p != b) return p;
  throw InputError("no line through the given points");  // unreachable for a valid plane
}

OrientedFanoPlane OrientedFanoPlane::from_cyclic_lines(std::span<const Line> lines) {
  if (lines.size() != kPointCount)
    throw InputError("expected 7 lines, got " + std::to_string(lines.size()));
  // Validates ranges, repeated points and the plane axioms.
  FanoPlane::from_lines(lines);
  OrientedFanoPlane plane;
  for (std::size_t i = 0; i < lines.size(); ++i) plane.lines_[i] = canonical_cycle(lines[i]);
  std::sort(plane.lines_.begin(), plane.lines_.end());
  return plane;
}

OrientedFanoPlane OrientedFanoPlane::with_line_reversed(std::size_t index) const {
  if (index >= lines_.size()) throw InputError("line index out of range");
  auto lines = lines_;
  std::swap(lines[index][1], lines[index][2]);
  return from_cyclic_lines(lines);
}

OrientedFanoPlane OrientedFanoPlane::reversed() const {
  auto lines = lines_;
  for (auto& l : lines) std::swap(l[1], l[2]);
  return from_cyclic_lines(lines);
}

OrientedFanoPlane standard_fano() {
  std::array<Line, kPointCount> lines{};
  for (int n = 0; n < kPointCount; ++n)
    lines[n] = {(n + 1) % 7, (n + 2) % 7, (n + 4) % 7};
  return OrientedFanoPlane::from_cyclic_lines(lines);
}

std::array<Line, 3> lines_through(const FanoPlane& plane, int p) {
  require_point(p);
  std::array<Line, 3> out{};
  std::size_t k = 0;
  for (const auto& l : plane.lines())
    if (has_point(l, p)) out.at(k++) = l;
  return out;
}

FanoPlane underlying(const OrientedFanoPlane& op) { return FanoPlane::from_lines(op.lines()); }

FanoPlane relabel(const FanoPlane& plane, const PointPermutation& perm) {
  auto lines = plane.lines();
  for (auto& l : lines)
    for (auto& p : l) p = perm[p];
  return FanoPlane::from_lines(lines);
}

OrientedFanoPlane relabel(const OrientedFanoPlane& plane, const PointPermutation& perm) {
  auto lines = plane.lines();
  for (auto& l : lines)
    for (auto& p : l) p = perm[p];
  return OrientedFanoPlane::from_cyclic_lines(lines);
}

PointPermutation inverse_permutation(const PointPermutation& perm) {
  PointPermutation inv{};
  for (int i = 0; i < kPointCount; ++i) inv[perm[i]] = i;
  return inv;
}

namespace {

// Depth-first assignment of images for points 0..6 in order. A line of p1 is
// tested as soon as its largest point (lines are sorted) has been assigned.
bool extend(const FanoPlane& p1, const FanoPlane& p2, PointPermutation& perm,
            std::array<bool, kPointCount>& used, int next) {
  if (next == kPointCount) return true;
  for (int img = 0; img < kPointCount; ++img) {
    if (used[img]) continue;
    perm[next] = img;
    bool ok = true;
    for (const auto& l : p1.lines())
      if (l[2] == next && !p2.contains_line({perm[l[0]], perm[l[1]], perm[l[2]]})) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[img] = true;
    if (extend(p1, p2, perm, used, next + 1)) return true;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<PointPermutation> planes_isomorphic(const FanoPlane& p1, const FanoPlane& p2) {
  PointPermutation perm{};
  std::array<bool, kPointCount> used{};
  if (extend(p1, p2, perm, used, 0)) return perm;
  return std::nullopt;
}

std::string to_text(const FanoPlane& plane) {
  std::ostringstream os;
  for (const auto& l : plane.lines()) os << l[0] << ' ' << l[1] << ' ' << l[2] << '\n';
  return os.str();
}

std::string to_text(const OrientedFanoPlane& plane) {
  std::ostringstream os;
  for (const auto& l : plane.lines()) os << "cyclic: " << l[0] << ' ' << l[1] << ' ' << l[2] << '\n';
  return os.str();
}

}  // namespace octo
