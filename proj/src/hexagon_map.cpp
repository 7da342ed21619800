#include "octo/hexagon_map.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace octo {

double ExactPoint::y_value() const { return y_sqrt3.convert_to<double>() * std::sqrt(3.0); }

ExactPoint embed(const EisensteinInt& z) {
  // a + b w = (a - b/2) + (b/2) sqrt(3) i
  return {Rational(z.a) - Rational(z.b, 2), Rational(z.b, 2)};
}

std::array<EisensteinInt, 3> HexCorner::surrounding_cells() const {
  const EisensteinInt one{1, 0};
  const EisensteinInt one_plus_w{1, 1};
  if (up) return {base, eis_add(base, one), eis_add(base, one_plus_w)};
  return {base, eis_add(base, one_plus_w), eis_add(base, EisensteinInt::omega())};
}

ExactPoint HexCorner::position() const {
  ExactPoint p{0, 0};
  for (const auto& z : surrounding_cells()) {
    const auto q = embed(z);
    p.x += q.x;
    p.y_sqrt3 += q.y_sqrt3;
  }
  p.x /= 3;
  p.y_sqrt3 /= 3;
  return p;
}

std::array<HexCorner, 6> cell_corners(const EisensteinInt& c) {
  const EisensteinInt one{1, 0};
  const auto w = EisensteinInt::omega();
  const auto c1 = eis_sub(c, one);
  const auto c1w = eis_sub(c1, w);
  // Offsets (1/2, 1/6), (0, 1/3), (-1/2, 1/6), (-1/2, -1/6), (0, -1/3), (1/2, -1/6)
  // in (x, y/sqrt3) units.
  return {HexCorner{c, true},    HexCorner{c, false},   HexCorner{c1, true},
          HexCorner{c1w, false}, HexCorner{c1w, true}, HexCorner{eis_sub(c, w), false}};
}

bool corner_is_circled(const std::array<Residue, 3>& r, Chirality chirality) {
  return edge_points_forward(r[0], r[1], chirality) && edge_points_forward(r[1], r[2], chirality) &&
         edge_points_forward(r[2], r[0], chirality);
}

int HexagonMap::corner_class_count() const {
  std::set<int> classes;
  for (const auto& c : corners) classes.insert(c.corner_class);
  return static_cast<int>(classes.size());
}

namespace {

struct EdgeKey {
  std::size_t from;
  std::size_t to;
};

}  // namespace

HexagonMap hexagon_map_geometry(Chirality chirality) {
  HexagonMap map;
  map.chirality = chirality;
  map.lattice_generator = chirality == Chirality::Standard ? kLambdaGen : kMirrorLambdaGen;
  {
    const auto g = map.lattice_generator;
    const auto wg = eis_mul(EisensteinInt::omega(), g);
    const auto w2g = eis_mul(EisensteinInt::omega_squared(), g);
    map.neighbor_translates = {g, wg, w2g, eis_neg(g), eis_neg(wg), eis_neg(w2g)};
  }

  for (const auto& rep : residue_representatives(chirality))
    map.cells.push_back({rep, embed(rep.value), cell_corners(rep.value)});

  // Distinct corners, with a per-cell index list for the outline.
  std::vector<std::array<std::size_t, 6>> cell_corner_ids;
  for (const auto& cell : map.cells) {
    std::array<std::size_t, 6> ids{};
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& hc = cell.corners[k];
      auto it = std::find_if(map.corners.begin(), map.corners.end(),
                             [&](const MapCorner& m) { return m.corner == hc; });
      if (it == map.corners.end()) {
        MapCorner m;
        m.corner = hc;
        const auto around = hc.surrounding_cells();
        for (std::size_t i = 0; i < 3; ++i) m.residues[i] = reduce(around[i], chirality);
        m.corner_class = 2 * reduce(hc.base, chirality).value() + (hc.up ? 0 : 1);
        m.circled = corner_is_circled(m.residues, chirality);
        map.corners.push_back(m);
        it = std::prev(map.corners.end());
      }
      ++it->shaded_cells;
      ids[k] = static_cast<std::size_t>(it - map.corners.begin());
    }
    cell_corner_ids.push_back(ids);
  }

  // Boundary edges belong to exactly one shaded cell.
  std::vector<EdgeKey> edges;
  for (const auto& ids : cell_corner_ids)
    for (std::size_t k = 0; k < 6; ++k) edges.push_back({ids[k], ids[(k + 1) % 6]});
  std::vector<EdgeKey> boundary;
  for (const auto& e : edges) {
    const bool shared = std::any_of(edges.begin(), edges.end(), [&](const EdgeKey& f) {
      return f.from == e.to && f.to == e.from;
    });
    if (!shared) boundary.push_back(e);
  }
  // Chain the counterclockwise boundary edges into one polygon.
  if (!boundary.empty()) {
    std::size_t at = boundary.front().from;
    const std::size_t start = at;
    do {
      map.outline.push_back(map.corners[at].corner.position());
      const auto next = std::find_if(boundary.begin(), boundary.end(),
                                     [&](const EdgeKey& e) { return e.from == at; });
      at = next->to;
    } while (at != start && map.outline.size() <= boundary.size());
  }

  // One marker per circled class: the representative touching the most
  // shaded cells, first seen on ties.
  std::vector<int> seen;
  for (const auto& m : map.corners) {
    if (!m.circled || std::find(seen.begin(), seen.end(), m.corner_class) != seen.end()) continue;
    seen.push_back(m.corner_class);
    const MapCorner* best = &m;
    for (const auto& other : map.corners)
      if (other.corner_class == m.corner_class && other.shaded_cells > best->shaded_cells)
        best = &other;
    map.circled.push_back(*best);
  }
  return map;
}

}  // namespace octo
