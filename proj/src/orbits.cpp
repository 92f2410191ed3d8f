#include "honeycomb/orbits.hpp"

#include <algorithm>

namespace honeycomb {

std::size_t OrbitDecomposition::orbit_index(const TorusVertex& v) const {
  return orbit_of[subgroup.parent().vertex_index(v)];
}

ElementId OrbitDecomposition::witness_for(const TorusVertex& v) const {
  return witness[subgroup.parent().vertex_index(v)];
}

OrbitDecomposition decompose(const TorusSubgroup& subgroup) {
  const TorusGroup& g = subgroup.parent();
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  OrbitDecomposition out;
  out.subgroup = subgroup;
  out.orbit_of.assign(n, kUnvisited);
  out.witness.assign(n, TorusGroup::identity());

  for (std::size_t start = 0; start < n; ++start) {
    if (out.orbit_of[start] != kUnvisited) continue;
    const std::size_t orbit = out.orbits.size();
    std::vector<std::size_t> members{start};
    out.orbit_of[start] = orbit;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t v = members[head];
      for (ElementId s : subgroup.generator_ids()) {
        const std::size_t w = g.act(s, v);
        if (out.orbit_of[w] != kUnvisited) continue;
        out.orbit_of[w] = orbit;
        out.witness[w] = g.compose(s, out.witness[v]);
        members.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<TorusVertex> vertices;
    vertices.reserve(members.size());
    for (std::size_t m : members) vertices.push_back(g.vertex_at(m));
    out.representatives.push_back(g.vertex_at(start));
    out.orbits.push_back(std::move(vertices));
  }
  return out;
}

Stabilizer stabilizer(const TorusSubgroup& subgroup, const TorusVertex& v) {
  const TorusGroup& g = subgroup.parent();
  Stabilizer out{v, {}};
  for (ElementId e : subgroup.elements()) {
    if (g.act(e, v) == v) out.elements.push_back(e);
  }
  return out;
}

std::optional<ElementId> stabilizer_escape(const TorusSubgroup& subgroup,
                                           const TorusVertex& v,
                                           const TorusSubgroup& j) {
  const TorusGroup& g = subgroup.parent();
  for (ElementId e : subgroup.elements()) {
    if (!j.contains(e) && g.act(e, v) == v) return e;
  }
  return std::nullopt;
}

bool stabilizer_contained(const TorusSubgroup& subgroup, const TorusVertex& v,
                          const TorusSubgroup& j) {
  return !stabilizer_escape(subgroup, v, j).has_value();
}

}  // namespace honeycomb
