#include "fricke/orbit_graphs.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fricke/orbit_search.hpp"

namespace fricke {

ColoredGraph build_graph(const std::vector<Point3>& points, const Omega<CosSum>& w) {
  ColoredGraph g;
  g.n = points.size();
  std::multimap<double, std::size_t> by_x;
  for (std::size_t i = 0; i < points.size(); ++i) by_x.emplace(points[i].x.to_double(), i);
  auto locate = [&](const Point3& q) {
    const double fx = q.x.to_double();
    for (auto it = by_x.lower_bound(fx - 1e-9); it != by_x.end() && it->first <= fx + 1e-9; ++it) {
      if (same_point(points[it->second], q)) return it->second;
    }
    throw std::logic_error("orbit is not closed under the action");
  };
  for (Color c : kColors) {
    auto& part = g.partner[static_cast<int>(c)];
    part.resize(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      const Point3 q = apply(c, points[v], w);
      part[v] = same_point(q, points[v]) ? v : locate(q);
    }
  }
  if (!is_involutive(g)) throw std::logic_error("color relation is not an involution");
  return g;
}

ColoredGraph build_graph(const OrbitRecord& rec) { return build_graph(rec.points, rec.omega); }

bool is_involutive(const ColoredGraph& g) {
  for (const auto& part : g.partner) {
    if (part.size() != g.n) return false;
    for (std::size_t v = 0; v < g.n; ++v) {
      if (part[v] >= g.n || part[part[v]] != v) return false;
    }
  }
  return true;
}

namespace {

// Components of the graph restricted to the given colors (union-find).
std::vector<std::size_t> components(const ColoredGraph& g, std::array<bool, 3> use) {
  std::vector<std::size_t> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (int c = 0; c < 3; ++c) {
    if (!use[c]) continue;
    for (std::size_t v = 0; v < g.n; ++v) parent[root(v)] = root(g.partner[c][v]);
  }
  for (std::size_t v = 0; v < g.n; ++v) parent[v] = root(v);
  return parent;
}

}  // namespace

bool is_connected(const ColoredGraph& g) {
  const auto comp = components(g, {true, true, true});
  for (std::size_t v = 0; v < g.n; ++v) {
    if (comp[v] != comp[0]) return false;
  }
  return true;
}

int lambda_orbit_count(const ColoredGraph& g) {
  std::vector<int> side(g.n, -1);
  for (std::size_t s = 0; s < g.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& part : g.partner) {
        const std::size_t u = part[v];
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return 1;  // odd closed walk (including loops)
        }
      }
    }
  }
  return 2;
}

std::vector<std::size_t> bad_points(const ColoredGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.n; ++v) {
    int fixed = 0;
    for (const auto& part : g.partner) fixed += part[v] == v;
    if (fixed >= 2) out.push_back(v);
  }
  return out;
}

bool has_single_color_cycle(const ColoredGraph& g) {
  for (int c = 0; c < 3; ++c) {
    std::array<bool, 3> others{true, true, true};
    others[c] = false;
    const auto comp = components(g, others);
    for (std::size_t v = 0; v < g.n; ++v) {
      const std::size_t u = g.partner[c][v];
      if (u != v && comp[u] == comp[v]) return true;
    }
  }
  return false;
}

GraphStats graph_stats(const ColoredGraph& g) {
  GraphStats s;
  std::size_t edges = 0;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t v = 0; v < g.n; ++v) {
      if (g.partner[c][v] == v) ++s.self_loops[c];
    }
    s.edges[c] = (g.n - s.self_loops[c]) / 2;
    edges += s.edges[c];
  }
  s.bad_points = bad_points(g).size();
  s.lambda_orbits = lambda_orbit_count(g);
  const auto comp = components(g, {true, true, true});
  std::size_t parts = 0;
  for (std::size_t v = 0; v < g.n; ++v) parts += comp[v] == v;
  s.cycles = edges + parts - g.n;
  return s;
}

std::string point_label(const Point3& p) {
  std::string out = "(";
  bool angles = true;
  std::array<std::string, 3> parts;
  for (int i = 0; i < 3; ++i) {
    if (auto r = p[i].as_single_cos()) {
      parts[i] = r->to_string();
    } else {
      angles = false;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += angles ? parts[i] : p[i].to_string();
  }
  return out + ")";
}

std::string export_dot(const ColoredGraph& g, const std::vector<std::string>& labels,
                       const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.n; ++v) {
    out << "  " << v;
    if (v < labels.size()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (int c = 0; c < 3; ++c) {
    for (std::size_t v = 0; v < g.n; ++v) {
      const std::size_t u = g.partner[c][v];
      if (u < v) continue;
      out << "  " << v << " -- " << u << " [color=" << kDotColors[c] << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fricke
