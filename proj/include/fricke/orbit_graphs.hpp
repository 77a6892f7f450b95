// The 3-colored orbit graph: vertices are orbit points, a color-c edge joins a
// point to its image under generator c (a self-loop when the point is fixed).

#ifndef FRICKE_ORBIT_GRAPHS_HPP_
#define FRICKE_ORBIT_GRAPHS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fricke/fricke_action.hpp"

namespace fricke {

struct OrbitRecord;

struct ColoredGraph {
  std::size_t n = 0;
  std::array<std::vector<std::size_t>, 3> partner;  // partner[c][v]; v itself for a loop

  std::size_t image(Color c, std::size_t v) const { return partner[static_cast<int>(c)][v]; }
};

/// Throws std::logic_error if some image is not a point of the orbit or a
/// color relation is not an involution.
ColoredGraph build_graph(const std::vector<Point3>& points, const Omega<CosSum>& w);
ColoredGraph build_graph(const OrbitRecord& rec);

bool is_involutive(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

/// Number of orbits of the even-word subgroup: 1 if the graph has an odd closed
/// walk (a self-loop counts), 2 if it is bipartite.
int lambda_orbit_count(const ColoredGraph& g);

/// Vertices fixed by at least two generators.
std::vector<std::size_t> bad_points(const ColoredGraph& g);

/// True if some simple cycle uses exactly one edge of some color, i.e. a c-edge
/// whose ends stay connected after removing all c-edges.
bool has_single_color_cycle(const ColoredGraph& g);

struct GraphStats {
  std::array<std::size_t, 3> self_loops{};
  std::array<std::size_t, 3> edges{};  // two-ended edges per color
  std::size_t bad_points = 0;
  int lambda_orbits = 1;
  std::size_t cycles = 0;  // cycle rank of the graph without loops
};

GraphStats graph_stats(const ColoredGraph& g);

/// Label of a point as an angle triple "(rX,rY,rZ)" when every coordinate is
/// 2cos(pi r), otherwise the cosine-ring text.
std::string point_label(const Point3& p);

/// DOT text; colors x = red, y = green, z = blue.
std::string export_dot(const ColoredGraph& g, const std::vector<std::string>& labels,
                        const std::string& name = "orbit");

inline constexpr std::array<const char*, 3> kDotColors{"red", "green", "blue"};

}  // namespace fricke

#endif  // FRICKE_ORBIT_GRAPHS_HPP_
