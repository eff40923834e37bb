#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrglue/labels.hpp"
#include "vrglue/rational.hpp"

namespace vrglue {

// A finite labeled point set with a dense symmetric distance matrix. When
// `pseudo` is set the triangle inequality is not enforced and distinct points
// may sit at distance zero.
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace create(std::vector<std::string> labels,
                                  std::vector<std::vector<Rational>> matrix,
                                  bool pseudo = false);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Vertex>& vertex_ids() const { return ids_; }
  bool pseudo() const { return pseudo_; }

  const Rational& dist(std::size_t i, std::size_t j) const {
    return dist_[i * ids_.size() + j];
  }
  const Rational& dist_v(Vertex a, Vertex b) const {
    return dist(index_of(a), index_of(b));
  }

  std::size_t index_of(Vertex v) const;
  std::optional<std::size_t> find_label(const std::string& label) const;
  bool has_label(const std::string& label) const {
    return find_label(label).has_value();
  }

  Rational diameter() const;

  // Submetric space on a label subset, in the given order.
  FiniteMetricSpace restricted(const std::vector<std::string>& labels) const;

  // Construction bypassing the metric checks; used where the result is a
  // metric by construction. Symmetry/diagonal invariants still hold.
  static FiniteMetricSpace unchecked(std::vector<std::string> labels,
                                     std::vector<Rational> flat,
                                     bool pseudo);

 private:
  FiniteMetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<Vertex> ids_;
  std::vector<Rational> dist_;  // row-major, size() * size()
  std::unordered_map<Vertex, std::size_t> index_;
  bool pseudo_ = false;
};

FiniteMetricSpace new_finite_metric(std::vector<std::string> labels,
                                    std::vector<std::vector<Rational>> matrix,
                                    bool pseudo = false);

struct GraphEdge {
  std::string u;
  std::string v;
  Rational length;
};

// Connected graph with positive edge lengths; `subdivision` is the number of
// equally spaced interior sample points added per edge when the graph is
// materialized as a finite metric space.
struct MetricGraph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
  int subdivision = 0;

  static MetricGraph create(std::vector<std::string> vertices,
                            std::vector<GraphEdge> edges, int subdivision = 0);

  bool has_vertex(const std::string& v) const;
  // Index of an edge joining u and v (either direction), if any.
  std::optional<std::size_t> find_edge(const std::string& u,
                                       const std::string& v) const;
  bool is_connected() const;
};

// All-pairs shortest-path metric over the subdivided graph. Points are the
// graph vertices followed by the subdivision samples in edge order.
FiniteMetricSpace graph_metric(const MetricGraph& g, int threads = 1);

struct GluingSpec {
  std::vector<std::string> a_labels_x;
  std::vector<std::string> a_labels_y;  // in bijection with a_labels_x
};

// Quotient of the disjoint union identifying the listed label pairs; cross
// distances are min over the identified set of through-distances. Identified
// points keep their x-side labels.
FiniteMetricSpace glue_metric(const FiniteMetricSpace& x,
                              const FiniteMetricSpace& y,
                              const GluingSpec& spec);

FiniteMetricSpace wedge_metric(const FiniteMetricSpace& x,
                               const std::string& base_x,
                               const FiniteMetricSpace& y,
                               const std::string& base_y);

// Point set (X x Y0) u (X0 x Y) with the max metric. Pair labels are
// "<x>|<y>".
FiniteMetricSpace sup_product_subset(const FiniteMetricSpace& x,
                                     const std::vector<std::string>& x0,
                                     const FiniteMetricSpace& y,
                                     const std::vector<std::string>& y0);

std::string pair_label(const std::string& x, const std::string& y);

// n equally spaced points on a circle of the given circumference, geodesic
// distances. Labels p0..p{n-1}.
FiniteMetricSpace sample_circle(const Rational& circumference, int n);

}  // namespace vrglue
