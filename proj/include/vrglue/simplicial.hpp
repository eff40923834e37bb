#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "vrglue/labels.hpp"
#include "vrglue/metric.hpp"
#include "vrglue/rational.hpp"

namespace vrglue {

// Nonempty set of vertices, kept sorted by label order.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices);
  static Simplex from_labels(const std::vector<std::string>& labels);

  const std::vector<Vertex>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }

  bool contains(Vertex v) const;
  bool contains_all(const Simplex& other) const;  // other subset-of this
  bool is_proper_face_of(const Simplex& other) const;

  Simplex united(const Simplex& other) const;
  Simplex united(Vertex v) const;
  Simplex without(Vertex v) const;
  std::vector<Simplex> facets() const;

  std::vector<std::string> labels() const { return labels_of(v_); }
  std::string to_string() const;

  bool operator==(const Simplex& other) const { return v_ == other.v_; }

 private:
  std::vector<Vertex> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s.vertices()) {
      h ^= v + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// (dimension, lexicographic-by-label) order.
bool simplex_less(const Simplex& a, const Simplex& b);

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

// Downward-closed set of simplices, optionally enumerated only up to a
// dimension cap.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  bool contains(const Simplex& s) const { return cells_.count(s) > 0; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  int dim() const;

  const std::optional<int>& dim_cap() const { return dim_cap_; }
  void set_dim_cap(std::optional<int> cap) { dim_cap_ = std::move(cap); }

  const SimplexSet& cells() const { return cells_; }
  std::vector<Simplex> sorted_cells() const;
  std::vector<Simplex> cells_of_dim(int d) const;
  std::vector<Simplex> maximal_cells() const;
  std::vector<Vertex> vertex_list() const;  // sorted by label
  bool has_vertex(Vertex v) const;

  void insert(const Simplex& s);             // no closure
  void insert_with_faces(const Simplex& s);  // closes downward
  bool erase(const Simplex& s);
  void reserve(std::size_t n) { cells_.reserve(n); }

  // The union of tau with every vertex v such that tau+{v} is present. If the
  // result is itself a cell, it is the unique maximal coface of tau (tau has
  // several maximal cofaces otherwise). Requires downward closure.
  std::optional<Simplex> unique_maximal_coface(const Simplex& tau) const;

  // Order-independent hash of the maximal-cell set.
  std::uint64_t fingerprint() const;

  bool operator==(const SimplicialComplex& other) const {
    return cells_ == other.cells_;
  }

 private:
  SimplexSet cells_;
  std::optional<int> dim_cap_;
  mutable std::vector<Vertex> vertex_cache_;
  mutable bool vertex_cache_valid_ = false;
};

enum class Convention { closed, open };

// diam <= r (closed) or diam < r (open).
inline bool within_scale(const Rational& d, const Rational& r, Convention c) {
  return c == Convention::closed ? d <= r : d < r;
}

Rational simplex_diameter(const FiniteMetricSpace& m, const Simplex& s);

// Clique complex of the distance graph at scale r, enumerated up to dim_cap
// (all dimensions when nullopt).
SimplicialComplex vietoris_rips(const FiniteMetricSpace& m, const Rational& r,
                                Convention convention = Convention::closed,
                                std::optional<int> dim_cap = std::nullopt);

// Nerve-style complex: a landmark subset spans a simplex when some witness
// point is within r of all its members.
SimplicialComplex cech_ambient(const FiniteMetricSpace& witnesses,
                               const std::vector<std::string>& landmarks,
                               const Rational& r,
                               Convention convention = Convention::closed,
                               std::optional<int> dim_cap = std::nullopt);

SimplicialComplex union_complexes(const SimplicialComplex& k1,
                                  const SimplicialComplex& k2);

// Rename b2 to b1 in k2, then union. Vertex sets must otherwise be disjoint.
SimplicialComplex wedge_complexes(const SimplicialComplex& k1, Vertex b1,
                                  const SimplicialComplex& k2, Vertex b2);

SimplicialComplex induced(const SimplicialComplex& k,
                          const std::vector<Vertex>& vertex_subset);

struct FiltrationEntry {
  Simplex cell;
  Rational scale;
};

// Scale-ordered simplex sequence: scales nondecreasing, faces before cofaces.
class Filtration {
 public:
  static Filtration create(std::vector<FiltrationEntry> entries);

  const std::vector<FiltrationEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<FiltrationEntry> entries_;
};

// Every simplex up to the cap enters at its diameter; ties broken by
// (dimension, lexicographic label order).
Filtration vr_filtration(const FiniteMetricSpace& m,
                         std::optional<int> dim_cap = std::nullopt);

// Sorted distinct pairwise distances, always including 0.
std::vector<Rational> critical_scales(const FiniteMetricSpace& m);

}  // namespace vrglue
