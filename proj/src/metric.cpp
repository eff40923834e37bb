#include "vrglue/metric.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <thread>

#include "vrglue/error.hpp"

namespace vrglue {
namespace {

void check_distinct_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      fail(Errc::invalid_input, "duplicate label '" + l + "'");
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::unchecked(std::vector<std::string> labels,
                                               std::vector<Rational> flat,
                                               bool pseudo) {
  FiniteMetricSpace m;
  m.labels_ = std::move(labels);
  m.ids_ = intern_labels(m.labels_);
  m.dist_ = std::move(flat);
  m.pseudo_ = pseudo;
  for (std::size_t i = 0; i < m.ids_.size(); ++i) m.index_[m.ids_[i]] = i;
  return m;
}

FiniteMetricSpace FiniteMetricSpace::create(
    std::vector<std::string> labels, std::vector<std::vector<Rational>> matrix,
    bool pseudo) {
  const std::size_t n = labels.size();
  check_distinct_labels(labels);
  if (matrix.size() != n)
    fail(Errc::invalid_input, "matrix has " + std::to_string(matrix.size()) +
                                  " rows for " + std::to_string(n) + " labels");
  for (const auto& row : matrix)
    if (row.size() != n)
      fail(Errc::invalid_input, "matrix is not square");

  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0)
      fail(Errc::nonzero_diagonal, "d(" + labels[i] + "," + labels[i] + ") != 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0)
        fail(Errc::negative_distance,
             "d(" + labels[i] + "," + labels[j] + ") < 0");
      if (matrix[i][j] != matrix[j][i])
        fail(Errc::asymmetric_matrix,
             "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," +
                 labels[i] + ")");
    }
  }
  if (!pseudo) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (matrix[i][k] > matrix[i][j] + matrix[j][k])
            fail(Errc::triangle_violation, "d(" + labels[i] + "," + labels[k] +
                                               ") > d(" + labels[i] + "," +
                                               labels[j] + ") + d(" +
                                               labels[j] + "," + labels[k] + ")");
        }
      }
  }

  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (auto& row : matrix)
    for (auto& v : row) flat.push_back(std::move(v));
  return unchecked(std::move(labels), std::move(flat), pseudo);
}

FiniteMetricSpace new_finite_metric(std::vector<std::string> labels,
                                    std::vector<std::vector<Rational>> matrix,
                                    bool pseudo) {
  return FiniteMetricSpace::create(std::move(labels), std::move(matrix), pseudo);
}

std::size_t FiniteMetricSpace::index_of(Vertex v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    fail(Errc::invalid_input, "point '" + vertex_label(v) + "' not in space");
  return it->second;
}

std::optional<std::size_t> FiniteMetricSpace::find_label(
    const std::string& label) const {
  auto it = index_.find(intern_label(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational FiniteMetricSpace::diameter() const {
  Rational best(0);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (dist(i, j) > best) best = dist(i, j);
  return best;
}

FiniteMetricSpace FiniteMetricSpace::restricted(
    const std::vector<std::string>& sub) const {
  std::vector<std::size_t> idx;
  idx.reserve(sub.size());
  for (const auto& l : sub) {
    auto i = find_label(l);
    if (!i) fail(Errc::invalid_input, "label '" + l + "' not in space");
    idx.push_back(*i);
  }
  check_distinct_labels(sub);
  std::vector<Rational> flat;
  flat.reserve(sub.size() * sub.size());
  for (std::size_t a : idx)
    for (std::size_t b : idx) flat.push_back(dist(a, b));
  return unchecked(sub, std::move(flat), pseudo_);
}

MetricGraph MetricGraph::create(std::vector<std::string> vertices,
                                std::vector<GraphEdge> edges, int subdivision) {
  check_distinct_labels(vertices);
  if (subdivision < 0) fail(Errc::invalid_input, "subdivision must be >= 0");
  MetricGraph g;
  g.vertices = std::move(vertices);
  g.edges = std::move(edges);
  g.subdivision = subdivision;
  std::set<std::string> vset(g.vertices.begin(), g.vertices.end());
  for (const auto& e : g.edges) {
    if (!vset.count(e.u) || !vset.count(e.v))
      fail(Errc::invalid_input, "edge endpoint not a vertex: " + e.u + "-" + e.v);
    if (e.u == e.v) fail(Errc::invalid_input, "self-loop at '" + e.u + "'");
    if (e.length <= 0)
      fail(Errc::invalid_input, "edge " + e.u + "-" + e.v + " has non-positive length");
  }
  return g;
}

bool MetricGraph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::optional<std::size_t> MetricGraph::find_edge(const std::string& u,
                                                  const std::string& v) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].u == u && edges[i].v == v) ||
        (edges[i].u == v && edges[i].v == u))
      return i;
  return std::nullopt;
}

bool MetricGraph::is_connected() const {
  if (vertices.empty()) return false;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<std::string> seen{vertices.front()};
  std::queue<std::string> todo;
  todo.push(vertices.front());
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop();
    for (const auto& nb : adj[cur])
      if (seen.insert(nb).second) todo.push(nb);
  }
  return seen.size() == vertices.size();
}

namespace {

struct WeightedAdj {
  // (neighbor index, length)
  std::vector<std::vector<std::pair<std::size_t, Rational>>> nbrs;
};

void dijkstra(const WeightedAdj& adj, std::size_t source,
              std::vector<std::optional<Rational>>& out) {
  const std::size_t n = adj.nbrs.size();
  out.assign(n, std::nullopt);
  using Item = std::pair<Rational, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  queue.push({Rational(0), source});
  out[source] = Rational(0);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (*out[u] < d) continue;
    for (const auto& [v, len] : adj.nbrs[u]) {
      Rational cand = d + len;
      if (!out[v] || cand < *out[v]) {
        out[v] = cand;
        queue.push({std::move(cand), v});
      }
    }
  }
}

}  // namespace

FiniteMetricSpace graph_metric(const MetricGraph& g, int threads) {
  if (!g.is_connected())
    fail(Errc::disconnected_graph, "graph metric requires a connected graph");

  // Expand subdivision points. Parallel edges get a disambiguating suffix.
  std::vector<std::string> labels = g.vertices;
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = i;

  WeightedAdj adj;
  std::map<std::pair<std::string, std::string>, int> pair_count;
  auto ensure_size = [&adj](std::size_t n) {
    if (adj.nbrs.size() < n) adj.nbrs.resize(n);
  };
  ensure_size(labels.size());
  auto add_arc = [&](std::size_t a, std::size_t b, const Rational& len) {
    ensure_size(std::max(a, b) + 1);
    adj.nbrs[a].push_back({b, len});
    adj.nbrs[b].push_back({a, len});
  };

  const int s = g.subdivision;
  for (const auto& e : g.edges) {
    std::size_t u = pos.at(e.u);
    std::size_t v = pos.at(e.v);
    if (s == 0) {
      add_arc(u, v, e.length);
      continue;
    }
    std::string key = e.u + ":" + e.v;
    auto ordered = std::minmax(e.u, e.v);
    int dup = pair_count[{ordered.first, ordered.second}]++;
    if (dup > 0) key += "#" + std::to_string(dup);
    Rational step = e.length / Rational(s + 1);
    std::size_t prev = u;
    for (int i = 1; i <= s; ++i) {
      labels.push_back(key + ":" + std::to_string(i));
      std::size_t cur = labels.size() - 1;
      add_arc(prev, cur, step);
      prev = cur;
    }
    add_arc(prev, v, step);
  }
  ensure_size(labels.size());

  const std::size_t n = labels.size();
  std::vector<Rational> flat(n * n, Rational(0));
  auto run_sources = [&](std::size_t begin, std::size_t end) {
    std::vector<std::optional<Rational>> row;
    for (std::size_t src = begin; src < end; ++src) {
      dijkstra(adj, src, row);
      for (std::size_t j = 0; j < n; ++j) flat[src * n + j] = *row[j];
    }
  };
  if (threads <= 1 || n < 32) {
    run_sources(0, n);
  } else {
    std::size_t nthreads = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      std::size_t b = t * chunk;
      std::size_t e = std::min(n, b + chunk);
      if (b < e) pool.emplace_back(run_sources, b, e);
    }
    for (auto& th : pool) th.join();
  }

  return FiniteMetricSpace::unchecked(std::move(labels), std::move(flat), false);
}

FiniteMetricSpace glue_metric(const FiniteMetricSpace& x,
                              const FiniteMetricSpace& y,
                              const GluingSpec& spec) {
  if (spec.a_labels_x.empty()) fail(Errc::empty_a, "gluing set is empty");
  if (spec.a_labels_x.size() != spec.a_labels_y.size())
    fail(Errc::invalid_input, "gluing label lists differ in size");
  check_distinct_labels(spec.a_labels_x);
  check_distinct_labels(spec.a_labels_y);

  std::vector<std::size_t> ax, ay;
  for (const auto& l : spec.a_labels_x) {
    auto i = x.find_label(l);
    if (!i) fail(Errc::invalid_input, "gluing label '" + l + "' not in x");
    ax.push_back(*i);
  }
  for (const auto& l : spec.a_labels_y) {
    auto i = y.find_label(l);
    if (!i) fail(Errc::invalid_input, "gluing label '" + l + "' not in y");
    ay.push_back(*i);
  }
  const std::size_t m = ax.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (x.dist(ax[i], ax[j]) != y.dist(ay[i], ay[j]))
        fail(Errc::non_isometric_a,
             "restriction mismatch at (" + spec.a_labels_x[i] + "," +
                 spec.a_labels_x[j] + ")");

  // y-side indices that survive (not identified).
  std::set<std::size_t> ay_set(ay.begin(), ay.end());
  std::vector<std::size_t> y_rest;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!ay_set.count(j)) y_rest.push_back(j);

  std::vector<std::string> labels = x.labels();
  std::set<std::string> xlab(labels.begin(), labels.end());
  for (std::size_t j : y_rest) {
    if (xlab.count(y.labels()[j]))
      fail(Errc::vertex_clash,
           "label '" + y.labels()[j] + "' appears on both sides");
    labels.push_back(y.labels()[j]);
  }

  const std::size_t nx = x.size();
  const std::size_t n = nx + y_rest.size();
  // Points of the identified set belong to both sides, so their distances to
  // y-side points come straight from y; the infimum formula applies only to
  // genuine cross pairs. The two agree for true metrics but not for
  // pseudosemimetrics.
  std::map<std::size_t, std::size_t> a_pos;
  for (std::size_t t = 0; t < m; ++t) a_pos[ax[t]] = t;
  auto cross = [&](std::size_t xi, std::size_t yj) {
    auto shared = a_pos.find(xi);
    if (shared != a_pos.end()) return y.dist(ay[shared->second], yj);
    std::optional<Rational> best;
    for (std::size_t t = 0; t < m; ++t) {
      Rational cand = x.dist(xi, ax[t]) + y.dist(ay[t], yj);
      if (!best || cand < *best) best = std::move(cand);
    }
    return *best;
  };

  std::vector<Rational> flat(n * n, Rational(0));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j) flat[i * n + j] = x.dist(i, j);
  for (std::size_t a = 0; a < y_rest.size(); ++a)
    for (std::size_t b = 0; b < y_rest.size(); ++b)
      flat[(nx + a) * n + (nx + b)] = y.dist(y_rest[a], y_rest[b]);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t a = 0; a < y_rest.size(); ++a) {
      Rational d = cross(i, y_rest[a]);
      flat[i * n + (nx + a)] = d;
      flat[(nx + a) * n + i] = std::move(d);
    }

  return FiniteMetricSpace::unchecked(std::move(labels), std::move(flat),
                                      x.pseudo() || y.pseudo());
}

FiniteMetricSpace wedge_metric(const FiniteMetricSpace& x,
                               const std::string& base_x,
                               const FiniteMetricSpace& y,
                               const std::string& base_y) {
  if (!x.has_label(base_x))
    fail(Errc::unknown_basepoint, "'" + base_x + "' not in x");
  if (!y.has_label(base_y))
    fail(Errc::unknown_basepoint, "'" + base_y + "' not in y");
  return glue_metric(x, y, GluingSpec{{base_x}, {base_y}});
}

std::string pair_label(const std::string& x, const std::string& y) {
  return x + "|" + y;
}

FiniteMetricSpace sup_product_subset(const FiniteMetricSpace& x,
                                     const std::vector<std::string>& x0,
                                     const FiniteMetricSpace& y,
                                     const std::vector<std::string>& y0) {
  if (y0.empty()) fail(Errc::empty_y0, "y0 must be nonempty");
  std::vector<std::size_t> x0i, y0i;
  for (const auto& l : x0) {
    auto i = x.find_label(l);
    if (!i) fail(Errc::invalid_input, "x0 label '" + l + "' not in x");
    x0i.push_back(*i);
  }
  for (const auto& l : y0) {
    auto i = y.find_label(l);
    if (!i) fail(Errc::invalid_input, "y0 label '" + l + "' not in y");
    y0i.push_back(*i);
  }
  check_distinct_labels(x0);
  check_distinct_labels(y0);

  std::set<std::size_t> x0set(x0i.begin(), x0i.end());
  std::set<std::size_t> y0set(y0i.begin(), y0i.end());

  // (X x Y0) in row-major order, then (X0 x (Y \ Y0)).
  std::vector<std::pair<std::size_t, std::size_t>> points;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j : y0i) points.push_back({i, j});
  for (std::size_t i : x0i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y0set.count(j)) points.push_back({i, j});

  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& [i, j] : points)
    labels.push_back(pair_label(x.labels()[i], y.labels()[j]));

  const std::size_t n = points.size();
  std::vector<Rational> flat(n * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational& dx = x.dist(points[a].first, points[b].first);
      const Rational& dy = y.dist(points[a].second, points[b].second);
      const Rational& d = dx > dy ? dx : dy;
      flat[a * n + b] = d;
      flat[b * n + a] = d;
    }
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(flat),
                                      x.pseudo() || y.pseudo());
}

FiniteMetricSpace sample_circle(const Rational& circumference, int n) {
  if (n < 3) fail(Errc::too_few_points, "circle sample needs at least 3 points");
  if (circumference <= 0)
    fail(Errc::invalid_input, "circumference must be positive");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  Rational step = circumference / Rational(n);
  std::vector<Rational> flat(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int hops = std::min(j - i, n - (j - i));
      Rational d = step * Rational(hops);
      flat[static_cast<std::size_t>(i) * n + j] = d;
      flat[static_cast<std::size_t>(j) * n + i] = std::move(d);
    }
  return FiniteMetricSpace::unchecked(std::move(labels), std::move(flat), false);
}

}  // namespace vrglue
