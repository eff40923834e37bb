#include "vrglue/labels.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace vrglue {
namespace {

// Append-only pool. Interning is serialized; lookups of already-interned ids
// are lock-free (deque never invalidates references on push_back). Parallel
// sections in this library never intern, they only read.
struct PoolState {
  std::mutex mutex;
  std::deque<std::string> labels;
  std::unordered_map<std::string_view, Vertex> index;
};

PoolState& state() {
  static PoolState s;
  return s;
}

}  // namespace

LabelPool& LabelPool::instance() {
  static LabelPool pool;
  return pool;
}

Vertex LabelPool::intern(std::string_view label) {
  PoolState& s = state();
  std::lock_guard<std::mutex> lock(s.mutex);
  auto it = s.index.find(label);
  if (it != s.index.end()) return it->second;
  s.labels.emplace_back(label);
  Vertex id = static_cast<Vertex>(s.labels.size() - 1);
  s.index.emplace(std::string_view(s.labels.back()), id);
  return id;
}

const std::string& LabelPool::label(Vertex v) const {
  return state().labels.at(v);
}

bool LabelPool::less(Vertex a, Vertex b) const {
  if (a == b) return false;
  const auto& labels = state().labels;
  return labels.at(a) < labels.at(b);
}

std::vector<Vertex> intern_labels(const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(intern_label(l));
  return out;
}

std::vector<std::string> labels_of(const std::vector<Vertex>& vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(vertex_label(v));
  return out;
}

}  // namespace vrglue
