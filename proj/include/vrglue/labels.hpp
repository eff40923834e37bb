#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vrglue {

// Points are identified by opaque string labels. Labels are interned into a
// process-wide pool so that simplices can carry compact ids. All ordering is
// by label string, so results do not depend on interning order.
using Vertex = std::uint32_t;

class LabelPool {
 public:
  static LabelPool& instance();

  Vertex intern(std::string_view label);
  const std::string& label(Vertex v) const;

  // Label-string order.
  bool less(Vertex a, Vertex b) const;

 private:
  LabelPool() = default;
};

inline Vertex intern_label(std::string_view label) {
  return LabelPool::instance().intern(label);
}

inline const std::string& vertex_label(Vertex v) {
  return LabelPool::instance().label(v);
}

inline bool vertex_less(Vertex a, Vertex b) {
  return LabelPool::instance().less(a, b);
}

std::vector<Vertex> intern_labels(const std::vector<std::string>& labels);
std::vector<std::string> labels_of(const std::vector<Vertex>& vertices);

}  // namespace vrglue
