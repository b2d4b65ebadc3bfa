#include "shallow/vertex_set.hpp"

#include "shallow/errors.hpp"

namespace shallow {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxSetVertices) throw InvalidArgument("vertex out of VertexSet range");
    insert(v);
  }
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxSetVertices) throw InvalidArgument("vertex out of VertexSet range");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace shallow
