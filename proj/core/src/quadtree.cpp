#include "cogregion/quadtree.hpp"

#include <algorithm>

namespace cogregion {

QuadTree::QuadTree(std::span<const GeoPoint> points) {
  positions_.reserve(points.size());
  for (const GeoPoint& p : points) positions_.push_back(project_equal_area(p.position));
  build();
}

QuadTree::QuadTree(std::span<const LonLat> positions) {
  positions_.reserve(positions.size());
  for (const LonLat& p : positions) positions_.push_back(project_equal_area(p));
  build();
}

void QuadTree::build() {
  items_.resize(positions_.size());
  for (std::uint32_t i = 0; i < items_.size(); ++i) items_[i] = i;
  Box root = Box::empty();
  for (const PlanarPoint& p : positions_) root.expand(p);
  if (positions_.empty()) root = {0, 0, 0, 0};
  build_node(root, 0, static_cast<std::uint32_t>(items_.size()), 0);
}

std::int32_t QuadTree::build_node(Box box, std::uint32_t first, std::uint32_t count, int depth) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{box, {-1, -1, -1, -1}, first, count, depth});
  if (count <= kLeafCapacity || depth >= kMaxDepth) return id;

  const double mid_x = 0.5 * (box.min_x + box.max_x);
  const double mid_y = 0.5 * (box.min_y + box.max_y);
  auto quadrant = [&](std::uint32_t item) {
    const PlanarPoint& p = positions_[item];
    return (p.y >= mid_y ? 2 : 0) + (p.x >= mid_x ? 1 : 0);
  };

  // Stable counting sort of the range by quadrant keeps builds deterministic.
  std::array<std::uint32_t, 4> sizes{};
  auto begin = items_.begin() + first;
  auto end = begin + count;
  for (auto it = begin; it != end; ++it) ++sizes[quadrant(*it)];
  std::array<std::uint32_t, 4> offsets{0, sizes[0], sizes[0] + sizes[1],
                                       sizes[0] + sizes[1] + sizes[2]};
  std::vector<std::uint32_t> scratch(count);
  auto cursor = offsets;
  for (auto it = begin; it != end; ++it) scratch[cursor[quadrant(*it)]++] = *it;
  std::copy(scratch.begin(), scratch.end(), begin);

  const std::array<Box, 4> boxes{
      Box{box.min_x, box.min_y, mid_x, mid_y},
      Box{mid_x, box.min_y, box.max_x, mid_y},
      Box{box.min_x, mid_y, mid_x, box.max_y},
      Box{mid_x, mid_y, box.max_x, box.max_y},
  };
  for (int q = 0; q < 4; ++q) {
    const std::int32_t child = build_node(boxes[q], first + offsets[q], sizes[q], depth + 1);
    nodes_[id].children[q] = child;
  }
  return id;
}

std::vector<std::uint32_t> QuadTree::collect(std::uint32_t node) const {
  const Node& n = nodes_.at(node);
  auto items = leaf_items(n);
  return {items.begin(), items.end()};
}

template <typename NodeTest, typename PointTest>
std::vector<std::uint32_t> QuadTree::query(const Box& query_box, NodeTest&& fully_inside,
                                           PointTest&& accept, Trace* trace) const {
  std::vector<std::uint32_t> out;
  if (nodes_.empty() || positions_.empty()) return out;
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    const Node& node = nodes_[id];
    if (node.count == 0 || !node.box.intersects(query_box)) {
      if (trace) trace->pruned.push_back(id);
      continue;
    }
    if (trace) trace->visited.push_back(id);
    if (fully_inside(node.box)) {
      auto items = leaf_items(node);
      out.insert(out.end(), items.begin(), items.end());
      continue;
    }
    if (node.is_leaf()) {
      for (std::uint32_t item : leaf_items(node)) {
        if (accept(positions_[item])) out.push_back(item);
      }
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back(static_cast<std::uint32_t>(*it));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> QuadTree::query_rectangle(const Rectangle& r, Trace* trace) const {
  const Box q = r.projected();
  return query(
      q, [&](const Box& b) { return q.contains(b); },
      [&](PlanarPoint p) { return q.contains(p); }, trace);
}

std::vector<std::uint32_t> QuadTree::query_polygon(const Polygon& poly, Trace* trace) const {
  // Inflate so points within the on-edge tolerance of the bounding box are
  // still offered to the exact test.
  Box q = poly.bounds();
  constexpr double pad = 1e-12;
  q = {q.min_x - pad, q.min_y - pad, q.max_x + pad, q.max_y + pad};
  const auto rings = poly.rings();
  return query(
      q, [](const Box&) { return false; },
      [&](PlanarPoint p) { return point_in_ring_set(p, rings); }, trace);
}

}  // namespace cogregion
