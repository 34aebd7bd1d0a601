#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cogregion/geo_point.hpp"
#include "cogregion/geometry.hpp"

namespace cogregion {

/// Point quadtree in projected coordinates. Built once, immutable after,
/// safe for concurrent queries.
///
/// Queries return indices into the point list the tree was built from,
/// sorted ascending.
class QuadTree {
 public:
  static constexpr std::size_t kLeafCapacity = 16;
  static constexpr int kMaxDepth = 20;

  struct Node {
    Box box;
    std::array<std::int32_t, 4> children{-1, -1, -1, -1};
    std::uint32_t first = 0;  // range into items() for leaves
    std::uint32_t count = 0;  // points beneath this node
    int depth = 0;
    bool is_leaf() const noexcept { return children[0] < 0; }
  };

  /// Nodes visited and pruned during one query.
  struct Trace {
    std::vector<std::uint32_t> visited;
    std::vector<std::uint32_t> pruned;
  };

  QuadTree() = default;
  explicit QuadTree(std::span<const GeoPoint> points);
  explicit QuadTree(std::span<const LonLat> positions);

  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }

  std::vector<std::uint32_t> query_rectangle(const Rectangle& r, Trace* trace = nullptr) const;
  std::vector<std::uint32_t> query_polygon(const Polygon& poly, Trace* trace = nullptr) const;

  std::span<const Node> nodes() const noexcept { return nodes_; }
  /// Point indices of a leaf.
  std::span<const std::uint32_t> leaf_items(const Node& leaf) const noexcept {
    return std::span<const std::uint32_t>(items_).subspan(leaf.first, leaf.count);
  }
  /// Every point index beneath a node (leaf or internal).
  std::vector<std::uint32_t> collect(std::uint32_t node) const;
  PlanarPoint position(std::uint32_t index) const noexcept { return positions_[index]; }

 private:
  void build();
  std::int32_t build_node(Box box, std::uint32_t first, std::uint32_t count, int depth);

  template <typename NodeTest, typename PointTest>
  std::vector<std::uint32_t> query(const Box& query_box, NodeTest&& fully_inside,
                                   PointTest&& accept, Trace* trace) const;

  std::vector<PlanarPoint> positions_;
  std::vector<std::uint32_t> items_;
  std::vector<Node> nodes_;
};

}  // namespace cogregion
