#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// A subset of the edge universe of some host graph.
///
/// The universe is kept sorted so that iteration, printing and ordering are
/// lexicographic by edge name. Binary set operations require both operands
/// to share the same universe.
class EdgeSubset {
 public:
  EdgeSubset() : universe_(std::make_shared<const std::vector<EdgeId>>()) {}
  /// Empty subset of `universe` (duplicates are removed, order normalized).
  explicit EdgeSubset(std::vector<EdgeId> universe);
  /// Throws PreconditionError if a member is not in the universe.
  EdgeSubset(std::vector<EdgeId> universe, const std::vector<EdgeId>& members);

  static EdgeSubset none(const RibbonGraph& host);
  static EdgeSubset all(const RibbonGraph& host);
  static EdgeSubset of(const RibbonGraph& host, const std::vector<EdgeId>& members);
  /// Parses "a,b,c" (empty string or "{}" for the empty set).
  static EdgeSubset parse(const RibbonGraph& host, const std::string& list);

  /// Every subset of `host`'s edges, in binary-counter order over the sorted universe.
  static std::vector<EdgeSubset> all_subsets(const RibbonGraph& host);

  const std::vector<EdgeId>& universe() const noexcept { return *universe_; }
  bool contains(const EdgeId& e) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<EdgeId> members() const;

  /// Same universe, membership flipped.
  EdgeSubset complement() const;
  EdgeSubset operator|(const EdgeSubset& other) const;
  EdgeSubset operator&(const EdgeSubset& other) const;
  EdgeSubset operator^(const EdgeSubset& other) const;

  /// "{a,b,c}"
  std::string to_string() const;

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b);
  /// Lexicographic on the sorted member lists.
  friend std::strong_ordering operator<=>(const EdgeSubset& a, const EdgeSubset& b);

 private:
  EdgeSubset(std::shared_ptr<const std::vector<EdgeId>> universe, std::vector<bool> bits)
      : universe_(std::move(universe)), bits_(std::move(bits)) {}
  void require_same_universe(const EdgeSubset& other) const;

  std::shared_ptr<const std::vector<EdgeId>> universe_;
  std::vector<bool> bits_;
};

}  // namespace ribbon
