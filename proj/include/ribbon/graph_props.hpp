#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ribbon/edge_subset.hpp"
#include "ribbon/multigraph.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Proper 2-colouring of the vertices, or nullopt. A loop rules one out.
std::optional<std::vector<int>> bipartition(const AbstractMultigraph& m);
bool is_bipartite(const AbstractMultigraph& m);

/// Every vertex has even degree (loops count twice). True on the empty graph.
bool all_components_eulerian(const AbstractMultigraph& m);

struct PdePrediction {
  bool bipartite = false;  // components of G|_A and G*|_{A^c} all even
  bool eulerian = false;   // G|_A and G*|_{A^c} bipartite
};

/// Predicted biparticity / evenness of G^A read off G|_A and G*|_{A^c}.
/// Throws PreconditionError if `g` is not plane.
PdePrediction pde_criterion(const RibbonGraph& g, const EdgeSubset& a);

/// A bijection between the edge sets of two multigraphs, by edge name.
class EdgeBijection {
 public:
  EdgeBijection() = default;
  /// Throws PreconditionError unless `forward` maps E(g) one-to-one onto E(h).
  EdgeBijection(const AbstractMultigraph& g, const AbstractMultigraph& h, std::map<EdgeId, EdgeId> forward);

  /// Identity on names; both graphs must have the same edge names.
  static EdgeBijection natural(const AbstractMultigraph& g, const AbstractMultigraph& h);

  const EdgeId& operator()(const EdgeId& e) const { return forward_.at(e); }
  const EdgeId& inverse(const EdgeId& f) const { return backward_.at(f); }
  const std::map<EdgeId, EdgeId>& forward() const noexcept { return forward_; }

  EdgeBijection inverted() const;
  /// Restriction to `domain`; the codomain becomes the image of `domain`.
  EdgeBijection restricted(const std::vector<EdgeId>& domain) const;

 private:
  std::map<EdgeId, EdgeId> forward_;
  std::map<EdgeId, EdgeId> backward_;
};

/// Edmonds' criteria for phi: E(g) -> E(h).
///
/// Incidences count with multiplicity: a loop at v contributes its image
/// twice to H_v, so the image of a loop is always even there.
/// With `require_equal_isolated`, g and h must also have the same number of
/// isolated vertices.
bool edmonds_check(const AbstractMultigraph& g, const AbstractMultigraph& h, const EdgeBijection& phi,
                   bool require_equal_isolated = true);

/// The three conditions characterising H as the partial dual G^A through phi.
bool partial_dual_bijection_check(const AbstractMultigraph& g, const AbstractMultigraph& h, const EdgeBijection& phi,
                                  const std::vector<EdgeId>& a);

}  // namespace ribbon
