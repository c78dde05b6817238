#include "ribbon/edge_subset.hpp"

#include <algorithm>
#include <sstream>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

std::vector<EdgeId> normalized(std::vector<EdgeId> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return universe;
}

std::size_t position(const std::vector<EdgeId>& universe, const EdgeId& e) {
  auto it = std::lower_bound(universe.begin(), universe.end(), e);
  if (it == universe.end() || *it != e) return universe.size();
  return static_cast<std::size_t>(it - universe.begin());
}

}  // namespace

EdgeSubset::EdgeSubset(std::vector<EdgeId> universe)
    : universe_(std::make_shared<const std::vector<EdgeId>>(normalized(std::move(universe)))),
      bits_(universe_->size(), false) {}

EdgeSubset::EdgeSubset(std::vector<EdgeId> universe, const std::vector<EdgeId>& members)
    : EdgeSubset(std::move(universe)) {
  for (const auto& m : members) {
    const auto i = position(*universe_, m);
    if (i == universe_->size()) throw PreconditionError("edge " + m + " is not in the host graph");
    bits_[i] = true;
  }
}

EdgeSubset EdgeSubset::none(const RibbonGraph& host) { return EdgeSubset(host.edge_names()); }

EdgeSubset EdgeSubset::all(const RibbonGraph& host) { return none(host).complement(); }

EdgeSubset EdgeSubset::of(const RibbonGraph& host, const std::vector<EdgeId>& members) {
  return EdgeSubset(host.edge_names(), members);
}

EdgeSubset EdgeSubset::parse(const RibbonGraph& host, const std::string& list) {
  std::string body = list;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::vector<EdgeId> members;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    members.push_back(item.substr(first, last - first + 1));
  }
  return of(host, members);
}

std::vector<EdgeSubset> EdgeSubset::all_subsets(const RibbonGraph& host) {
  const auto base = none(host);
  const auto m = base.universe().size();
  if (m >= 8 * sizeof(unsigned long long)) throw PreconditionError("too many edges to enumerate subsets");
  std::vector<EdgeSubset> out;
  out.reserve(std::size_t{1} << m);
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<bool> bits(m);
    for (std::size_t i = 0; i < m; ++i) bits[i] = ((mask >> i) & 1ULL) != 0;
    out.push_back(EdgeSubset(base.universe_, std::move(bits)));
  }
  return out;
}

bool EdgeSubset::contains(const EdgeId& e) const {
  const auto i = position(*universe_, e);
  return i < bits_.size() && bits_[i];
}

std::size_t EdgeSubset::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<EdgeId> EdgeSubset::members() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back((*universe_)[i]);
  }
  return out;
}

EdgeSubset EdgeSubset::complement() const {
  auto bits = bits_;
  bits.flip();
  return EdgeSubset(universe_, std::move(bits));
}

void EdgeSubset::require_same_universe(const EdgeSubset& other) const {
  if (universe_ != other.universe_ && *universe_ != *other.universe_) {
    throw PreconditionError("edge subsets over different host graphs");
  }
}

EdgeSubset EdgeSubset::operator|(const EdgeSubset& other) const {
  require_same_universe(other);
  auto bits = bits_;
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] || other.bits_[i];
  return EdgeSubset(universe_, std::move(bits));
}

EdgeSubset EdgeSubset::operator&(const EdgeSubset& other) const {
  require_same_universe(other);
  auto bits = bits_;
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] && other.bits_[i];
  return EdgeSubset(universe_, std::move(bits));
}

EdgeSubset EdgeSubset::operator^(const EdgeSubset& other) const {
  require_same_universe(other);
  auto bits = bits_;
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] != other.bits_[i];
  return EdgeSubset(universe_, std::move(bits));
}

std::string EdgeSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& m : members()) {
    if (!first) out += ',';
    out += m;
    first = false;
  }
  return out + "}";
}

bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
  return *a.universe_ == *b.universe_ && a.bits_ == b.bits_;
}

std::strong_ordering operator<=>(const EdgeSubset& a, const EdgeSubset& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace ribbon
