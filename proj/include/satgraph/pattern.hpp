#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/vertex_set.hpp"

namespace satgraph {

/// Multiset of clique orders [p1 <= ... <= pt] naming the target
/// K_{p1} u ... u K_{pt}. Sizes are sorted on construction so that two
/// patterns with the same multiset compare equal.
class CliquePattern {
 public:
  explicit CliquePattern(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw ArgumentError("pattern needs at least one clique");
    std::sort(sizes_.begin(), sizes_.end());
    for (int s : sizes_) {
      if (s < 1) throw ArgumentError("clique order must be at least 1");
      if (s > VertexSet::kCapacity) throw ArgumentError("clique order exceeds capacity");
    }
    if (total() > VertexSet::kCapacity)
      throw ArgumentError("pattern total order exceeds capacity");
  }

  /// Parses "p1,p2,...,pt" (digits and commas only); input order is free.
  static CliquePattern parse(const std::string& text) {
    std::vector<int> sizes;
    int cur = -1;
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        if (cur < 0) cur = 0;
        cur = cur * 10 + (c - '0');
        if (cur > VertexSet::kCapacity) throw ArgumentError("clique order exceeds capacity");
      } else if (c == ',') {
        if (cur < 0) throw ArgumentError("empty entry in pattern \"" + text + "\"");
        sizes.push_back(cur);
        cur = -1;
      } else {
        throw ArgumentError("bad character '" + std::string(1, c) + "' in pattern \"" + text +
                            "\"");
      }
    }
    if (cur < 0) throw ArgumentError("empty entry in pattern \"" + text + "\"");
    sizes.push_back(cur);
    return CliquePattern(std::move(sizes));
  }

  const std::vector<int>& sizes() const { return sizes_; }
  int count() const { return static_cast<int>(sizes_.size()); }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  int smallest() const { return sizes_.front(); }
  int largest() const { return sizes_.back(); }

  bool all_at_least_two() const { return sizes_.front() >= 2; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(sizes_[i]);
    }
    return out;
  }

  bool operator==(const CliquePattern&) const = default;

 private:
  std::vector<int> sizes_;
};

}  // namespace satgraph
