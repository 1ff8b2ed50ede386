#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace reachcorr {

/// State of the unordered vertex pair {u, v} with u < v. Forward means the
/// edge u -> v, Backward means v -> u.
enum class EdgeState : std::uint8_t { Absent = 0, Forward = 1, Backward = 2 };

/// Number of unordered vertex pairs, n(n-1)/2.
int pair_count(int n);

/// Canonical index of the pair {u, v}, u != v, in lexicographic order on
/// (min, max): (0,1), (0,2), ..., (0,n-1), (1,2), ...
int pair_index(int n, int u, int v);

/// Complete-graph vertex set with one EdgeState per unordered pair, stored in
/// canonical pair order. Vertex roles throughout the library: s=0, a=1, t=2,
/// b=3 (all four models are invariant under relabeling, so fixing one
/// labeling loses no generality).
class OrientedGraph {
 public:
  /// All pairs Absent.
  explicit OrientedGraph(int n);
  OrientedGraph(int n, std::vector<EdgeState> states);

  int vertex_count() const { return n_; }
  const std::vector<EdgeState>& states() const { return states_; }

  /// State of {u, v} as seen from u: Forward iff the edge points u -> v.
  EdgeState state(int u, int v) const;
  void set_state(int u, int v, EdgeState state);
  /// True iff the directed edge from -> to exists.
  bool has_arc(int from, int to) const { return state(from, to) == EdgeState::Forward; }

  /// Graph with every edge direction flipped.
  OrientedGraph reversed() const;

  /// True iff a directed path from -> ... -> to exists; reaches(v, v) is
  /// always true (every vertex belongs to its own clusters).
  bool reaches(int from, int to) const;

  /// All vertices reachable from v by a directed path, v included. Sorted.
  std::vector<int> out_cluster(int v) const;
  /// All vertices that reach v by a directed path, v included. Sorted.
  std::vector<int> in_cluster(int v) const;

  /// Pair states in canonical order as '.', '>', '<'.
  std::string states_string() const;
  static OrientedGraph from_states_string(int n, std::string_view text);

  /// JSON object {"n": ..., "states": "..."}.
  std::string to_json() const;
  static OrientedGraph from_json(std::string_view text);

  friend bool operator==(const OrientedGraph& lhs, const OrientedGraph& rhs) = default;

 private:
  void check_vertex(int v) const;
  /// Out-adjacency rows as bitsets, words_per_row() words per vertex.
  std::vector<std::uint64_t> adjacency() const;
  int words_per_row() const { return (n_ + 63) / 64; }

  int n_ = 1;
  std::vector<EdgeState> states_;
};

}  // namespace reachcorr
