#include "reachcorr/oriented_graph.hpp"

#include "json.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace reachcorr {

int pair_count(int n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  return n * (n - 1) / 2;
}

int pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n || u == v) throw std::out_of_range("vertex pair out of range");
  // Pairs (u, u+1..n-1) start after the u complete blocks before them.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

OrientedGraph::OrientedGraph(int n) : n_(n), states_(static_cast<std::size_t>(pair_count(n)), EdgeState::Absent) {}

OrientedGraph::OrientedGraph(int n, std::vector<EdgeState> states) : n_(n), states_(std::move(states)) {
  if (static_cast<int>(states_.size()) != pair_count(n)) {
    throw std::invalid_argument("state sequence length must be n(n-1)/2");
  }
}

void OrientedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

EdgeState OrientedGraph::state(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const EdgeState stored = states_[static_cast<std::size_t>(pair_index(n_, u, v))];
  if (u < v || stored == EdgeState::Absent) return stored;
  return stored == EdgeState::Forward ? EdgeState::Backward : EdgeState::Forward;
}

void OrientedGraph::set_state(int u, int v, EdgeState state) {
  check_vertex(u);
  check_vertex(v);
  if (u > v && state != EdgeState::Absent) {
    state = state == EdgeState::Forward ? EdgeState::Backward : EdgeState::Forward;
  }
  states_[static_cast<std::size_t>(pair_index(n_, u, v))] = state;
}

OrientedGraph OrientedGraph::reversed() const {
  OrientedGraph result = *this;
  for (auto& s : result.states_) {
    if (s == EdgeState::Forward) {
      s = EdgeState::Backward;
    } else if (s == EdgeState::Backward) {
      s = EdgeState::Forward;
    }
  }
  return result;
}

std::vector<std::uint64_t> OrientedGraph::adjacency() const {
  const int words = words_per_row();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_) * words, 0);
  std::size_t index = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v, ++index) {
      const EdgeState s = states_[index];
      if (s == EdgeState::Forward) {
        rows[static_cast<std::size_t>(u) * words + v / 64] |= std::uint64_t{1} << (v % 64);
      } else if (s == EdgeState::Backward) {
        rows[static_cast<std::size_t>(v) * words + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
  return rows;
}

bool OrientedGraph::reaches(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  if (from == to) return true;

  const int words = words_per_row();
  const auto rows = adjacency();
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::uint64_t> frontier(words, 0);
  visited[from / 64] = frontier[from / 64] = std::uint64_t{1} << (from % 64);

  while (true) {
    std::vector<std::uint64_t> next(words, 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits != 0) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        for (int x = 0; x < words; ++x) next[x] |= rows[static_cast<std::size_t>(v) * words + x];
      }
    }
    bool grew = false;
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      grew |= next[w] != 0;
    }
    if ((visited[to / 64] >> (to % 64)) & 1U) return true;
    if (!grew) return false;
    frontier = std::move(next);
  }
}

std::vector<int> OrientedGraph::out_cluster(int v) const {
  check_vertex(v);
  std::vector<int> cluster;
  for (int u = 0; u < n_; ++u) {
    if (reaches(v, u)) cluster.push_back(u);
  }
  return cluster;
}

std::vector<int> OrientedGraph::in_cluster(int v) const {
  check_vertex(v);
  std::vector<int> cluster;
  for (int u = 0; u < n_; ++u) {
    if (reaches(u, v)) cluster.push_back(u);
  }
  return cluster;
}

std::string OrientedGraph::states_string() const {
  std::string text;
  text.reserve(states_.size());
  for (EdgeState s : states_) {
    text.push_back(s == EdgeState::Absent ? '.' : (s == EdgeState::Forward ? '>' : '<'));
  }
  return text;
}

OrientedGraph OrientedGraph::from_states_string(int n, std::string_view text) {
  if (static_cast<int>(text.size()) != pair_count(n)) {
    throw std::invalid_argument("state string length must be n(n-1)/2");
  }
  std::vector<EdgeState> states;
  states.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '.': states.push_back(EdgeState::Absent); break;
      case '>': states.push_back(EdgeState::Forward); break;
      case '<': states.push_back(EdgeState::Backward); break;
      default: throw std::invalid_argument("state characters must be '.', '>' or '<'");
    }
  }
  return OrientedGraph(n, std::move(states));
}

std::string OrientedGraph::to_json() const {
  nlohmann::json object;
  object["n"] = n_;
  object["states"] = states_string();
  return object.dump();
}

OrientedGraph OrientedGraph::from_json(std::string_view text) {
  const nlohmann::json object = nlohmann::json::parse(text);
  return from_states_string(object.at("n").get<int>(), object.at("states").get<std::string>());
}

}  // namespace reachcorr
