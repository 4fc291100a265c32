#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "rng.hpp"

namespace rainbow {

/// Edge {u,v} of K_n with u < v.  Vertices are 0-based.
struct Edge {
  int u = 0;
  int v = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline long long edge_count(int n) { return binom2(n); }

/// Colexicographic index of an edge: {u,v} -> v(v-1)/2 + u.
/// Bijective onto {0,...,C(n,2)-1}.
int edge_index(Edge e, int n);
Edge edge_from_index(long long index, int n);

/// Permutation of {0,...,n-1}, stored in one-line notation.
class Perm {
 public:
  explicit Perm(std::vector<int> image);

  static Perm identity(int n);
  static Perm random(int n, Xoshiro256StarStar& rng);
  /// Parse 0-based one-line notation, e.g. "1,0,2,3".
  static Perm parse(std::string_view text);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Perm inverse() const;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> image_;
};

/// (a after b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);

/// {sigma(u), sigma(v)} with endpoints reordered.
Edge apply_to_edge(const Perm& sigma, Edge e);

struct CycleStats {
  int fixed_points = 0;
  int two_cycles = 0;
};

CycleStats cycle_stats(const Perm& sigma);

/// Number of edges e of K_n with sigma(e) = e; equals C(f,2) + t.
long long fixed_edge_count(const Perm& sigma);

/// Action of sigma on edge indices: result[edge_index(e)] = edge_index(sigma(e)).
std::vector<int> edge_action(const Perm& sigma);

/// Tuple of m permutations on a common ground set.
struct PermTuple {
  std::vector<Perm> perms;

  explicit PermTuple(std::vector<Perm> ps);
  static PermTuple identities(int n, int m);
  /// Semicolon-separated one-line permutations, e.g. "0,1,2;1,2,0".
  static PermTuple parse(std::string_view text);

  int n() const { return perms.front().n(); }
  int m() const { return static_cast<int>(perms.size()); }
  std::string to_string() const;

  friend bool operator==(const PermTuple&, const PermTuple&) = default;
};

}  // namespace rainbow
