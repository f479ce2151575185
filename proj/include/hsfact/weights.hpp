#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hsfact {

/// A weight of B_n in the standard basis.
///
/// Half-integral weights are stored as their integral part plus the
/// spin_shift flag: entries (2,1) with spin_shift set denote (5/2,3/2).
/// Rank is explicit; trailing zeros are significant.
struct Weight {
  std::vector<int> entries;
  bool spin_shift = false;

  Weight() = default;
  explicit Weight(std::vector<int> e, bool spin = false) : entries(std::move(e)), spin_shift(spin) {}

  std::size_t rank() const { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }

  /// The same lattice point with the spin flag set (lambda -> lambda').
  Weight primed() const { return Weight(entries, true); }
  Weight integral_part() const { return Weight(entries, false); }

  /// Shifted by +-e_i; the spin flag is preserved.
  Weight plus_unit(std::size_t i) const;
  Weight minus_unit(std::size_t i) const;

  /// "(2,1)" or "(2,1)'".
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight zero_weight(std::size_t rank);

/// Appends zeros up to the given rank; throws if the weight is longer.
Weight pad_to_rank(const Weight& w, std::size_t rank);

/// Parses "2,1,0" (optionally ending in a prime for spin-shifted weights).
Weight parse_weight(const std::string& text);

bool is_dominant(const Weight& w);

/// mu_i >= nu_i for every i. Throws on rank or spin mismatch.
bool bruhat_leq(const Weight& nu, const Weight& mu);

int manhattan_distance(const Weight& a, const Weight& b);

/// All dominant integral lambda with mu_i >= lambda_i >= mu_{i+1}, mu_n >= lambda_n >= 0,
/// in decreasing lexicographic order (mu first).
std::vector<Weight> box(const Weight& mu);

bool in_box(const Weight& mu, const Weight& lambda);

/// Element of {+1,-1}^n labelling the summand lambda + sum sigma_i e_i / 2.
struct SignCode {
  std::vector<int> signs;
  std::string to_string() const;
  friend auto operator<=>(const SignCode&, const SignCode&) = default;
};

enum class PathDirection { forward, reverse };

/// Lattice path through dominant weights. Forward paths go up from nodes.front()
/// to nodes.back(); changes[p] is the 0-based coordinate that moves between
/// nodes[p] and nodes[p+1].
struct Path {
  std::vector<Weight> nodes;
  std::vector<std::size_t> changes;
  PathDirection direction = PathDirection::forward;

  std::size_t length() const { return changes.size(); }
  const Weight& start() const { return nodes.front(); }
  const Weight& end() const { return nodes.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

Path reversed(const Path& path);

struct PathEnumeration {
  std::vector<Path> paths;
  bool truncated = false;
};

/// Every forward path from nu up to mu through dominant weights, ordered
/// lexicographically by change sequence, at most cap of them.
PathEnumeration enumerate_paths(const Weight& nu, const Weight& mu, std::size_t cap);

/// The path with non-decreasing change sequence (coordinate 1 filled first).
Path canonical_path(const Weight& nu, const Weight& mu);

/// Dominant summands of V_lambda (x) S as spin-shifted weights with their codes.
std::vector<std::pair<Weight, SignCode>> summand_weights(const Weight& lambda);

/// All dominant integral weights of the given rank with entries <= max_entry.
std::vector<Weight> dominant_weights(std::size_t rank, int max_entry);

}  // namespace hsfact
