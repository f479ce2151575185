#include "hsfact/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hsfact {

namespace {

void require_same_lattice(const Weight& a, const Weight& b, const char* what) {
  if (a.rank() != b.rank())
    throw std::invalid_argument(std::string(what) + ": rank mismatch " + a.to_string() + " vs " +
                                b.to_string());
  if (a.spin_shift != b.spin_shift)
    throw std::invalid_argument(std::string(what) + ": cannot mix integral and half-integral weights");
}

}  // namespace

Weight Weight::plus_unit(std::size_t i) const {
  Weight w = *this;
  ++w.entries.at(i);
  return w;
}

Weight Weight::minus_unit(std::size_t i) const {
  Weight w = *this;
  --w.entries.at(i);
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  if (spin_shift) os << '\'';
  return os.str();
}

Weight zero_weight(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

Weight pad_to_rank(const Weight& w, std::size_t rank) {
  if (w.rank() > rank) {
    for (std::size_t i = rank; i < w.rank(); ++i)
      if (w[i] != 0) throw std::invalid_argument("weight " + w.to_string() + " exceeds rank " + std::to_string(rank));
    return Weight(std::vector<int>(w.entries.begin(), w.entries.begin() + static_cast<long>(rank)), w.spin_shift);
  }
  Weight out = w;
  out.entries.resize(rank, 0);
  return out;
}

Weight parse_weight(const std::string& text) {
  std::string body = text;
  bool spin = false;
  if (!body.empty() && body.back() == '\'') {
    spin = true;
    body.pop_back();
  }
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<int> entries;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty weight entry in '" + text + "'");
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0') throw std::invalid_argument("bad weight entry '" + item + "'");
    entries.push_back(static_cast<int>(v));
  }
  if (entries.empty()) throw std::invalid_argument("empty weight '" + text + "'");
  return Weight(std::move(entries), spin);
}

bool is_dominant(const Weight& w) {
  if (w.rank() == 0) throw std::invalid_argument("weight of rank 0");
  for (std::size_t i = 0; i + 1 < w.rank(); ++i)
    if (w[i] < w[i + 1]) return false;
  // A spin-shifted last entry k+1/2 is non-negative iff k >= 0.
  return w.entries.back() >= 0;
}

bool bruhat_leq(const Weight& nu, const Weight& mu) {
  require_same_lattice(nu, mu, "bruhat_leq");
  for (std::size_t i = 0; i < mu.rank(); ++i)
    if (mu[i] < nu[i]) return false;
  return true;
}

int manhattan_distance(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("manhattan_distance: rank mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

std::vector<Weight> box(const Weight& mu) {
  if (mu.spin_shift) throw std::invalid_argument("box: integral weight expected");
  if (!is_dominant(mu)) throw std::invalid_argument("box: " + mu.to_string() + " is not dominant");
  const std::size_t n = mu.rank();
  std::vector<Weight> out;
  std::vector<int> cur(n);
  // Intervals are [mu_{i+1}, mu_i]; any choice is automatically dominant.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    const int lo = i + 1 < n ? mu[i + 1] : 0;
    for (int v = mu[i]; v >= lo; --v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool in_box(const Weight& mu, const Weight& lambda) {
  require_same_lattice(lambda, mu, "in_box");
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    const int lo = i + 1 < mu.rank() ? mu[i + 1] : 0;
    if (lambda[i] > mu[i] || lambda[i] < lo) return false;
  }
  return true;
}

std::string SignCode::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ',';
    s += signs[i] > 0 ? '+' : '-';
  }
  return s + ")";
}

Path reversed(const Path& path) {
  Path r;
  r.nodes.assign(path.nodes.rbegin(), path.nodes.rend());
  r.changes.assign(path.changes.rbegin(), path.changes.rend());
  r.direction = path.direction == PathDirection::forward ? PathDirection::reverse : PathDirection::forward;
  return r;
}

PathEnumeration enumerate_paths(const Weight& nu, const Weight& mu, std::size_t cap) {
  if (!bruhat_leq(nu, mu))
    throw std::invalid_argument("enumerate_paths: " + nu.to_string() + " is not below " + mu.to_string());
  if (!is_dominant(nu) || !is_dominant(mu)) throw std::invalid_argument("enumerate_paths: endpoints must be dominant");
  PathEnumeration out;
  Path cur;
  cur.nodes.push_back(nu);
  auto rec = [&](auto&& self) -> bool {
    const Weight here = cur.nodes.back();
    if (here == mu) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back(cur);
      return true;
    }
    for (std::size_t i = 0; i < here.rank(); ++i) {
      if (here[i] >= mu[i]) continue;
      Weight next = here.plus_unit(i);
      if (!is_dominant(next)) continue;
      cur.nodes.push_back(std::move(next));
      cur.changes.push_back(i);
      const bool keep_going = self(self);
      cur.nodes.pop_back();
      cur.changes.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec);
  return out;
}

Path canonical_path(const Weight& nu, const Weight& mu) {
  if (!bruhat_leq(nu, mu))
    throw std::invalid_argument("canonical_path: " + nu.to_string() + " is not below " + mu.to_string());
  Path p;
  p.nodes.push_back(nu);
  Weight cur = nu;
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    while (cur[i] < mu[i]) {
      cur = cur.plus_unit(i);
      p.nodes.push_back(cur);
      p.changes.push_back(i);
    }
  }
  return p;
}

std::vector<std::pair<Weight, SignCode>> summand_weights(const Weight& lambda) {
  if (lambda.spin_shift || !is_dominant(lambda))
    throw std::invalid_argument("summand_weights: dominant integral weight expected");
  const std::size_t n = lambda.rank();
  std::vector<std::pair<Weight, SignCode>> out;
  // Code order: binary counting with '+' before '-' in every slot, first slot slowest.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SignCode code;
    Weight kappa = lambda.primed();
    for (std::size_t i = 0; i < n; ++i) {
      const bool minus = (mask >> (n - 1 - i)) & 1U;
      code.signs.push_back(minus ? -1 : 1);
      // lambda_i - 1/2 = (lambda_i - 1) + 1/2
      if (minus) --kappa.entries[i];
    }
    if (is_dominant(kappa)) out.emplace_back(std::move(kappa), std::move(code));
  }
  return out;
}

std::vector<Weight> dominant_weights(std::size_t rank, int max_entry) {
  std::vector<Weight> out;
  std::vector<int> cur(rank);
  auto rec = [&](auto&& self, std::size_t i, int upper) -> void {
    if (i == rank) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= upper; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, max_entry);
  return out;
}

}  // namespace hsfact
