#include "latmorse/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace latmorse {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bitset> below)
    : labels_(std::move(labels)), below_(std::move(below)) {
  const std::size_t n = labels_.size();
  require(below_.size() == n, Errc::NotAPoset, "order matrix size mismatch");
  {
    std::set<std::string> seen;
    for (const auto& l : labels_)
      require(seen.insert(l).second, Errc::DuplicateLabel, "label '" + l + "' repeated");
  }
  for (std::size_t i = 0; i < n; ++i) {
    require(below_[i].size() == n, Errc::NotAPoset, "order row width mismatch");
    require(below_[i].test(i), Errc::NotAPoset, "order not reflexive at " + labels_[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = below_[i].find_first(); j != Bitset::npos; j = below_[i].find_next(j)) {
      if (i != j)
        require(!below_[j].test(i), Errc::NotAPoset,
                "order not antisymmetric between " + labels_[i] + " and " + labels_[j]);
      // j <= i, so everything below j must be below i.
      require(is_subset(below_[j], below_[i]), Errc::NotAPoset,
              "order not transitive through " + labels_[j]);
    }
  above_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = below_[i].find_first(); j != Bitset::npos; j = below_[i].find_next(j))
      above_[j].set(i);
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t hi = 0; hi < n; ++hi)
    for (std::size_t lo = below_[hi].find_first(); lo != Bitset::npos;
         lo = below_[hi].find_next(lo)) {
      if (lo == hi) continue;
      bool cover = true;
      for (std::size_t mid = below_[hi].find_first(); mid != Bitset::npos;
           mid = below_[hi].find_next(mid)) {
        if (mid == lo || mid == hi) continue;
        if (below_[mid].test(lo)) {  // lo < mid < hi
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(lo, hi);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinitePoset::is_downset(const Bitset& mask) const {
  for (std::size_t i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i))
    if (!is_subset(below_[i], mask)) return false;
  return true;
}

bool FinitePoset::is_convex(const Bitset& mask) const {
  const std::size_t n = size();
  for (std::size_t y = 0; y < n; ++y) {
    if (mask.test(y)) continue;
    const bool below_hit = (below_[y] & mask).any() && !(below_[y] & mask).test(y);
    const bool above_hit = (above_[y] & mask).any();
    if (below_hit && above_hit) return false;
  }
  return true;
}

std::vector<Bitset> FinitePoset::downsets(std::size_t cap) const {
  const std::size_t n = size();
  const auto ext = linear_extension();
  std::vector<Bitset> out;

  // DFS over the linear extension: at position k either exclude ext[k]
  // (excluding its whole up-set) or include it (all its strict
  // predecessors were decided earlier, so inclusion is a subset test).
  struct Frame {
    std::size_t k;
    Bitset current;
    Bitset excluded;
  };
  std::vector<Frame> stack;
  stack.push_back({0, Bitset(n), Bitset(n)});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.k == n) {
      require(out.size() < cap, Errc::SizeLimitExceeded,
              "down-set count exceeds cap " + std::to_string(cap));
      out.push_back(std::move(fr.current));
      continue;
    }
    const std::size_t x = ext[fr.k];
    if (!fr.excluded.test(x) && is_subset(below_[x] & ~Bitset(n).set(x), fr.current)) {
      Frame inc = fr;
      inc.k++;
      inc.current.set(x);
      stack.push_back(std::move(inc));
    }
    fr.k++;
    fr.excluded |= above_[x];
    stack.push_back(std::move(fr));
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) indeg[i] = below_[i].count() - 1;
  auto cmp = [&](std::size_t a, std::size_t b) { return labels_[a] > labels_[b]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<std::size_t> out;
  out.reserve(n);
  std::vector<std::size_t> remaining = indeg;
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    out.push_back(x);
    for (std::size_t y = above_[x].find_first(); y != Bitset::npos; y = above_[x].find_next(y)) {
      if (y == x) continue;
      if (--remaining[y] == 0) ready.push(y);
    }
  }
  return out;
}

FinitePoset FinitePoset::canonicalized() const {
  const auto ext = linear_extension();
  const std::size_t n = size();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ext[k]] = k;
  std::vector<std::string> labels(n);
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = labels_[ext[k]];
    for (std::size_t j = below_[ext[k]].find_first(); j != Bitset::npos;
         j = below_[ext[k]].find_next(j))
      below[k].set(pos[j]);
  }
  return FinitePoset(std::move(labels), std::move(below));
}

FinitePoset FinitePoset::restrict(const Bitset& keep) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = keep.find_first(); i != Bitset::npos; i = keep.find_next(i))
    ids.push_back(i);
  const std::size_t m = ids.size();
  std::vector<std::string> labels(m);
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = labels_[ids[a]];
    below[a].set(a);
    for (std::size_t b = 0; b < m; ++b)
      if (leq(ids[b], ids[a])) below[a].set(b);
  }
  return FinitePoset(std::move(labels), std::move(below));
}

bool FinitePoset::same_order(const FinitePoset& other) const {
  return labels_ == other.labels_ && below_ == other.below_;
}

FinitePoset poset_from_cover_pairs(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    require(index.emplace(labels[i], i).second, Errc::DuplicateLabel,
            "label '" + labels[i] + "' repeated");

  std::vector<Bitset> succ(n, Bitset(n));
  for (const auto& [lo, hi] : covers) {
    auto it_lo = index.find(lo), it_hi = index.find(hi);
    require(it_lo != index.end(), Errc::ValidationError, "unknown cover label '" + lo + "'");
    require(it_hi != index.end(), Errc::ValidationError, "unknown cover label '" + hi + "'");
    require(it_lo->second != it_hi->second, Errc::CycleDetected, "self-cover at '" + lo + "'");
    succ[it_lo->second].set(it_hi->second);
  }

  // Reflexive-transitive closure over the cover digraph; a cycle shows up
  // as two distinct mutually reachable elements.
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) reach[i].set(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = succ[i].find_first(); j != Bitset::npos; j = succ[i].find_next(j)) {
        Bitset next = reach[i] | reach[j];
        if (next != reach[i]) {
          reach[i] = std::move(next);
          changed = true;
        }
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = reach[i].find_first(); j != Bitset::npos; j = reach[i].find_next(j))
      require(i == j || !reach[j].test(i), Errc::CycleDetected,
              "cover cycle through '" + labels[i] + "'");

  // reach[i] = everything above i; convert to down-sets.
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = reach[i].find_first(); j != Bitset::npos; j = reach[i].find_next(j))
      below[j].set(i);
  return FinitePoset(labels, std::move(below));
}

namespace {

bool extend_isomorphism(const FinitePoset& p, const FinitePoset& q, std::vector<std::size_t>& map,
                        std::vector<bool>& used, std::size_t k) {
  const std::size_t n = p.size();
  if (k == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (p.down(k).count() != q.down(cand).count() || p.up(k).count() != q.up(cand).count())
      continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      if (p.leq(j, k) != q.leq(map[j], cand)) ok = false;
      if (p.leq(k, j) != q.leq(cand, map[j])) ok = false;
    }
    if (!ok) continue;
    map[k] = cand;
    used[cand] = true;
    if (extend_isomorphism(p, q, map, used, k + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return false;
  std::vector<std::size_t> map(p.size());
  std::vector<bool> used(p.size(), false);
  return extend_isomorphism(p, q, map, used, 0);
}

}  // namespace latmorse
