#include "latmorse/relation.hpp"

#include <algorithm>
#include <map>

namespace latmorse {

namespace {
constexpr std::size_t kAtomCap = std::size_t{1} << 16;
}

Relation::Relation(std::vector<std::string> atoms,
                   const std::vector<std::pair<std::string, std::string>>& edges)
    : atoms_(std::move(atoms)) {
  const std::size_t n = atoms_.size();
  require(n <= kAtomCap, Errc::SizeLimitExceeded, "atom count exceeds bitmask cap");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    require(index.emplace(atoms_[i], i).second, Errc::DuplicateLabel,
            "atom '" + atoms_[i] + "' repeated");
  forward_.assign(n, Bitset(n));
  for (const auto& [from, to] : edges) {
    auto it_from = index.find(from), it_to = index.find(to);
    require(it_from != index.end(), Errc::ValidationError, "unknown atom '" + from + "'");
    require(it_to != index.end(), Errc::ValidationError, "unknown atom '" + to + "'");
    forward_[it_from->second].set(it_to->second);
  }
  backward_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = forward_[i].find_first(); j != Bitset::npos;
         j = forward_[i].find_next(j))
      backward_[j].set(i);
}

Relation::Relation(std::vector<std::string> atoms, std::vector<Bitset> forward_rows)
    : atoms_(std::move(atoms)), forward_(std::move(forward_rows)) {
  const std::size_t n = atoms_.size();
  require(n <= kAtomCap, Errc::SizeLimitExceeded, "atom count exceeds bitmask cap");
  require(forward_.size() == n, Errc::ValidationError, "row count mismatch");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    require(index.emplace(atoms_[i], i).second, Errc::DuplicateLabel,
            "atom '" + atoms_[i] + "' repeated");
  backward_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    require(forward_[i].size() == n, Errc::ValidationError, "row width mismatch");
    for (std::size_t j = forward_[i].find_first(); j != Bitset::npos;
         j = forward_[i].find_next(j))
      backward_[j].set(i);
  }
}

Bitset Relation::image(const Bitset& u) const {
  Bitset out(atoms_.size());
  for (std::size_t i = u.find_first(); i != Bitset::npos; i = u.find_next(i)) out |= forward_[i];
  return out;
}

Bitset Relation::preimage(const Bitset& u) const {
  Bitset out(atoms_.size());
  for (std::size_t i = u.find_first(); i != Bitset::npos; i = u.find_next(i)) out |= backward_[i];
  return out;
}

bool Relation::reflexive() const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!forward_[i].test(i)) return false;
  return true;
}

bool Relation::transitive() const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!is_subset(image(forward_[i]), forward_[i])) return false;
  return true;
}

Relation Relation::transpose() const {
  Relation out = *this;
  std::swap(out.forward_, out.backward_);
  return out;
}

Relation Relation::reflexive_transitive_closure() const {
  const std::size_t n = atoms_.size();
  std::vector<Bitset> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset seed(n);
    seed.set(i);
    rows[i] = forward_reach(*this, seed);
  }
  return Relation(atoms_, std::move(rows));
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = forward_[i].find_first(); j != Bitset::npos;
         j = forward_[i].find_next(j))
      out.emplace_back(i, j);
  return out;
}

Bitset omega(const Relation& f, const Bitset& u) {
  std::vector<Bitset> trail{u};
  std::map<Bitset, std::size_t> seen{{u, 0}};
  for (;;) {
    Bitset next = f.image(trail.back());
    auto it = seen.find(next);
    if (it != seen.end()) {
      Bitset out(f.atom_count());
      for (std::size_t k = it->second; k < trail.size(); ++k) out |= trail[k];
      return out;
    }
    seen.emplace(next, trail.size());
    trail.push_back(std::move(next));
  }
}

Bitset alpha(const Relation& f, const Bitset& u) { return omega(f.transpose(), u); }

Bitset inv(const Relation& f, const Bitset& u) {
  Bitset s = u;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
      if ((f.forward_row(i) & s).none() || (f.backward_row(i) & s).none()) {
        s.reset(i);
        changed = true;
      }
    }
  }
  return s;
}

Bitset forward_reach(const Relation& f, const Bitset& u) {
  Bitset out = u;
  for (;;) {
    Bitset next = out | f.image(out);
    if (next == out) return out;
    out = std::move(next);
  }
}

std::vector<Bitset> strongly_connected_components(const Relation& f) {
  const std::size_t n = f.atom_count();
  // Iterative Tarjan.
  std::vector<int> number(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<Bitset> sccs;
  int counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (number[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      const Bitset& row = f.forward_row(fr.v);
      std::size_t w = (fr.next == 0) ? row.find_first() : row.find_next(fr.next - 1);
      if (w != Bitset::npos) {
        fr.next = w + 1;
        if (number[w] == -1) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], number[w]);
        }
        continue;
      }
      const std::size_t v = fr.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == number[v]) {
        Bitset comp(n);
        for (;;) {
          std::size_t w2 = stack.back();
          stack.pop_back();
          on_stack[w2] = false;
          comp.set(w2);
          if (w2 == v) break;
        }
        sccs.push_back(std::move(comp));
      }
    }
  }
  return sccs;
}

std::vector<Bitset> recurrent_components(const Relation& f) {
  std::vector<Bitset> out;
  for (auto& comp : strongly_connected_components(f)) {
    if (comp.count() >= 2) {
      out.push_back(std::move(comp));
      continue;
    }
    const std::size_t v = comp.find_first();
    if (f.forward_row(v).test(v)) out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace latmorse
