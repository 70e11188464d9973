#include "latmorse/semilattice.hpp"

#include <algorithm>
#include <map>

namespace latmorse {

MeetSemilattice::MeetSemilattice(std::vector<std::string> labels,
                                 std::vector<std::uint32_t> meet_table,
                                 std::optional<std::vector<std::uint32_t>> join_table)
    : labels_(std::move(labels)),
      meet_table_(std::move(meet_table)),
      join_table_(std::move(join_table)) {
  const std::size_t n = labels_.size();
  require(n > 0, Errc::NotASemilattice, "empty semilattice");
  require(meet_table_.size() == n * n, Errc::NotASemilattice, "meet table size mismatch");
  if (join_table_)
    require(join_table_->size() == n * n, Errc::NotASemilattice, "join table size mismatch");
  for (auto v : meet_table_)
    require(v < n, Errc::NotASemilattice, "meet entry out of range");
  for (std::size_t a = 0; a < n; ++a) {
    require(meet(a, a) == a, Errc::NotASemilattice, "meet not idempotent at " + labels_[a]);
    for (std::size_t b = 0; b < n; ++b)
      require(meet(a, b) == meet(b, a), Errc::NotASemilattice, "meet not commutative");
  }
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          require(meet(meet(a, b), c) == meet(a, meet(b, c)), Errc::NotASemilattice,
                  "meet not associative");
  } else {
    // Sampled triples keep construction affordable on big value sets.
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ n;
    auto next = [&state, n]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return static_cast<std::uint32_t>(state % n);
    };
    for (int i = 0; i < 200000; ++i) {
      std::uint32_t a = next(), b = next(), c = next();
      require(meet(meet(a, b), c) == meet(a, meet(b, c)), Errc::NotASemilattice,
              "meet not associative");
    }
  }
}

MeetSemilattice MeetSemilattice::from_masks(
    const std::vector<std::string>& universe, std::vector<Bitset> masks,
    const std::function<Bitset(const Bitset&, const Bitset&)>& meet_fn, bool with_union_join) {
  std::sort(masks.begin(), masks.end(), mask_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  const std::size_t n = masks.size();
  require(n > 0, Errc::NotASemilattice, "no values");
  std::map<Bitset, std::uint32_t> index;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < n; ++e) {
    require(masks[e].size() == universe.size(), Errc::NotASemilattice, "mask width mismatch");
    index.emplace(masks[e], static_cast<std::uint32_t>(e));
    labels.push_back(set_notation(masks[e], universe));
  }
  std::vector<std::uint32_t> meet_table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Bitset m = meet_fn(masks[a], masks[b]);
      auto it = index.find(m);
      require(it != index.end(), Errc::NotASemilattice,
              "meet of " + labels[a] + " and " + labels[b] + " leaves the value set");
      meet_table[a * n + b] = meet_table[b * n + a] = it->second;
    }
  std::optional<std::vector<std::uint32_t>> join_table;
  if (with_union_join) {
    join_table.emplace(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        auto it = index.find(masks[a] | masks[b]);
        require(it != index.end(), Errc::NotASemilattice,
                "union of " + labels[a] + " and " + labels[b] + " leaves the value set");
        (*join_table)[a * n + b] = (*join_table)[b * n + a] = it->second;
      }
  }
  MeetSemilattice out(std::move(labels), std::move(meet_table), std::move(join_table));
  out.masks_ = std::move(masks);
  return out;
}

MeetSemilattice MeetSemilattice::boolean_powerset(const std::vector<std::string>& atoms) {
  const std::size_t k = atoms.size();
  require(k <= 10, Errc::SizeLimitExceeded, "powerset semilattice capped at 10 atoms");
  std::vector<Bitset> masks;
  masks.reserve(std::size_t{1} << k);
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    Bitset m(k);
    for (std::size_t i = 0; i < k; ++i)
      if (bits & (std::size_t{1} << i)) m.set(i);
    masks.push_back(std::move(m));
  }
  return from_masks(
      atoms, std::move(masks), [](const Bitset& a, const Bitset& b) { return a & b; },
      /*with_union_join=*/true);
}

std::optional<std::uint32_t> MeetSemilattice::index_of_mask(const Bitset& m) const {
  for (std::uint32_t e = 0; e < masks_.size(); ++e)
    if (masks_[e] == m) return e;
  return std::nullopt;
}

}  // namespace latmorse
