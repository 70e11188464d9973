#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latmorse {

/// Bitmask over a finite indexed universe (lattice join-irreducibles,
/// relation atoms, grid cells).
using Bitset = boost::dynamic_bitset<>;

inline Bitset make_bitset(std::size_t width, std::initializer_list<std::size_t> bits) {
  Bitset b(width);
  for (auto i : bits) b.set(i);
  return b;
}

inline bool is_subset(const Bitset& a, const Bitset& b) { return (a & ~b).none(); }

/// Linear-extension-compatible total order on masks: cardinality first,
/// numeric value second.  A proper subset always sorts strictly earlier,
/// which keeps element listings deterministic.
inline bool mask_less(const Bitset& a, const Bitset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a < b;
}

enum class Errc {
  DuplicateLabel,
  CycleDetected,
  SizeLimitExceeded,
  NotAPoset,
  NotALattice,
  NotDistributive,
  NotAHomomorphism,
  NotConvex,
  NotASemilattice,
  FormAxiomViolated,
  AxiomsViolated,
  NotWellDefined,
  NotInjective,
  ThetaIllDefined,
  AdditivityNotApplicable,
  NotAnAttractor,
  NotForwardInvariant,
  NotBackwardInvariant,
  NotASublattice,
  InvalidMorseRepresentation,
  GridMismatch,
  OutOfDomain,
  NotEnclosable,
  EmbeddingFailure,
  ParseError,
  ValidationError,
  ComputeError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

/// Canonical "{a,b,c}" notation; members sorted lexicographically by label.
std::string set_notation(const Bitset& mask, const std::vector<std::string>& labels);

}  // namespace latmorse
