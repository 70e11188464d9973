#include "latmorse/common.hpp"

#include <algorithm>

namespace latmorse {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotASemilattice: return "NotASemilattice";
    case Errc::FormAxiomViolated: return "FormAxiomViolated";
    case Errc::AxiomsViolated: return "AxiomsViolated";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::NotInjective: return "NotInjective";
    case Errc::ThetaIllDefined: return "ThetaIllDefined";
    case Errc::AdditivityNotApplicable: return "AdditivityNotApplicable";
    case Errc::NotAnAttractor: return "NotAnAttractor";
    case Errc::NotForwardInvariant: return "NotForwardInvariant";
    case Errc::NotBackwardInvariant: return "NotBackwardInvariant";
    case Errc::NotASublattice: return "NotASublattice";
    case Errc::InvalidMorseRepresentation: return "InvalidMorseRepresentation";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::NotEnclosable: return "NotEnclosable";
    case Errc::EmbeddingFailure: return "EmbeddingFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::ComputeError: return "ComputeError";
  }
  return "UnknownError";
}

std::string set_notation(const Bitset& mask, const std::vector<std::string>& labels) {
  std::vector<std::string> members;
  for (std::size_t i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i))
    members.push_back(labels.at(i));
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

}  // namespace latmorse
