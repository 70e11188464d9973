#include "latmorse/dot.hpp"

namespace latmorse {

namespace {
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

std::string dot_hasse(const FinitePoset& p, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out += "  " + quote(p.label(i)) + ";\n";
  for (const auto& [lo, hi] : p.covers())
    out += "  " + quote(p.label(lo)) + " -> " + quote(p.label(hi)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latmorse
