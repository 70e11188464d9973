#include "latmorse/json_io.hpp"

#include <fstream>
#include <map>

namespace latmorse {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
  require(j.is_array(), Errc::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    require(e.is_string(), Errc::ParseError, std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const Json& member(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::ParseError,
          std::string("missing member '") + key + "'");
  return j.at(key);
}

}  // namespace

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["elements"] = p.labels();
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  j["covers"] = std::move(covers);
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  auto labels = string_list(member(j, "elements"), "elements");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : member(j, "covers")) {
    require(c.is_array() && c.size() == 2, Errc::ParseError, "covers must be [lo,hi] pairs");
    covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  }
  return poset_from_cover_pairs(labels, covers);
}

Json lattice_to_json(const FiniteDistributiveLattice& l) {
  Json j;
  j["join_irreducibles"] = l.ji_poset().labels();
  Json order = Json::array();
  for (std::size_t a = 0; a < l.ji_count(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < l.ji_count(); ++b) row.push_back(l.ji_poset().leq(a, b) ? 1 : 0);
    order.push_back(std::move(row));
  }
  j["order"] = std::move(order);
  Json elements = Json::array();
  for (std::size_t e = 0; e < l.size(); ++e) {
    Json el;
    el["label"] = l.label(e);
    Json mask = Json::array();
    const Bitset& m = l.mask(e);
    for (std::size_t i = m.find_first(); i != Bitset::npos; i = m.find_next(i))
      mask.push_back(l.ji_poset().label(i));
    el["mask"] = std::move(mask);
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  return j;
}

FiniteDistributiveLattice lattice_from_json(const Json& j) {
  auto ji_labels = string_list(member(j, "join_irreducibles"), "join_irreducibles");
  const Json& order = member(j, "order");
  const std::size_t m = ji_labels.size();
  require(order.is_array() && order.size() == m, Errc::ParseError, "order matrix size mismatch");
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    require(order.at(a).is_array() && order.at(a).size() == m, Errc::ParseError,
            "order row size mismatch");
    for (std::size_t b = 0; b < m; ++b)
      if (order.at(a).at(b).get<int>() != 0) below[b].set(a);
  }
  FinitePoset ji(ji_labels, std::move(below));
  std::map<std::string, std::size_t> ji_index;
  for (std::size_t i = 0; i < m; ++i) ji_index.emplace(ji_labels[i], i);

  std::vector<Bitset> elements;
  std::vector<std::string> labels;
  for (const auto& el : member(j, "elements")) {
    labels.push_back(member(el, "label").get<std::string>());
    Bitset mask(m);
    for (const auto& name : member(el, "mask")) {
      auto it = ji_index.find(name.get<std::string>());
      require(it != ji_index.end(), Errc::ParseError,
              "unknown join-irreducible '" + name.get<std::string>() + "'");
      mask.set(it->second);
    }
    elements.push_back(std::move(mask));
  }
  return FiniteDistributiveLattice(std::move(ji), std::move(elements), std::move(labels));
}

Json relation_to_json(const Relation& f) {
  Json j;
  j["atoms"] = f.atoms();
  Json edges = Json::array();
  for (const auto& [from, to] : f.edges()) edges.push_back({f.atoms()[from], f.atoms()[to]});
  j["edges"] = std::move(edges);
  return j;
}

Relation relation_from_json(const Json& j) {
  auto atoms = string_list(member(j, "atoms"), "atoms");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : member(j, "edges")) {
    require(e.is_array() && e.size() == 2, Errc::ParseError, "edges must be [from,to] pairs");
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return Relation(std::move(atoms), edges);
}

Json grid_to_json(const GridAlgebra1D& g) {
  Json j;
  Json bp = Json::array();
  for (const auto& r : g.breakpoints()) bp.push_back(format_rational(r));
  j["breakpoints"] = std::move(bp);
  return j;
}

GridAlgebra1D grid_from_json(const Json& j) {
  std::vector<Rat> bp;
  for (const auto& s : member(j, "breakpoints")) bp.push_back(parse_rational(s.get<std::string>()));
  return GridAlgebra1D(std::move(bp));
}

Json map_to_json(const PiecewiseAffineMap& m) {
  Json j;
  Json bp = Json::array();
  for (const auto& r : m.breakpoints()) bp.push_back(format_rational(r));
  j["breakpoints"] = std::move(bp);
  Json pieces = Json::array();
  for (const auto& p : m.pieces()) {
    Json piece;
    piece["slope"] = format_rational(p.slope);
    piece["intercept"] = format_rational(p.intercept);
    pieces.push_back(std::move(piece));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewiseAffineMap map_from_json(const Json& j) {
  std::vector<Rat> bp;
  for (const auto& s : member(j, "breakpoints")) bp.push_back(parse_rational(s.get<std::string>()));
  std::vector<PiecewiseAffineMap::Piece> pieces;
  for (const auto& p : member(j, "pieces"))
    pieces.push_back({parse_rational(member(p, "slope").get<std::string>()),
                      parse_rational(member(p, "intercept").get<std::string>())});
  return PiecewiseAffineMap(std::move(bp), std::move(pieces));
}

Json morse_representation_to_json(const MorseRepresentation& m,
                                  const std::vector<std::string>& atom_labels) {
  Json j;
  Json sets = Json::array();
  for (std::size_t i = 0; i < m.sets.size(); ++i) {
    Json s;
    s["label"] = m.order.label(i);
    Json atoms = Json::array();
    std::vector<std::string> names;
    for (std::size_t a = m.sets[i].find_first(); a != Bitset::npos; a = m.sets[i].find_next(a))
      names.push_back(atom_labels.at(a));
    std::sort(names.begin(), names.end());
    for (auto& n : names) atoms.push_back(n);
    s["atoms"] = std::move(atoms);
    sets.push_back(std::move(s));
  }
  j["sets"] = std::move(sets);
  Json covers = Json::array();
  for (const auto& [lo, hi] : m.order.covers())
    covers.push_back({m.order.label(lo), m.order.label(hi)});
  j["covers"] = std::move(covers);
  return j;
}

Json interval_set_to_json(const IntervalSet& s) {
  Json j = Json::array();
  for (const auto& p : s.pieces()) {
    Json piece;
    piece["lo"] = format_rational(p.lo);
    piece["hi"] = format_rational(p.hi);
    piece["lo_closed"] = p.lo_closed;
    piece["hi_closed"] = p.hi_closed;
    j.push_back(std::move(piece));
  }
  return j;
}

IntervalSet interval_set_from_json(const Json& j) {
  require(j.is_array(), Errc::ParseError, "interval set must be an array of pieces");
  std::vector<IntervalSet::Piece> pieces;
  for (const auto& p : j) {
    IntervalSet::Piece piece;
    piece.lo = parse_rational(member(p, "lo").get<std::string>());
    piece.hi = parse_rational(member(p, "hi").get<std::string>());
    piece.lo_closed = p.value("lo_closed", true);
    piece.hi_closed = p.value("hi_closed", true);
    pieces.push_back(piece);
  }
  return IntervalSet::from_pieces(std::move(pieces));
}

Json semilattice_to_json(const MeetSemilattice& s) {
  Json j;
  Json labels = Json::array();
  for (std::uint32_t e = 0; e < s.size(); ++e) labels.push_back(s.label(e));
  j["elements"] = std::move(labels);
  Json meet = Json::array();
  for (std::uint32_t a = 0; a < s.size(); ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < s.size(); ++b) row.push_back(s.label(s.meet(a, b)));
    meet.push_back(std::move(row));
  }
  j["meet"] = std::move(meet);
  if (s.has_join()) {
    Json join = Json::array();
    for (std::uint32_t a = 0; a < s.size(); ++a) {
      Json row = Json::array();
      for (std::uint32_t b = 0; b < s.size(); ++b) row.push_back(s.label(s.join(a, b)));
      join.push_back(std::move(row));
    }
    j["join"] = std::move(join);
  }
  return j;
}

MeetSemilattice semilattice_from_json(const Json& j) {
  auto labels = string_list(member(j, "elements"), "elements");
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t e = 0; e < labels.size(); ++e)
    require(index.emplace(labels[e], e).second, Errc::ParseError, "duplicate semilattice label");
  const std::size_t n = labels.size();
  auto read_table = [&](const Json& t, const char* what) {
    require(t.is_array() && t.size() == n, Errc::ParseError,
            std::string(what) + " table size mismatch");
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      require(t.at(a).is_array() && t.at(a).size() == n, Errc::ParseError,
              std::string(what) + " row size mismatch");
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(t.at(a).at(b).get<std::string>());
        require(it != index.end(), Errc::ParseError, std::string(what) + " entry unknown");
        table[a * n + b] = it->second;
      }
    }
    return table;
  };
  std::optional<std::vector<std::uint32_t>> join;
  if (j.contains("join")) join = read_table(j.at("join"), "join");
  return MeetSemilattice(labels, read_table(member(j, "meet"), "meet"), std::move(join));
}

Json axioms_to_json(const FormAxioms& a) {
  Json j;
  j["absorption"] = a.absorption;
  j["distributivity"] = a.distributivity;
  j["monotonicity"] = a.monotonicity;
  j["exchange"] = a.exchange;
  if (a.additivity)
    j["additivity"] = *a.additivity;
  else
    j["additivity"] = "n/a";
  return j;
}

Json form_to_json(const LatticeForm& f, const FormAxioms& axioms) {
  Json j;
  j["lattice"] = lattice_to_json(f.source());
  j["target"] = semilattice_to_json(f.target());
  Json table = Json::array();
  for (std::size_t a = 0; a < f.source().size(); ++a)
    for (std::size_t b = 0; b < f.source().size(); ++b)
      table.push_back(
          {f.source().label(a), f.source().label(b), f.target().label(f.value(a, b))});
  j["table"] = std::move(table);
  j["axioms"] = axioms_to_json(axioms);
  return j;
}

LatticeForm form_from_json(const FiniteDistributiveLattice& lattice, const Json& j) {
  auto target = std::make_shared<const MeetSemilattice>(semilattice_from_json(member(j, "target")));
  std::map<std::string, std::uint32_t> value_index;
  for (std::uint32_t e = 0; e < target->size(); ++e) value_index.emplace(target->label(e), e);
  std::map<std::string, std::size_t> element_index;
  for (std::size_t e = 0; e < lattice.size(); ++e) element_index.emplace(lattice.label(e), e);

  const std::size_t n = lattice.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<bool> seen(n * n, false);
  for (const auto& row : member(j, "table")) {
    require(row.is_array() && row.size() == 3, Errc::ParseError,
            "form table rows must be [a,b,value]");
    auto a = element_index.find(row.at(0).get<std::string>());
    auto b = element_index.find(row.at(1).get<std::string>());
    auto v = value_index.find(row.at(2).get<std::string>());
    require(a != element_index.end() && b != element_index.end(), Errc::ParseError,
            "form table references unknown lattice element");
    require(v != value_index.end(), Errc::ParseError, "form table references unknown value");
    table[a->second * n + b->second] = v->second;
    seen[a->second * n + b->second] = true;
  }
  for (bool s : seen)
    require(s, Errc::ParseError, "form table must cover every element pair");
  return LatticeForm(LatticeForm::unchecked, lattice, std::move(target), std::move(table));
}

Json w_certificate_to_json(const WCertificate& w) {
  Json j;
  j["pass"] = w.pass;
  Json atoms = Json::array();
  for (const auto& a : w.atoms) {
    Json e;
    e["cell"] = a.cell + 1;
    e["image"] = interval_set_to_json(a.image);
    Json enc = Json::array();
    for (std::size_t i = a.enclosure.find_first(); i != Bitset::npos;
         i = a.enclosure.find_next(i))
      enc.push_back(i + 1);
    e["enclosure"] = std::move(enc);
    e["pass"] = a.pass;
    atoms.push_back(std::move(e));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

Json l_certificate_to_json(const LCertificate& l) {
  Json j;
  j["status"] = l_status_name(l.status);
  Json atoms = Json::array();
  for (const auto& a : l.atoms) {
    Json e;
    e["cell"] = a.cell + 1;
    e["oracle_limit"] = interval_set_to_json(a.oracle_limit);
    Json cells = Json::array();
    for (std::size_t i = a.combinatorial_limit.find_first(); i != Bitset::npos;
         i = a.combinatorial_limit.find_next(i))
      cells.push_back(i + 1);
    e["combinatorial_limit"] = std::move(cells);
    e["pass"] = a.pass;
    atoms.push_back(std::move(e));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

Json model_report_to_json(const ModelReport& r, const std::vector<std::string>& atom_labels) {
  Json j;
  j["w_certificate"] = w_certificate_to_json(r.w);
  j["l_certificate"] = l_certificate_to_json(r.l);
  Json squares = Json::array();
  for (const auto& sq : r.squares) {
    Json e;
    e["test_set"] = set_notation(sq.test_set, atom_labels);
    e["combinatorial_attractor"] = set_notation(sq.combinatorial_attractor, atom_labels);
    if (sq.verified) {
      e["analytic_limit_of_set"] = interval_set_to_json(*sq.lhs);
      e["analytic_limit_of_attractor"] = interval_set_to_json(*sq.rhs);
      e["pass"] = sq.pass;
    } else {
      e["pass"] = "unverified";
    }
    squares.push_back(std::move(e));
  }
  j["squares"] = std::move(squares);
  j["all_pass"] = r.all_pass();
  j["any_unverified"] = r.any_unverified();
  return j;
}

Json tessellation_to_json(const MorseTessellation& t,
                          const std::vector<std::string>& atom_labels) {
  Json j;
  Json tiles = Json::array();
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    Json e;
    e["label"] = t.order.label(i);
    e["cells"] = set_notation(t.tiles[i], atom_labels);
    e["source_set"] = set_notation(t.source_sets[i], atom_labels);
    tiles.push_back(std::move(e));
  }
  j["tiles"] = std::move(tiles);
  Json covers = Json::array();
  for (const auto& [lo, hi] : t.order.covers())
    covers.push_back({t.order.label(lo), t.order.label(hi)});
  j["covers"] = std::move(covers);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::ComputeError, "cannot write " + path);
  out << content;
}

}  // namespace latmorse
