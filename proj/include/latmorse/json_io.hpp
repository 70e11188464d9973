#pragma once

#include "latmorse/attractors.hpp"
#include "latmorse/form.hpp"
#include "latmorse/grid.hpp"
#include "latmorse/lattice.hpp"
#include "latmorse/pipeline.hpp"
#include "latmorse/poset.hpp"
#include "latmorse/relation.hpp"

#include <json.hpp>

#include <string>

namespace latmorse {

using Json = nlohmann::ordered_json;

// {"elements":[...], "covers":[[lo,hi],...]}
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

// {"join_irreducibles":[...], "order":[[0/1,...]], "elements":[{"label":...,"mask":[...]}]}
Json lattice_to_json(const FiniteDistributiveLattice& l);
FiniteDistributiveLattice lattice_from_json(const Json& j);

// {"atoms":[...], "edges":[[from,to],...]}
Json relation_to_json(const Relation& f);
Relation relation_from_json(const Json& j);

// {"breakpoints":["p/q",...]}
Json grid_to_json(const GridAlgebra1D& g);
GridAlgebra1D grid_from_json(const Json& j);

// {"breakpoints":[...], "pieces":[{"slope":...,"intercept":...},...]}
Json map_to_json(const PiecewiseAffineMap& m);
PiecewiseAffineMap map_from_json(const Json& j);

// {"sets":[{"label":...,"atoms":[...]},...], "covers":[[lo,hi],...]}
Json morse_representation_to_json(const MorseRepresentation& m,
                                  const std::vector<std::string>& atom_labels);

Json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);

// {"elements":[...], "meet":[[...]], "join":[[...]]?}
Json semilattice_to_json(const MeetSemilattice& s);
MeetSemilattice semilattice_from_json(const Json& j);

// {"lattice":..., "target":..., "table":[[a,b,value],...], "axioms":{...}}
Json form_to_json(const LatticeForm& f, const FormAxioms& axioms);
LatticeForm form_from_json(const FiniteDistributiveLattice& lattice, const Json& j);

Json axioms_to_json(const FormAxioms& a);

Json w_certificate_to_json(const WCertificate& w);
Json l_certificate_to_json(const LCertificate& l);
Json model_report_to_json(const ModelReport& r, const std::vector<std::string>& atom_labels);

Json tessellation_to_json(const MorseTessellation& t, const std::vector<std::string>& atom_labels);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace latmorse
