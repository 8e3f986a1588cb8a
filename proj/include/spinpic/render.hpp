#ifndef SPINPIC_RENDER_HPP
#define SPINPIC_RENDER_HPP

#include "spinpic/picard_presentation.hpp"
#include "spinpic/relation_engine.hpp"
#include "spinpic/spin_combinatorics.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinpic {

using json = nlohmann::json;

// ---- display (text / latex) ----

std::string class_to_text(const DivisorClass& c);
// "4 lambda + 8 mu^{1/2} = gamma_0": tautological terms left, negated
// boundary terms right.
std::string relation_display(const Relation& rel);
std::string relation_latex(const Relation& rel);

std::string table_to_text(const std::vector<TableRow>& rows);
// The published table's tabular layout: array{|l|rcl|} with one block
// per level.
std::string table_to_latex(const std::vector<TableRow>& rows);

std::string symbolic_to_text(const SymbolicClass& sc, long s);
std::string trace_to_text(const ProofTrace& trace);
std::string certificate_to_text(const TorsionCertificate& cert);
std::string presentation_to_text(const AbelianPresentation& p, const GroupStructure& st);
std::string genus1_to_text(const Genus1Report& rep);
std::string component_bounds_to_text(const ComponentBoundReport& rep);
std::string boundary_to_text(const std::vector<BoundaryLabel>& labels);

// ---- canonical structured output ----
//
// All arbitrary-precision integers are encoded as decimal strings so
// values of any size round-trip exactly; keys are sorted; no floating
// point appears anywhere.

json context_to_json(const BasisContext& ctx);
BasisContext context_from_json(const json& j);

json class_to_json(const DivisorClass& c);
DivisorClass class_from_json(const json& j);

json relation_to_json(const Relation& rel);
Relation relation_from_json(const json& j);

json table_to_json(const std::vector<TableRow>& rows);
json trace_to_json(const ProofTrace& trace);
json certificate_to_json(const TorsionCertificate& cert);
json presentation_to_json(const AbelianPresentation& p, const GroupStructure& st);
json genus1_to_json(const Genus1Report& rep);
json component_bounds_to_json(const ComponentBoundReport& rep);
json boundary_to_json(long g, long r, const std::vector<BoundaryLabel>& labels);

} // namespace spinpic

#endif
