#include "spinpic/render.hpp"

#include <sstream>

namespace spinpic {

namespace {

std::string coeff_prefix(const Int& c, bool first)
{
    std::string out;
    if (c < 0)
        out = first ? "-" : "- ";
    else if (!first)
        out = "+ ";
    Int a = abs(c);
    if (a != 1) out += a.str() + " ";
    return out;
}

std::string generator_latex(const GeneratorId& g)
{
    switch (g.kind) {
    case GenKind::lambda: return "\\lambda";
    case GenKind::mu: return "\\mu^{1/" + std::to_string(g.index) + "}";
    case GenKind::alpha: return "\\alpha_{" + std::to_string(g.index) + "}";
    case GenKind::alpha_residue: return "\\sigma_{" + std::to_string(g.index) + "}";
    case GenKind::gamma: return "\\gamma_{" + std::to_string(g.index) + "}";
    }
    return "?";
}

std::string terms_to_string(const std::vector<std::pair<GeneratorId, Int>>& terms, bool latex)
{
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : terms) {
        if (!first) out += " ";
        out += coeff_prefix(c, first);
        out += latex ? generator_latex(g) : generator_name(g);
        first = false;
    }
    return out;
}

// Tautological part in canonical order; boundary part in the table's
// display order (gamma ascending, then the separating classes).
void split_for_display(const DivisorClass& c,
                       std::vector<std::pair<GeneratorId, Int>>& taut,
                       std::vector<std::pair<GeneratorId, Int>>& boundary)
{
    std::vector<std::pair<GeneratorId, Int>> seps;
    for (const auto& [g, coeff] : c.coefficients()) {
        if (g.kind == GenKind::lambda || g.kind == GenKind::mu)
            taut.emplace_back(g, coeff);
        else if (g.kind == GenKind::gamma)
            boundary.emplace_back(g, coeff);
        else
            seps.emplace_back(g, coeff);
    }
    boundary.insert(boundary.end(), seps.begin(), seps.end());
}

std::string relation_string(const Relation& rel, bool latex)
{
    std::vector<std::pair<GeneratorId, Int>> taut, boundary;
    split_for_display(rel.lhs_minus_rhs, taut, boundary);
    for (auto& [g, c] : boundary) c = -c;
    return terms_to_string(taut, latex) + " = " + terms_to_string(boundary, latex);
}

} // namespace

std::string class_to_text(const DivisorClass& c)
{
    std::vector<std::pair<GeneratorId, Int>> terms(c.coefficients().begin(), c.coefficients().end());
    return terms_to_string(terms, false);
}

std::string relation_display(const Relation& rel) { return relation_string(rel, false); }

std::string relation_latex(const Relation& rel) { return relation_string(rel, true); }

std::string table_to_text(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    long current_r = -1;
    for (const TableRow& row : rows) {
        if (row.r != current_r) {
            out << "r=" << row.r << "\n";
            current_r = row.r;
        }
        out << "  s=" << row.s << ": " << relation_display(row.derived);
        if (!row.printed)
            out << "   [no printed row stored]";
        else if (row.errata)
            out << "   [ERRATUM vs printed " << relation_display(*row.printed) << "]";
        else
            out << "   [matches printed row]";
        out << "\n";
    }
    std::size_t n_errata = 0;
    for (const TableRow& row : rows)
        if (row.errata) ++n_errata;
    out << "errata: " << n_errata << "\n";
    for (const TableRow& row : rows)
        if (row.errata) out << "  (r=" << row.r << ", s=" << row.s << ") " << *row.errata << "\n";
    return out.str();
}

std::string table_to_latex(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "\\begin{array}{|l|rcl|}\n\\hline\n";
    long current_r = -1;
    for (const TableRow& row : rows) {
        std::string head;
        if (row.r != current_r) {
            if (current_r != -1) out << "\\hline\n";
            head = "r=" + std::to_string(row.r);
            current_r = row.r;
        }
        std::vector<std::pair<GeneratorId, Int>> taut, boundary;
        split_for_display(row.derived.lhs_minus_rhs, taut, boundary);
        for (auto& [g, c] : boundary) c = -c;
        out << head << " & " << terms_to_string(taut, true) << " & = & "
            << terms_to_string(boundary, true);
        if (row.errata) out << " \\quad\\text{(erratum: see notes)}";
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{array}\n";
    return out.str();
}

namespace {

std::string rat_str(const Rat& q)
{
    return q.str();
}

} // namespace

std::string symbolic_to_text(const SymbolicClass& sc, long s)
{
    std::string out;
    bool first = true;
    auto emit = [&](const std::string& name, const Rat& c) {
        if (!first) out += " ";
        if (c < 0)
            out += first ? "-" : "- ";
        else if (!first)
            out += "+ ";
        Rat a = c < 0 ? Rat(-c) : c;
        if (a != 1) out += rat_str(a) + " ";
        out += name;
        first = false;
    };
    for (const auto& [p, c] : sc.symbols) emit(pairing_symbol_name(p, s), c);
    for (const auto& [g, c] : sc.concrete) emit(generator_name(g), c);
    return first ? "0" : out;
}

std::string trace_to_text(const ProofTrace& trace)
{
    std::ostringstream out;
    out << "derivation at level s=" << trace.s << " inside level r=" << trace.r << "\n";
    out << "axioms:\n";
    for (std::size_t i = 0; i < trace.axioms.size(); ++i)
        out << "  (A" << i + 1 << ") " << trace.axioms[i].name << "\n";
    out << "steps:\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const ProofStep& st = trace.steps[i];
        out << "  " << i + 1 << ". " << st.description << " [A" << st.axiom_index + 1
            << " x " << rat_str(st.multiplier) << "]\n";
        out << "     0 = " << symbolic_to_text(st.expr, trace.s) << "\n";
    }
    return out.str();
}

std::string certificate_to_text(const TorsionCertificate& cert)
{
    std::ostringstream out;
    out << "torsion certificate, case " << static_cast<int>(cert.kind) << ", r=" << cert.r;
    if (cert.s != 0) out << ", s=" << cert.s << ", d=" << cert.d;
    out << "\n";
    out << "candidate: " << class_to_text(cert.candidate) << "\n";
    out << "boundary multiple: " << cert.boundary_multiple.str() << ", boundary class: "
        << class_to_text(cert.boundary_class) << "\n";
    for (const TorsionWitness& w : cert.witnesses)
        out << "witness: gamma_0 coefficient " << w.gamma0_coefficient.str() << " = "
            << w.residue.str() << " (mod " << w.modulus << "), nonzero\n";
    out << "order in presented group: " << cert.presented_order.str() << "\n";
    if (cert.derived_lambda_constant)
        out << "lambda constant: derived " << cert.derived_lambda_constant->str()
            << ", printed " << cert.printed_lambda_constant->str() << " (suspected misprint)\n";
    if (!cert.notes.empty()) out << "note: " << cert.notes << "\n";
    out << "certified order: " << cert.order_statement << "\n";
    return out.str();
}

std::string presentation_to_text(const AbelianPresentation& p, const GroupStructure& st)
{
    std::ostringstream out;
    out << "generators:";
    for (const std::string& g : p.generators) out << " " << g;
    out << "\nrelations:\n";
    for (std::size_t i = 0; i < p.relations.rows(); ++i) {
        out << "  ";
        for (std::size_t j = 0; j < p.relations.cols(); ++j)
            out << (j ? " " : "") << p.relations.at(i, j).str();
        out << "\n";
    }
    out << "structure (upper bound onto the actual subgroup): " << structure_name(st) << "\n";
    return out.str();
}

std::string genus1_to_text(const Genus1Report& rep)
{
    std::ostringstream out;
    out << "genus 1, principal component, r=" << rep.r << "\n";
    out << "equivariant weights: (" << rep.weight_quartic.str() << ", "
        << rep.weight_sextic.str() << ")\n";
    out << "open Chow ring: Z[t]/" << rep.chow.modulus_linear.str() << "t\n";
    out << "compactified Chow ring: Z[t]/" << rep.chow.modulus_quadratic.str() << "t^2\n";
    out << "Pic (open) = <mu+> with lambda = " << rep.r << " mu+; structure "
        << structure_name(rep.component1_structure) << "\n";
    out << "order of mu+: " << rep.mu_plus_order.str() << "\n";
    out << "Pic (compactified) = <mu+> = Z\n";
    return out.str();
}

std::string component_bounds_to_text(const ComponentBoundReport& rep)
{
    std::ostringstream out;
    out << "genus 1, index-" << rep.d << " component, r=" << rep.r << "\n";
    out << "automorphism target: Z/" << rep.target_order.str() << ", image exponent "
        << rep.image_exponent.str() << "\n";
    out << "lower bound on order of mu^{" << rep.d << "/" << rep.r
        << ",+}: " << rep.lower_bound.str() << "\n";
    out << "order divides " << rep.order_divides.str()
        << " (from 2r^2 lambda = 0, lambda = (r/d) mu+)\n";
    out << "CONJECTURE (reported, not asserted): order " << rep.conjecture_order.str() << "\n";
    return out.str();
}

std::string boundary_to_text(const std::vector<BoundaryLabel>& labels)
{
    std::ostringstream out;
    for (const BoundaryLabel& lab : labels) {
        out << (lab.kind == BoundaryKind::alpha ? "alpha_" : "gamma_") << lab.index;
        out << ": order {" << lab.order.u << "," << lab.order.v << "}";
        out << ", sector ";
        switch (lab.sector.tag) {
        case SectorTag::ramond: out << "Ramond"; break;
        case SectorTag::neveu_schwarz: out << "Neveu-Schwarz"; break;
        case SectorTag::semi_ramond: out << "semi-Ramond"; break;
        }
        out << " (ell=" << lab.sector.ell << ")";
        out << ", ramification " << lab.ramification;
        out << ", components above: " << lab.components_above.str();
        if (lab.gluing_count) out << ", gluings: " << lab.gluing_count->str();
        if (lab.morphism_count) out << ", morphisms: " << lab.morphism_count->str();
        if (lab.morphism_count_ambiguous) out << ", morphism count ambiguous (odd gluing count)";
        if (lab.gluing_classes_mod_swap)
            out << ", gluing classes mod swap in [" << lab.gluing_classes_mod_swap->first.str()
                << ", " << lab.gluing_classes_mod_swap->second.str() << "]";
        out << "\n";
    }
    return out.str();
}

// ---- json ----

namespace {

json int_json(const Int& v) { return v.str(); }

Int int_from_json(const json& j) { return Int(j.get<std::string>()); }

json rat_json(const Rat& v) { return v.str(); }

const char* kind_key(GenKind k)
{
    switch (k) {
    case GenKind::lambda: return "lambda";
    case GenKind::mu: return "mu";
    case GenKind::alpha: return "alpha";
    case GenKind::alpha_residue: return "alpha_residue";
    case GenKind::gamma: return "gamma";
    }
    return "?";
}

} // namespace

json context_to_json(const BasisContext& ctx)
{
    json j;
    j["r"] = ctx.r();
    if (ctx.is_generic())
        j["genus"] = "generic";
    else
        j["genus"] = ctx.genus();
    return j;
}

BasisContext context_from_json(const json& j)
{
    long r = j.at("r").get<long>();
    if (j.at("genus").is_string()) {
        if (j.at("genus").get<std::string>() != "generic")
            throw usage_error("context_from_json: bad genus field");
        return BasisContext::generic(r);
    }
    return BasisContext::finite(j.at("genus").get<long>(), r);
}

json class_to_json(const DivisorClass& c)
{
    json j;
    j["context"] = context_to_json(c.context());
    j["lambda"] = "0";
    j["mu"] = json::object();
    j["alpha"] = json::object();
    j["alpha_residue"] = json::object();
    j["gamma"] = json::object();
    for (const auto& [g, coeff] : c.coefficients()) {
        if (g.kind == GenKind::lambda)
            j["lambda"] = int_json(coeff);
        else
            j[kind_key(g.kind)][std::to_string(g.index)] = int_json(coeff);
    }
    return j;
}

DivisorClass class_from_json(const json& j)
{
    DivisorClass c(context_from_json(j.at("context")));
    c.add_term(lambda_id(), Int(j.at("lambda").get<std::string>()));
    auto read = [&](const char* key, GenKind kind) {
        for (const auto& [k, v] : j.at(key).items())
            c.add_term({kind, std::stol(k)}, int_from_json(v));
    };
    read("mu", GenKind::mu);
    read("alpha", GenKind::alpha);
    read("alpha_residue", GenKind::alpha_residue);
    read("gamma", GenKind::gamma);
    return c;
}

json relation_to_json(const Relation& rel)
{
    json j;
    j["origin"] = origin_name(rel.origin);
    j["class"] = class_to_json(rel.lhs_minus_rhs);
    j["display"] = relation_display(rel);
    return j;
}

Relation relation_from_json(const json& j)
{
    std::string origin = j.at("origin").get<std::string>();
    RelationOrigin o = RelationOrigin::main_thm;
    for (RelationOrigin cand :
         {RelationOrigin::main_thm, RelationOrigin::bis_thm, RelationOrigin::open_locus,
          RelationOrigin::mu_cross, RelationOrigin::deligne_derivation,
          RelationOrigin::paper_table_row})
        if (origin_name(cand) == origin) o = cand;
    return {class_from_json(j.at("class")), o};
}

json table_to_json(const std::vector<TableRow>& rows)
{
    json j;
    j["rows"] = json::array();
    j["errata"] = json::array();
    for (const TableRow& row : rows) {
        json rj;
        rj["r"] = row.r;
        rj["s"] = row.s;
        rj["derived"] = relation_to_json(row.derived);
        rj["printed"] = row.printed ? relation_to_json(*row.printed) : json(nullptr);
        rj["erratum"] = row.errata ? json(*row.errata) : json(nullptr);
        j["rows"].push_back(std::move(rj));
        if (row.errata) {
            json e;
            e["r"] = row.r;
            e["s"] = row.s;
            e["printed"] = relation_display(*row.printed);
            e["derived"] = relation_display(row.derived);
            e["description"] = *row.errata;
            j["errata"].push_back(std::move(e));
        }
    }
    return j;
}

namespace {

json symbolic_to_json(const SymbolicClass& sc, long s)
{
    json j;
    j["symbols"] = json::object();
    for (const auto& [p, c] : sc.symbols) j["symbols"][pairing_symbol_name(p, s)] = rat_json(c);
    j["terms"] = json::object();
    for (const auto& [g, c] : sc.concrete) j["terms"][generator_name(g)] = rat_json(c);
    return j;
}

} // namespace

json trace_to_json(const ProofTrace& trace)
{
    json j;
    j["r"] = trace.r;
    j["s"] = trace.s;
    j["axioms"] = json::array();
    for (const Axiom& a : trace.axioms) {
        json aj;
        aj["name"] = a.name;
        aj["identity"] = symbolic_to_json(a.zero_class, trace.s);
        j["axioms"].push_back(std::move(aj));
    }
    j["steps"] = json::array();
    for (const ProofStep& st : trace.steps) {
        json sj;
        sj["description"] = st.description;
        sj["axiom"] = st.axiom_index;
        sj["multiplier"] = rat_json(st.multiplier);
        sj["expr"] = symbolic_to_json(st.expr, trace.s);
        j["steps"].push_back(std::move(sj));
    }
    return j;
}

json certificate_to_json(const TorsionCertificate& cert)
{
    json j;
    j["case"] = static_cast<int>(cert.kind);
    j["r"] = cert.r;
    j["s"] = cert.s ? json(cert.s) : json(nullptr);
    j["d"] = cert.d ? json(cert.d) : json(nullptr);
    j["candidate"] = class_to_json(cert.candidate);
    j["candidate_display"] = class_to_text(cert.candidate);
    j["boundary_multiple"] = int_json(cert.boundary_multiple);
    j["boundary_class"] = class_to_json(cert.boundary_class);
    j["witnesses"] = json::array();
    for (const TorsionWitness& w : cert.witnesses) {
        json wj;
        wj["generator"] = "gamma_0";
        wj["modulus"] = w.modulus;
        wj["coefficient"] = int_json(w.gamma0_coefficient);
        wj["residue"] = int_json(w.residue);
        j["witnesses"].push_back(std::move(wj));
    }
    j["presented_order"] = int_json(cert.presented_order);
    j["order"] = cert.order_statement;
    j["lambda_constant_derived"] =
        cert.derived_lambda_constant ? json(int_json(*cert.derived_lambda_constant)) : json(nullptr);
    j["lambda_constant_printed"] =
        cert.printed_lambda_constant ? json(int_json(*cert.printed_lambda_constant)) : json(nullptr);
    j["notes"] = cert.notes;
    return j;
}

json presentation_to_json(const AbelianPresentation& p, const GroupStructure& st)
{
    json j;
    j["generators"] = p.generators;
    j["relations"] = json::array();
    for (std::size_t i = 0; i < p.relations.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < p.relations.cols(); ++k)
            row.push_back(int_json(p.relations.at(i, k)));
        j["relations"].push_back(std::move(row));
    }
    json stj;
    stj["free_rank"] = st.free_rank;
    stj["torsion_factors"] = json::array();
    for (const Int& f : st.torsion_factors) stj["torsion_factors"].push_back(int_json(f));
    j["structure"] = std::move(stj);
    j["structure_name"] = structure_name(st);
    j["note"] = "upper bound: quotient mapping onto the subgroup generated by these classes";
    return j;
}

json genus1_to_json(const Genus1Report& rep)
{
    json j;
    j["r"] = rep.r;
    j["weights"] = json::array({int_json(rep.weight_quartic), int_json(rep.weight_sextic)});
    j["chow_open_linear_modulus"] = int_json(rep.chow.modulus_linear);
    j["chow_compactified_quadratic_modulus"] = int_json(rep.chow.modulus_quadratic);
    j["component1"] = presentation_to_json(rep.component1, rep.component1_structure);
    j["mu_plus_order"] = int_json(rep.mu_plus_order);
    j["pic_compactified"] = "Z, generated by mu+";
    return j;
}

json component_bounds_to_json(const ComponentBoundReport& rep)
{
    json j;
    j["r"] = rep.r;
    j["d"] = rep.d;
    j["target_order"] = int_json(rep.target_order);
    j["image_exponent"] = int_json(rep.image_exponent);
    j["lower_bound"] = int_json(rep.lower_bound);
    j["order_divides"] = int_json(rep.order_divides);
    j["conjecture_order"] = int_json(rep.conjecture_order);
    j["conjecture_note"] = "CONJECTURE: reported from the source, not asserted";
    return j;
}

json boundary_to_json(long g, long r, const std::vector<BoundaryLabel>& labels)
{
    json j;
    j["g"] = g;
    j["r"] = r;
    j["labels"] = json::array();
    for (const BoundaryLabel& lab : labels) {
        json lj;
        lj["kind"] = lab.kind == BoundaryKind::alpha ? "alpha" : "gamma";
        lj["index"] = lab.index;
        lj["u"] = lab.order.u;
        lj["v"] = lab.order.v;
        switch (lab.sector.tag) {
        case SectorTag::ramond: lj["sector"] = "ramond"; break;
        case SectorTag::neveu_schwarz: lj["sector"] = "neveu-schwarz"; break;
        case SectorTag::semi_ramond: lj["sector"] = "semi-ramond"; break;
        }
        lj["ell"] = lab.sector.ell;
        lj["ramification"] = lab.ramification;
        lj["components_above"] = int_json(lab.components_above);
        lj["gluing_count"] = lab.gluing_count ? json(int_json(*lab.gluing_count)) : json(nullptr);
        lj["morphism_count"] =
            lab.morphism_count ? json(int_json(*lab.morphism_count)) : json(nullptr);
        lj["morphism_count_ambiguous"] = lab.morphism_count_ambiguous;
        if (lab.gluing_classes_mod_swap)
            lj["gluing_classes_mod_swap"] =
                json::array({int_json(lab.gluing_classes_mod_swap->first),
                             int_json(lab.gluing_classes_mod_swap->second)});
        else
            lj["gluing_classes_mod_swap"] = json(nullptr);
        j["labels"].push_back(std::move(lj));
    }
    return j;
}

} // namespace spinpic
