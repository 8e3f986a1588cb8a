#ifndef SPINPIC_RELATION_ENGINE_HPP
#define SPINPIC_RELATION_ENGINE_HPP

#include "spinpic/divisor_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinpic {

enum class RelationOrigin {
    main_thm,
    bis_thm,
    open_locus,
    mu_cross,
    deligne_derivation,
    paper_table_row,
};

std::string origin_name(RelationOrigin o);

// An identity between divisor classes, stored as "class = 0" and
// normalized so the first nonzero coefficient in canonical generator
// order is positive. Equality of relations is equality of normalized
// classes.
struct Relation {
    DivisorClass lhs_minus_rhs;
    RelationOrigin origin;
};

// Flip the overall sign if the leading coefficient is negative.
DivisorClass normalize_sign(DivisorClass c);

// Un-normalized main-relation class, in the orientation
//   (2s^2-12s+12) lambda - 2s^2 mu_s + (s-1) delta - s <pairing_s>.
// The torsion certificates need this exact orientation.
DivisorClass main_relation_class(const BasisContext& ctx, long s);

// s <E~_s, EE_s> = (2s^2-12s+12) lambda - 2s^2 mu^{1/s} + (s-1) delta,
// fully expanded in the canonical basis and normalized.
Relation main_relation(const BasisContext& ctx, long s);

// The same relation assembled instead from the sigma/gamma closed form
// (a genuinely different arithmetic route; agreement with
// main_relation is a library invariant).
Relation bis_relation(const BasisContext& ctx, long s);

// Boundary-free relations on the open locus: (2s^2-12s+12) lambda =
// 2s^2 mu^{1/s}, and the lambda-free cross relation
// 2r^2(s^2-6s+6) mu^{1/r} = 2s^2(r^2-6r+6) mu^{1/s}.
Relation open_locus_relation(long r, long s);
Relation mu_cross_relation(long r, long s);

// ---- symbolic derivation through the determinant-line pairing ----

// The three pairing symbols that survive bilinear expansion once
// EE_s = omega - s E~_s (written additively) is substituted.
enum class PairingSymbol { ee, ew, ww }; // <E~,E~>, <E~,omega>, <omega,omega>

std::string pairing_symbol_name(PairingSymbol p, long s);

// Rational linear combination of pairing symbols and basis generators.
struct SymbolicClass {
    std::map<PairingSymbol, Rat> symbols;
    std::map<GeneratorId, Rat> concrete;

    bool symbol_free() const { return symbols.empty(); }
    bool integral() const;
    SymbolicClass& add_scaled(const SymbolicClass& o, const Rat& f);
    bool operator==(const SymbolicClass&) const = default;
};

struct Axiom {
    std::string name;
    SymbolicClass zero_class; // the identity, written as "... = 0"
};

struct ProofStep {
    std::string description;
    std::size_t axiom_index; // into ProofTrace::axioms
    Rat multiplier;          // expr = previous expr + multiplier * axiom
    SymbolicClass expr;
};

struct ProofTrace {
    long r = 0;
    long s = 0;
    std::vector<Axiom> axioms;
    std::vector<ProofStep> steps;
};

// Re-checks every step of the trace under exact arithmetic: each step
// differs from its predecessor by exactly the recorded multiple of one
// axiom, and the final step is symbol-free with integer coefficients.
// Throws invariant_violation on any failure.
void validate_trace(const BasisContext& ctx, const ProofTrace& trace);

struct DeligneDerivation {
    Relation relation;
    ProofTrace trace;
};

// Independent re-derivation of the main relation: sets up the axioms
//   (A1) 2 mu_s = <E,E> - <E,omega> + 2 lambda        (Deligne-Riemann-Roch)
//   (A2) <omega,omega> = s <E~,omega>                 (<omega,EE> trivial)
//   (A3) <omega,omega> = 12 lambda - delta            (Mumford isomorphism)
//   (A4) <E~,omega> - s <E~,E~> = boundary expansion of the pairing
// and eliminates the pairing symbols by exact rational linear algebra.
// The result must have integer coefficients and equal main_relation.
DeligneDerivation derive_main_via_deligne(const BasisContext& ctx, long s);

// ---- the special-case table ----

struct TableRow {
    long r = 0;
    long s = 0;
    Relation derived;                 // generic-genus mode, sigma/gamma grouping
    std::optional<Relation> printed;  // the stored published row, verbatim
    std::optional<std::string> errata;
};

// One derived row per divisor s >= 2 of r (s = r first, then
// ascending), compared against the stored published rows for r <= 8.
// Disagreements are reported in the errata field, never repaired and
// never silently accepted.
std::vector<TableRow> corollary_table(long r);

} // namespace spinpic

#endif
