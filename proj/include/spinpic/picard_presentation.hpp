#ifndef SPINPIC_PICARD_PRESENTATION_HPP
#define SPINPIC_PICARD_PRESENTATION_HPP

#include "spinpic/divisor_algebra.hpp"
#include "spinpic/exact_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinpic {

// Generators plus an integer relation matrix (rows are relations in
// generator coordinates). Every presented group in this module is an
// upper bound: a quotient mapping onto the actual subgroup of the
// Picard group generated by the named classes. Completeness of the
// relation list is not claimed.
struct AbelianPresentation {
    std::vector<std::string> generators;
    IntMatrix relations;
};

struct GroupStructure {
    long free_rank = 0;
    std::vector<Int> torsion_factors; // each >= 2, in divisibility order
};

GroupStructure group_structure(const AbelianPresentation& p);

std::string structure_name(const GroupStructure& s);

// Generators lambda, mu^{1/s} for the divisors s >= 2 of r (ascending),
// one open-locus relation per divisor; structure via Smith normal form.
std::pair<AbelianPresentation, GroupStructure> presented_open_picard(long r);

// ---- torsion certificates ----

enum class TorsionCase {
    even_r = 1,       // r even: half of r^2 mu - (r^2-6r+6) lambda, order 4
    three_divides = 2, // 3 | r: a third of the same class, order 3 or 6
    pair_even = 3,     // r = s d, d even: the mu_s - mu_r family, order 4
    pair_three = 4,    // r = s d, 3 | d: same family, order 3 or 6
    composite = 5,     // 6 | r: a sixth of the case-1/2 class, order 12
};

struct TorsionWitness {
    int modulus = 2;           // 2 or 3
    Int gamma0_coefficient;    // coefficient of gamma_0 in the boundary class
    Int residue;               // gamma0_coefficient mod modulus, nonzero
};

struct TorsionCertificate {
    TorsionCase kind = TorsionCase::even_r;
    long r = 0;
    long s = 0; // cases 3-4 only (d = r/s)
    long d = 0;
    DivisorClass candidate;    // integral class over lambda and mu only
    Int boundary_multiple;     // 4, 6 or 12: boundary_multiple * candidate
                               // is minus the pure boundary class below
    DivisorClass boundary_class;
    std::vector<TorsionWitness> witnesses;
    Int presented_order;       // order of the candidate in the presented group
    std::string order_statement; // "4", "3 or 6", "12"
    // cases 3-4: the lambda constant is derived in-repo; the published
    // value differs and is reported alongside, never adopted silently.
    std::optional<Int> derived_lambda_constant;
    std::optional<Int> printed_lambda_constant;
    std::string notes;
};

// Builds, checks and certifies the torsion element for the given case.
// Divisibility preconditions (r even / 3 | r / d even / 3 | d) raise
// usage_error; a vanishing witness raises certification_failure.
TorsionCertificate torsion_certificate(long r, TorsionCase c, std::optional<long> s = std::nullopt);

// ---- genus 1 ----

// The principal genus-1 component: equivariant weights (4r, 6r) give
// the compactified Chow ring Z[t]/(24 r^2 t^2); the discriminant class
// has degree 12r, giving the open Chow ring Z[t]/(12r t) and cyclic
// Picard group of order 12r generated by mu+ (with lambda = r mu+).
struct ChowPresentation {
    std::string generator = "t";
    Int modulus_linear;    // open locus: Z[t]/(modulus_linear * t)
    Int modulus_quadratic; // compactified: Z[t]/(modulus_quadratic * t^2)
};

struct Genus1Report {
    long r = 0;
    Int weight_quartic;  // 4r
    Int weight_sextic;   // 6r
    ChowPresentation chow;
    AbelianPresentation component1; // generators mu+, lambda
    GroupStructure component1_structure;
    Int mu_plus_order; // computed from the presentation, equals 12r
};

Genus1Report genus1_chow(long r);

// Lower bounds on the order of mu^{d/r,+} on the index-d genus-1
// component, from the order of its image in a cyclic automorphism
// target; the published conjectural order is reported alongside,
// labeled as a conjecture, never asserted.
struct ComponentBoundReport {
    long r = 0;
    long d = 0;
    Int target_order;    // 4r (d=2), 3r (d=3), r (d>3)
    Int image_exponent;  // 2, 3, d
    Int lower_bound;     // order of the image element
    Int order_divides;   // from 2 r^2 lambda = 0 with lambda = (r/d) mu+
    Int conjecture_order;
};

ComponentBoundReport genus1_component_bounds(long r, long d);

// Genus-1 sanity: the main relation specialized to the principal
// component (mu = lambda, delta = 12 lambda, vanishing pairing) must
// collapse to zero; returns the residual lambda coefficient.
Int genus1_relation_residual(long r);

} // namespace spinpic

#endif
