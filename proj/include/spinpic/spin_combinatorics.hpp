#ifndef SPINPIC_SPIN_COMBINATORICS_HPP
#define SPINPIC_SPIN_COMBINATORICS_HPP

#include "spinpic/numbers.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace spinpic {

// Order {u, v} of a node at level r: either u = v = 0 (Ramond) or
// u + v = r with 0 < u, v < r.
struct NodeOrder {
    long u = 0;
    long v = 0;
    long r = 2;

    bool ramond() const { return u == 0 && v == 0; }
    bool valid() const;
};

enum class SectorTag { ramond, neveu_schwarz, semi_ramond };

// tag together with ell = gcd(u, v, r); Ramond convention ell = r.
struct SectorClass {
    SectorTag tag = SectorTag::ramond;
    long ell = 0;
};

SectorClass classify_sector(const NodeOrder& o);

// Marking types at the points; entries are stored as given, reduction
// mod r is a separate explicit operation.
struct MarkingVector {
    std::vector<long> m;

    MarkingVector reduced(long r) const;
};

enum class BoundaryKind { alpha, gamma };

struct BoundaryLabel {
    BoundaryKind kind = BoundaryKind::alpha;
    long index = 0; // i for alpha, j for gamma
    NodeOrder order;
    SectorClass sector;
    long ramification = 1;
    Int components_above = 1;
    // gamma only: raw gluing count ell = gcd(j, r) (r for j = 0). The
    // halved morphism count is only well-defined for even ell; odd
    // ell > 1 is reported as ambiguous instead of guessed.
    std::optional<Int> gluing_count;
    std::optional<Int> morphism_count;
    bool morphism_count_ambiguous = false;
    // j = r/2 only: the count of gluings modulo inverting the node
    // branches is reported as a range [min, max] because fixed points
    // of the inversion are ambiguous.
    std::optional<std::pair<Int, Int>> gluing_classes_mod_swap;
};

// u(i) = (2i-1) mod r and v(i) = r - u(i) (both zero in the Ramond
// case 2i-1 = 0 mod r).
NodeOrder node_order_separating(long i, long r);

// c^{1/s}_i = gcd(2i-1, s) and d^{1/s}_j = gcd(j, s), with gcd(0, s) = s.
long c_level(long i, long s);
long d_level(long j, long s);

// The component invariant: 1 / gcd(r, m) / gcd(2, r, m) for g = 0/1/>1
// under the matching divisibility condition, 0 otherwise (empty stack).
long ell_invariant(long g, long r, const MarkingVector& m);

// Number of irreducible components = number of positive divisors of
// the ell invariant; 0 when ell = 0.
long component_count(long g, long r, const MarkingVector& m);

long count_divisors(long n);

// r^{2g} when r | 2g-2, else 0.
Int spin_structure_count(long g, long r);

// 1 + (r^2 - 1)/2 for odd r >= 3 (one marked point, trivial type).
Int genus1_iso_class_count(long r);

// r / gcd(u, v), Ramond convention gcd(0,0) = r (unramified).
long node_ramification(const NodeOrder& o);

std::vector<BoundaryLabel> boundary_inventory(long g, long r);

// Pullback coefficient (r * c_level(i,s)) / (s * c_level(i,r)) of
// alpha_i under the level-s to level-r root-forgetting map; always an
// exact integer.
Int pullback_coeff_alpha(long i, long s, long r);

// All k in [0, r/2] with k = +-j (mod s), with the integral pullback
// coefficient (r * d_level(k,s)) / (s * d_level(k,r)) for each.
std::vector<std::pair<long, Int>> pullback_targets_gamma(long j, long s, long r);

} // namespace spinpic

#endif
