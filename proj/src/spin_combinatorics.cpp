#include "spinpic/spin_combinatorics.hpp"

#include <numeric>

namespace spinpic {

namespace {

long gcd_ll(long a, long b) { return std::gcd(a, b); }

// gcd of the ell-invariant's arguments only, without the divisibility
// side condition. Sides of a separating node satisfy that condition
// automatically exactly when r | 2g-2, so the inventory uses the pure
// gcd; ell_invariant itself applies the full four-case formula.
long side_ell(long genus, long r, long mark)
{
    if (genus == 0) return 1;
    if (genus == 1) return gcd_ll(r, mark);
    return gcd_ll(2, gcd_ll(r, mark));
}

} // namespace

bool NodeOrder::valid() const
{
    if (r < 2) return false;
    if (u == 0 && v == 0) return true;
    return u > 0 && v > 0 && u < r && v < r && u + v == r;
}

SectorClass classify_sector(const NodeOrder& o)
{
    if (!o.valid()) throw usage_error("classify_sector: malformed node order");
    if (o.ramond()) return {SectorTag::ramond, o.r};
    long g = gcd_ll(o.u, o.v); // divides r since u + v = r
    return {g == 1 ? SectorTag::neveu_schwarz : SectorTag::semi_ramond, g};
}

MarkingVector MarkingVector::reduced(long r) const
{
    if (r < 1) throw usage_error("MarkingVector::reduced: level must be positive");
    MarkingVector out;
    out.m.reserve(m.size());
    for (long mi : m) out.m.push_back(mod_residue(mi, r));
    return out;
}

NodeOrder node_order_separating(long i, long r)
{
    if (r < 2) throw usage_error("node_order_separating: level must be at least 2");
    if (i < 1) throw usage_error("node_order_separating: genus part must be at least 1");
    long u = mod_residue(2 * i - 1, r);
    return {u, u == 0 ? 0 : r - u, r};
}

long c_level(long i, long s)
{
    if (s < 1) throw usage_error("c_level: divisor must be positive");
    return gcd_ll(2 * i - 1, s);
}

long d_level(long j, long s)
{
    if (s < 1) throw usage_error("d_level: divisor must be positive");
    return gcd_ll(j, s); // gcd(0, s) = s
}

long ell_invariant(long g, long r, const MarkingVector& m)
{
    if (g < 0) throw usage_error("ell_invariant: genus must be non-negative");
    if (r < 1) throw usage_error("ell_invariant: level must be positive");
    long sum = 0;
    long g0 = r;
    for (long mi : m.m) {
        sum += mi;
        g0 = gcd_ll(g0, mi);
    }
    if (g == 0) return mod_residue(2 + sum, r) == 0 ? 1 : 0;
    if (g == 1) return mod_residue(sum, r) == 0 ? g0 : 0;
    return mod_residue(sum + 2 - 2 * g, r) == 0 ? gcd_ll(2, g0) : 0;
}

long count_divisors(long n)
{
    if (n <= 0) return 0;
    long count = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d * d == n) ? 1 : 2;
    }
    return count;
}

long component_count(long g, long r, const MarkingVector& m)
{
    return count_divisors(ell_invariant(g, r, m));
}

Int spin_structure_count(long g, long r)
{
    if (g < 0) throw usage_error("spin_structure_count: genus must be non-negative");
    if (r < 1) throw usage_error("spin_structure_count: level must be positive");
    if (mod_residue(2 * g - 2, r) != 0) return 0;
    return pow_int(Int(r), static_cast<unsigned long>(2 * g));
}

Int genus1_iso_class_count(long r)
{
    if (r < 3 || r % 2 == 0)
        throw usage_error("genus1_iso_class_count: defined for odd r >= 3 only");
    Int rr(r);
    return 1 + (rr * rr - 1) / 2;
}

long node_ramification(const NodeOrder& o)
{
    if (!o.valid()) throw usage_error("node_ramification: malformed node order");
    if (o.ramond()) return 1;
    return o.r / gcd_ll(o.u, o.v);
}

std::vector<BoundaryLabel> boundary_inventory(long g, long r)
{
    if (g < 2) throw usage_error("boundary_inventory: genus must be at least 2");
    if (r < 2) throw usage_error("boundary_inventory: level must be at least 2");

    std::vector<BoundaryLabel> out;
    for (long i = 1; i <= g / 2; ++i) {
        BoundaryLabel lab;
        lab.kind = BoundaryKind::alpha;
        lab.index = i;
        lab.order = node_order_separating(i, r);
        lab.sector = classify_sector(lab.order);
        lab.ramification = r / c_level(i, r);
        long mu = lab.order.ramond() ? -1 : lab.order.u - 1;
        long mv = lab.order.ramond() ? -1 : lab.order.v - 1;
        lab.components_above = Int(count_divisors(side_ell(i, r, mu))) *
                               Int(count_divisors(side_ell(g - i, r, mv)));
        out.push_back(std::move(lab));
    }

    for (long j = 0; j <= r / 2; ++j) {
        BoundaryLabel lab;
        lab.kind = BoundaryKind::gamma;
        lab.index = j;
        lab.order = j == 0 ? NodeOrder{0, 0, r} : NodeOrder{j, r - j, r};
        lab.sector = classify_sector(lab.order);
        lab.ramification = r / d_level(j, r);
        long ell = d_level(j, r); // r when j = 0
        lab.gluing_count = Int(ell);
        if (ell % 2 == 0) {
            lab.morphism_count = Int(ell / 2);
        } else if (ell > 1) {
            lab.morphism_count_ambiguous = true;
        }
        if (r % 2 == 0 && j == r / 2) {
            long fixed = ell % 2 == 0 ? 2 : 1;
            lab.gluing_classes_mod_swap = {Int((ell - fixed) / 2), Int((ell + fixed) / 2)};
        }
        // index count on the normalized genus-(g-1) curve with the two
        // branch points marked
        lab.components_above =
            Int(count_divisors(gcd_ll(side_ell(g - 1, r, j - 1), side_ell(g - 1, r, r - j - 1))));
        out.push_back(std::move(lab));
    }
    return out;
}

Int pullback_coeff_alpha(long i, long s, long r)
{
    if (s < 1 || r < 2 || r % s != 0)
        throw usage_error("pullback_coeff_alpha: s must divide r");
    Int num = Int(r) * c_level(i, s);
    Int den = Int(s) * c_level(i, r);
    return exact_div(num, den);
}

std::vector<std::pair<long, Int>> pullback_targets_gamma(long j, long s, long r)
{
    if (s < 1 || r < 2 || r % s != 0)
        throw usage_error("pullback_targets_gamma: s must divide r");
    if (j < 0 || 2 * j > s)
        throw usage_error("pullback_targets_gamma: order must lie in [0, s/2]");

    std::vector<std::pair<long, Int>> out;
    for (long k = 0; k <= r / 2; ++k) {
        long km = mod_residue(k, s);
        if (km != mod_residue(j, s) && km != mod_residue(-j, s)) continue;
        Int num = Int(r) * d_level(k, s);
        Int den = Int(s) * d_level(k, r);
        out.emplace_back(k, exact_div(num, den));
    }
    return out;
}

} // namespace spinpic
