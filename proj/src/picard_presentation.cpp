#include "spinpic/picard_presentation.hpp"

#include "spinpic/relation_engine.hpp"

#include <algorithm>

namespace spinpic {

GroupStructure group_structure(const AbelianPresentation& p)
{
    if (p.relations.rows() > 0 && p.relations.cols() != p.generators.size())
        throw usage_error("group_structure: relation width does not match generator count");

    GroupStructure out;
    long rank = 0;
    if (p.relations.rows() > 0) {
        SnfResult s = snf(p.relations);
        for (const Int& f : s.invariant_factors) {
            if (f == 0) continue;
            ++rank;
            if (f >= 2) out.torsion_factors.push_back(f);
        }
    }
    out.free_rank = static_cast<long>(p.generators.size()) - rank;
    return out;
}

std::string structure_name(const GroupStructure& s)
{
    std::string out;
    for (long i = 0; i < s.free_rank; ++i) out += out.empty() ? "Z" : " x Z";
    for (const Int& f : s.torsion_factors) {
        if (!out.empty()) out += " x ";
        out += "Z/" + f.str();
    }
    return out.empty() ? "0" : out;
}

namespace {

std::vector<long> proper_divisors_from_two(long r)
{
    std::vector<long> out;
    for (long s = 2; s <= r; ++s)
        if (r % s == 0) out.push_back(s);
    return out;
}

// First nonzero entry made positive, for deterministic presentations.
void sign_normalize_row(IntMatrix& m, std::size_t row)
{
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(row, j) == 0) continue;
        if (m.at(row, j) < 0) m.negate_row(row);
        return;
    }
}

// Coordinates of a lambda/mu class in the presented-group basis
// (lambda, then mu_s ascending). usage_error on boundary support.
std::vector<Int> open_coordinates(long r, const DivisorClass& c)
{
    std::vector<long> divs = proper_divisors_from_two(r);
    std::vector<Int> coords(divs.size() + 1);
    for (const auto& [g, coeff] : c.coefficients()) {
        if (g.kind == GenKind::lambda) {
            coords[0] = coeff;
        } else if (g.kind == GenKind::mu) {
            auto it = std::find(divs.begin(), divs.end(), g.index);
            if (it == divs.end())
                throw usage_error("open_coordinates: mu index is not a divisor of r");
            coords[1 + (it - divs.begin())] = coeff;
        } else {
            throw usage_error("open_coordinates: class has boundary support");
        }
    }
    return coords;
}

IntMatrix open_relation_matrix(long r)
{
    std::vector<long> divs = proper_divisors_from_two(r);
    IntMatrix rel(divs.size(), divs.size() + 1);
    for (std::size_t k = 0; k < divs.size(); ++k) {
        Int s(divs[k]);
        rel.at(k, 0) = 2 * s * s - 12 * s + 12;
        rel.at(k, 1 + k) = -2 * s * s;
        sign_normalize_row(rel, k);
    }
    return rel;
}

} // namespace

std::pair<AbelianPresentation, GroupStructure> presented_open_picard(long r)
{
    if (r < 2) throw usage_error("presented_open_picard: level must be at least 2");

    AbelianPresentation p;
    p.generators.push_back("lambda");
    for (long s : proper_divisors_from_two(r))
        p.generators.push_back("mu^{1/" + std::to_string(s) + "}");
    p.relations = open_relation_matrix(r);

    GroupStructure st = group_structure(p);
    if (st.free_rank < 1)
        throw invariant_violation("presented open Picard group lost its free part");
    return {std::move(p), std::move(st)};
}

namespace {

Int presented_order_of(long r, const DivisorClass& candidate)
{
    auto order = element_order_mod_lattice(open_relation_matrix(r), open_coordinates(r, candidate));
    if (!order)
        throw invariant_violation("candidate has infinite order in the presented group");
    return *order;
}

TorsionWitness make_witness(const DivisorClass& boundary, int modulus)
{
    TorsionWitness w;
    w.modulus = modulus;
    w.gamma0_coefficient = boundary.coefficient(gamma_id(0));
    w.residue = mod_residue(w.gamma0_coefficient, Int(modulus));
    if (w.residue == 0)
        throw certification_failure("nonvanishing witness failed: gamma_0 coefficient " +
                                    w.gamma0_coefficient.str() + " vanishes mod " +
                                    std::to_string(modulus));
    return w;
}

// Divide every coefficient of c by n, asserting exactness.
DivisorClass scale_down(const DivisorClass& c, const Int& n)
{
    DivisorClass out(c.context());
    for (const auto& [g, coeff] : c.coefficients()) out.add_term(g, exact_div(coeff, n));
    return out;
}

} // namespace

TorsionCertificate torsion_certificate(long r, TorsionCase kind, std::optional<long> s_opt)
{
    if (r < 2) throw usage_error("torsion_certificate: level must be at least 2");
    BasisContext ctx = BasisContext::generic(r);
    Int rr(r);

    if (kind == TorsionCase::even_r || kind == TorsionCase::three_divides ||
        kind == TorsionCase::composite) {
        long div = kind == TorsionCase::even_r ? 2 : kind == TorsionCase::three_divides ? 3 : 6;
        if (r % div != 0)
            throw usage_error("torsion_certificate: case requires " + std::to_string(div) + " | r");

        DivisorClass doubled = (rr * rr) * DivisorClass::mu(ctx, r) -
                               (rr * rr - 6 * rr + 6) * DivisorClass::lambda(ctx);
        DivisorClass candidate = scale_down(doubled, Int(div)); // integrality checked term-wise
        Int multiple = 2 * div;

        // boundary = -(multiple * candidate + main relation) = (1-r) delta + r <pairing>
        DivisorClass boundary = -(multiple * candidate + main_relation_class(ctx, r));
        if (!boundary.boundary_only())
            throw invariant_violation("torsion boundary class has tautological support");

        std::vector<TorsionWitness> witnesses;
        if (div != 3) witnesses.push_back(make_witness(boundary, 2));
        if (div != 2) witnesses.push_back(make_witness(boundary, 3));

        TorsionCertificate cert{kind,
                                r,
                                0,
                                0,
                                std::move(candidate),
                                multiple,
                                std::move(boundary),
                                std::move(witnesses),
                                Int(0),
                                div == 2 ? "4" : div == 3 ? "3 or 6" : "12",
                                std::nullopt,
                                std::nullopt,
                                ""};
        cert.presented_order = presented_order_of(r, cert.candidate);
        return cert;
    }

    if (!s_opt) throw usage_error("torsion_certificate: cases 3-4 need the divisor s");
    long s = *s_opt;
    if (s < 1 || r % s != 0) throw usage_error("torsion_certificate: s must divide r");
    long d = r / s;
    bool even_case = kind == TorsionCase::pair_even;
    if (even_case && d % 2 != 0)
        throw usage_error("torsion_certificate: case 3 requires d = r/s even");
    if (!even_case && d % 3 != 0)
        throw usage_error("torsion_certificate: case 4 requires 3 | d = r/s");

    Int dd(d);
    Int k_derived = dd * dd - rr * dd + rr - 1;

    long div = even_case ? 2 : 3;
    DivisorClass doubled = (rr * rr) * (DivisorClass::mu(ctx, s) - DivisorClass::mu(ctx, r)) -
                           (6 * k_derived) * DivisorClass::lambda(ctx);
    DivisorClass candidate = scale_down(doubled, Int(div));
    Int multiple = 2 * div;

    DivisorClass combination =
        main_relation_class(ctx, r) - (dd * dd) * main_relation_class(ctx, s);
    DivisorClass boundary = multiple * candidate - combination;
    if (!boundary.boundary_only())
        throw invariant_violation("torsion boundary class has tautological support");

    std::vector<TorsionWitness> witnesses{make_witness(boundary, even_case ? 2 : 3)};

    TorsionCertificate cert{kind,
                            r,
                            s,
                            d,
                            std::move(candidate),
                            multiple,
                            std::move(boundary),
                            std::move(witnesses),
                            Int(0),
                            even_case ? "4" : "3 or 6",
                            k_derived,
                            dd * dd - rr * dd + rr + 1,
                            "lambda constant derived from main_rel(r) - d^2 main_rel(s); the "
                            "published constant d^2-rd+r+1 does not make the combination a "
                            "boundary class and is reported as a suspected misprint"};
    cert.presented_order = presented_order_of(r, cert.candidate);
    return cert;
}

Genus1Report genus1_chow(long r)
{
    if (r < 1) throw usage_error("genus1_chow: level must be positive");
    Int rr(r);

    Genus1Report rep;
    rep.r = r;
    rep.weight_quartic = 4 * rr;
    rep.weight_sextic = 6 * rr;
    // the discriminant form has weighted degree 4r + 4r + 4r = 6r + 6r
    rep.chow.modulus_linear = 12 * rr;
    rep.chow.modulus_quadratic = rep.weight_quartic * rep.weight_sextic;

    // Pic of the principal component: lambda = r mu+, 12 lambda = delta
    // = 0 on the open locus.
    rep.component1.generators = {"mu+", "lambda"};
    rep.component1.relations = IntMatrix(2, 2, {Int(r), Int(-1), Int(0), Int(12)});
    rep.component1_structure = group_structure(rep.component1);

    auto order = element_order_mod_lattice(rep.component1.relations, {Int(1), Int(0)});
    if (!order) throw invariant_violation("mu+ has infinite order in the genus-1 presentation");
    rep.mu_plus_order = *order;
    return rep;
}

namespace {

// Order of the image of generator^exponent in a cyclic group of order n.
Int order_in_cyclic(const Int& n, const Int& exponent)
{
    return n / gcd(n, exponent);
}

} // namespace

ComponentBoundReport genus1_component_bounds(long r, long d)
{
    if (r < 2) throw usage_error("genus1_component_bounds: level must be at least 2");
    if (d < 2 || r % d != 0)
        throw usage_error("genus1_component_bounds: d must be a divisor of r, d >= 2");

    Int rr(r), dd(d);
    ComponentBoundReport rep;
    rep.r = r;
    rep.d = d;
    if (d == 2) {
        rep.target_order = 4 * rr;
        rep.image_exponent = 2;
        rep.conjecture_order = 2 * rr;
    } else if (d == 3) {
        rep.target_order = 3 * rr;
        rep.image_exponent = 3;
        rep.conjecture_order = rr;
    } else {
        rep.target_order = rr;
        rep.image_exponent = dd;
        rep.conjecture_order = rr / dd;
    }
    rep.lower_bound = order_in_cyclic(rep.target_order, rep.image_exponent);
    // 2 r^2 lambda = 0 and lambda = (r/d) mu+ give (2 r^3 / d) mu+ = 0
    rep.order_divides = 2 * rr * rr * (rr / dd);
    return rep;
}

Int genus1_relation_residual(long r)
{
    if (r < 1) throw usage_error("genus1_relation_residual: level must be positive");
    // 2r^2 mu - (2r^2-12r+12) lambda - (r-1) delta with mu = lambda,
    // delta = 12 lambda
    Int rr(r);
    return 2 * rr * rr - (2 * rr * rr - 12 * rr + 12) - (rr - 1) * 12;
}

} // namespace spinpic
