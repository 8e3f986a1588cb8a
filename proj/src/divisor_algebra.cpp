#include "spinpic/divisor_algebra.hpp"

#include "spinpic/spin_combinatorics.hpp"

namespace spinpic {

BasisContext::BasisContext(long r, std::optional<long> genus) : r_(r), genus_(genus)
{
    if (r_ < 2) throw usage_error("BasisContext: level must be at least 2");
    if (genus_ && *genus_ < 2)
        throw usage_error("BasisContext: finite genus must be at least 2 (genus 1 has its own presentations)");
}

BasisContext BasisContext::finite(long g, long r) { return BasisContext(r, g); }

BasisContext BasisContext::generic(long r) { return BasisContext(r, std::nullopt); }

long BasisContext::genus() const
{
    if (!genus_) throw usage_error("BasisContext: generic mode has no genus");
    return *genus_;
}

bool BasisContext::valid_generator(const GeneratorId& g) const
{
    switch (g.kind) {
    case GenKind::lambda: return g.index == 0;
    case GenKind::mu: return g.index >= 2 && r_ % g.index == 0;
    case GenKind::alpha: return genus_.has_value() && g.index >= 1 && 2 * g.index <= *genus_;
    case GenKind::alpha_residue: return !genus_.has_value() && g.index >= 0 && g.index < r_;
    case GenKind::gamma: return g.index >= 0 && 2 * g.index <= r_;
    }
    return false;
}

DivisorClass DivisorClass::generator(const BasisContext& ctx, GeneratorId g, Int coeff)
{
    DivisorClass c(ctx);
    c.add_term(g, coeff);
    return c;
}

DivisorClass DivisorClass::mu(const BasisContext& ctx, long s)
{
    if (s == 1) return lambda(ctx);
    return generator(ctx, mu_id(s));
}

Int DivisorClass::coefficient(const GeneratorId& g) const
{
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Int(0) : it->second;
}

bool DivisorClass::boundary_only() const
{
    for (const auto& [g, c] : coeffs_)
        if (g.kind == GenKind::lambda || g.kind == GenKind::mu) return false;
    return true;
}

void DivisorClass::add_term(const GeneratorId& g, const Int& coeff)
{
    if (!ctx_.valid_generator(g))
        throw usage_error("DivisorClass: generator " + generator_name(g) + " does not belong to this context");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o)
{
    if (!(ctx_ == o.ctx_)) throw usage_error("DivisorClass: context mismatch");
    for (const auto& [g, c] : o.coeffs_) add_term(g, c);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o)
{
    if (!(ctx_ == o.ctx_)) throw usage_error("DivisorClass: context mismatch");
    for (const auto& [g, c] : o.coeffs_) add_term(g, -c);
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Int& x)
{
    if (x == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [g, c] : coeffs_) c *= x;
    return *this;
}

DivisorClass combine(const DivisorClass& a, const DivisorClass& b, const Int& x, const Int& y)
{
    if (!(a.context() == b.context())) throw usage_error("combine: context mismatch");
    DivisorClass out = a;
    out *= x;
    DivisorClass tb = b;
    tb *= y;
    out += tb;
    return out;
}

namespace {

// Representative genus part for an alpha index of ctx: the index
// itself in finite mode, a positive representative of the residue in
// generic mode.
long alpha_rep(const BasisContext& ctx, long idx)
{
    if (!ctx.is_generic()) return idx;
    return idx == 0 ? ctx.r() : idx;
}

// Iterate the context's alpha generators: indices 1..g/2 (finite) or
// residues 0..r-1 (generic).
template <typename F>
void for_each_alpha(const BasisContext& ctx, F&& f)
{
    if (ctx.is_generic()) {
        for (long k = 0; k < ctx.r(); ++k) f(k, alpha_residue_id(k));
    } else {
        for (long i = 1; 2 * i <= ctx.genus(); ++i) f(i, alpha_id(i));
    }
}

} // namespace

DivisorClass expand_delta_i(const BasisContext& ctx, long i)
{
    long r = ctx.r();
    if (ctx.is_generic()) {
        long k = mod_residue(i, r);
        return DivisorClass::generator(ctx, alpha_residue_id(k), Int(r / c_level(alpha_rep(ctx, k), r)));
    }
    if (i < 1 || 2 * i > ctx.genus())
        throw usage_error("expand_delta_i: index out of range for this genus");
    return DivisorClass::generator(ctx, alpha_id(i), Int(r / c_level(i, r)));
}

DivisorClass expand_delta_0(const BasisContext& ctx)
{
    long r = ctx.r();
    DivisorClass out(ctx);
    for (long j = 0; 2 * j <= r; ++j)
        out.add_term(gamma_id(j), Int(r / d_level(j, r)));
    return out;
}

DivisorClass expand_delta(const BasisContext& ctx)
{
    long r = ctx.r();
    DivisorClass out = expand_delta_0(ctx);
    for_each_alpha(ctx, [&](long idx, GeneratorId g) {
        out.add_term(g, Int(r / c_level(alpha_rep(ctx, idx), r)));
    });
    return out;
}

DivisorClass expand_pairing(const BasisContext& ctx, long s)
{
    long r = ctx.r();
    if (s < 1 || r % s != 0) throw usage_error("expand_pairing: s must divide r");

    DivisorClass out(ctx);
    if (s == 1) return out; // a true root of the canonical sheaf exists; no defect

    for_each_alpha(ctx, [&](long idx, GeneratorId g) {
        long i = alpha_rep(ctx, idx);
        long up = mod_residue(2 * i - 1, s);
        long vp = up == 0 ? 0 : s - up;
        Rat coeff(Int(r) * up * vp, Int(s) * c_level(i, r));
        out.add_term(g, to_integer(coeff));
    });

    for (long k = 1; 2 * k <= r; ++k) {
        long km = mod_residue(k, s);
        long j = std::min(km, s - km); // unique representative of +-k mod s in [0, s/2]
        if (j == 0) continue;
        Rat coeff(Int(r) * j * (s - j), Int(s) * d_level(k, r));
        out.add_term(gamma_id(k), to_integer(coeff));
    }
    return out;
}

DivisorClass expand_sigma(const BasisContext& ctx, long s, const Rat& k)
{
    if (!is_integer(k)) return DivisorClass::zero(ctx);
    return expand_sigma(ctx, s, static_cast<long>(to_integer(k)));
}

DivisorClass expand_sigma(const BasisContext& ctx, long s, long k)
{
    long r = ctx.r();
    if (s < 1 || r % s != 0) throw usage_error("expand_sigma: s must divide r");

    DivisorClass out(ctx);
    for_each_alpha(ctx, [&](long idx, GeneratorId g) {
        long i = alpha_rep(ctx, idx);
        if (mod_residue(i - k, s) != 0) return;
        out.add_term(g, pullback_coeff_alpha(i, s, r));
    });
    return out;
}

DivisorClass pullback_class(const BasisContext& ctx_r, const DivisorClass& cls)
{
    long r = ctx_r.r();
    long s = cls.context().r();
    if (r % s != 0) throw usage_error("pullback_class: source level must divide target level");
    if (cls.context().is_generic() != ctx_r.is_generic() ||
        (!ctx_r.is_generic() && cls.context().genus() != ctx_r.genus()))
        throw usage_error("pullback_class: genus modes differ");

    DivisorClass out(ctx_r);
    for (const auto& [g, c] : cls.coefficients()) {
        switch (g.kind) {
        case GenKind::lambda:
            out.add_term(lambda_id(), c);
            break;
        case GenKind::mu:
            out.add_term(mu_id(g.index), c);
            break;
        case GenKind::alpha:
            out.add_term(g, c * pullback_coeff_alpha(g.index, s, r));
            break;
        case GenKind::alpha_residue:
            // level-s residue class k expands over the level-r residues
            // above it
            for (long rho = 0; rho < r; ++rho) {
                if (mod_residue(rho - g.index, s) != 0) continue;
                out.add_term(alpha_residue_id(rho),
                             c * pullback_coeff_alpha(alpha_rep(ctx_r, rho), s, r));
            }
            break;
        case GenKind::gamma:
            for (const auto& [k, coeff] : pullback_targets_gamma(g.index, s, r))
                out.add_term(gamma_id(k), c * coeff);
            break;
        }
    }
    return out;
}

DivisorClass specialize(const DivisorClass& generic_class, long g)
{
    const BasisContext& src = generic_class.context();
    if (!src.is_generic()) throw usage_error("specialize: input must be in generic-genus mode");
    BasisContext ctx = BasisContext::finite(g, src.r());

    DivisorClass out(ctx);
    for (const auto& [gen, c] : generic_class.coefficients()) {
        if (gen.kind != GenKind::alpha_residue) {
            out.add_term(gen, c);
            continue;
        }
        for (long i = 1; 2 * i <= g; ++i)
            if (mod_residue(i - gen.index, src.r()) == 0) out.add_term(alpha_id(i), c);
    }
    return out;
}

std::string generator_name(const GeneratorId& g)
{
    switch (g.kind) {
    case GenKind::lambda: return "lambda";
    case GenKind::mu: return "mu^{1/" + std::to_string(g.index) + "}";
    case GenKind::alpha: return "alpha_" + std::to_string(g.index);
    // a generic-genus residue class is exactly the level-r sigma class
    case GenKind::alpha_residue: return "sigma_" + std::to_string(g.index);
    case GenKind::gamma: return "gamma_" + std::to_string(g.index);
    }
    return "?";
}

} // namespace spinpic
