#ifndef SPINPIC_DIVISOR_ALGEBRA_HPP
#define SPINPIC_DIVISOR_ALGEBRA_HPP

#include "spinpic/numbers.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace spinpic {

// Generators of the divisor-class algebra. The enum order fixes the
// canonical generator order used everywhere (normalization, display,
// serialization): lambda < mu (s ascending) < alpha < gamma.
//
// mu(1) is identified with lambda at construction time and never
// stored. alpha (finite genus) and alpha_residue (generic genus, keyed
// by the genus part mod r) never coexist in one context.
enum class GenKind : std::uint8_t { lambda = 0, mu = 1, alpha = 2, alpha_residue = 3, gamma = 4 };

struct GeneratorId {
    GenKind kind = GenKind::lambda;
    long index = 0; // s for mu, i for alpha, k for alpha_residue, j for gamma

    auto operator<=>(const GeneratorId&) const = default;
};

inline GeneratorId lambda_id() { return {GenKind::lambda, 0}; }
inline GeneratorId mu_id(long s) { return {GenKind::mu, s}; }
inline GeneratorId alpha_id(long i) { return {GenKind::alpha, i}; }
inline GeneratorId alpha_residue_id(long k) { return {GenKind::alpha_residue, k}; }
inline GeneratorId gamma_id(long j) { return {GenKind::gamma, j}; }

// Ambient setting: spin level r >= 2 and either a finite genus g >= 2
// or generic-genus mode, where separating boundary classes are keyed
// by the genus part mod r (their coefficients in every expansion here
// depend only on that residue).
class BasisContext {
public:
    static BasisContext finite(long g, long r);
    static BasisContext generic(long r);

    long r() const { return r_; }
    bool is_generic() const { return !genus_.has_value(); }
    long genus() const; // usage_error in generic mode

    // valid alpha indices: 1..g/2 (finite) / residues 0..r-1 (generic)
    bool valid_generator(const GeneratorId& g) const;

    bool operator==(const BasisContext&) const = default;

private:
    BasisContext(long r, std::optional<long> genus);
    long r_;
    std::optional<long> genus_;
};

// Sparse exact-integer linear combination of generators; the universal
// currency of the library. No zero coefficients are stored.
class DivisorClass {
public:
    explicit DivisorClass(BasisContext ctx) : ctx_(ctx) {}

    static DivisorClass zero(const BasisContext& ctx) { return DivisorClass(ctx); }
    static DivisorClass generator(const BasisContext& ctx, GeneratorId g, Int coeff = 1);
    static DivisorClass lambda(const BasisContext& ctx) { return generator(ctx, lambda_id()); }
    // s = 1 yields lambda (mu^{1/1} = det of the pushed-forward
    // canonical sheaf).
    static DivisorClass mu(const BasisContext& ctx, long s);
    static DivisorClass alpha(const BasisContext& ctx, long i) { return generator(ctx, alpha_id(i)); }
    static DivisorClass alpha_residue(const BasisContext& ctx, long k)
    {
        return generator(ctx, alpha_residue_id(k));
    }
    static DivisorClass gamma(const BasisContext& ctx, long j) { return generator(ctx, gamma_id(j)); }

    const BasisContext& context() const { return ctx_; }
    const std::map<GeneratorId, Int>& coefficients() const { return coeffs_; }
    Int coefficient(const GeneratorId& g) const;
    bool is_zero() const { return coeffs_.empty(); }
    // true when the class has no lambda / mu support
    bool boundary_only() const;

    void add_term(const GeneratorId& g, const Int& coeff);

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Int& x);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Int& x, DivisorClass a) { return a *= x; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Int(-1); }

    bool operator==(const DivisorClass&) const = default;

private:
    BasisContext ctx_;
    std::map<GeneratorId, Int> coeffs_;
};

// x*a + y*b; contexts must agree.
DivisorClass combine(const DivisorClass& a, const DivisorClass& b, const Int& x, const Int& y);

// delta_i = (r/c_i) alpha_i (the separating boundary class pulled back
// from the moduli of curves); delta_0 = sum over 0 <= j <= r/2 of
// (r/d_j) gamma_j; delta = delta_0 + sum of the delta_i.
DivisorClass expand_delta_i(const BasisContext& ctx, long i);
DivisorClass expand_delta_0(const BasisContext& ctx);
DivisorClass expand_delta(const BasisContext& ctx);

// The level-s root-defect pairing expanded in the level-r basis:
//   (r/s) [ sum_i u'(i)v'(i)/c^{1/r}_i alpha_i
//         + sum_{k} j(k)(s-j(k))/d^{1/r}_k gamma_k ]
// with u'(i) = (2i-1) mod s and j(k) the representative of +-k mod s
// in [0, s/2]. Every coefficient is asserted to be an exact integer.
// s = 1 gives the zero class.
DivisorClass expand_pairing(const BasisContext& ctx, long s);

// sigma^{1/s}_k: sum of the pulled-back level-s alpha classes over
// genus parts congruent to k mod s. A non-integral index (the Ramond
// slot (s+1)/2 for even s) gives the zero class.
DivisorClass expand_sigma(const BasisContext& ctx, long s, const Rat& k);
DivisorClass expand_sigma(const BasisContext& ctx, long s, long k);

// Expand a class living in the level-s basis into the level-r basis of
// ctx_r: lambda and mu are untouched, boundary generators expand
// through the pullback coefficients.
DivisorClass pullback_class(const BasisContext& ctx_r, const DivisorClass& level_s_class);

// Replace each alpha_residue(k) by the sum of alpha_i over genus parts
// i = k (mod r), 1 <= i <= g/2.
DivisorClass specialize(const DivisorClass& generic_class, long g);

std::string generator_name(const GeneratorId& g);

} // namespace spinpic

#endif
