#include "parhox/factor_set.hpp"

namespace parhox {

namespace {

std::string pair_str(const FiniteGroup& G, int g, int h) { return "(" + G.label(g) + "," + G.label(h) + ")"; }

std::string triple_str(const FiniteGroup& G, int g, int h, int t) {
    return "(" + G.label(g) + "," + G.label(h) + "," + G.label(t) + ")";
}

}  // namespace

PartialFactorSet::PartialFactorSet(GroupPtr G, const FieldSpec& f, std::vector<Scalar> values)
    : group_(std::move(G)), field_(f), values_(std::move(values)) {
    const auto n = static_cast<std::size_t>(group_->order());
    if (values_.size() != n * n) fail(ErrorKind::InvalidInput, "factor set table must be n x n");
    for (const auto& v : values_)
        if (v.field() != field_) fail(ErrorKind::FieldMismatch, "factor set entry from another field");
}

PartialFactorSet PartialFactorSet::constant_one(GroupPtr G, const FieldSpec& f) {
    const auto n = static_cast<std::size_t>(G->order());
    return PartialFactorSet(std::move(G), f, std::vector<Scalar>(n * n, Scalar::one(f)));
}

void PartialFactorSet::set(int g, int h, const Scalar& v) {
    if (v.field() != field_) fail(ErrorKind::FieldMismatch, "factor set entry from another field");
    values_[idx(g, h)] = v;
}

bool PartialFactorSet::is_idempotent() const {
    for (const auto& v : values_)
        if (!v.is_zero() && !v.is_one()) return false;
    return true;
}

bool PartialFactorSet::operator==(const PartialFactorSet& o) const {
    if (order() != o.order() || field_ != o.field_) return false;
    return values_ == o.values_;
}

ValidationReport validate_unit_and_symmetry(const PartialFactorSet& s) {
    ValidationReport rep;
    const FiniteGroup& G = s.group();
    for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g);
        if (s(g, gi) != s(gi, g)) rep.fail("symmetry sigma(g,g^-1) = sigma(g^-1,g) fails at " + G.label(g));
        if (!s(g, gi).is_zero() && (!s(0, g).is_one() || !s(g, 0).is_one()))
            rep.fail("unit condition sigma(1,g) = sigma(g,1) = 1 fails at " + G.label(g));
    }
    return rep;
}

ValidationReport validate_twist(const PartialFactorSet& s, const std::vector<bool>& support,
                                const std::vector<bool>& triple) {
    const FiniteGroup& G = s.group();
    const int n = G.order();
    const auto N = static_cast<std::size_t>(n);
    if (support.size() != N * N || triple.size() != N * N * N)
        fail(ErrorKind::InvalidInput, "support tables have the wrong size");
    ValidationReport rep = validate_unit_and_symmetry(s);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            bool supp = support[static_cast<std::size_t>(g * n + h)];
            if (s(g, h).is_zero() == supp) rep.fail("zero pattern differs from support at " + pair_str(G, g, h));
        }
    for (int g = 0; g < n && !rep.full(); ++g)
        for (int h = 0; h < n; ++h)
            for (int t = 0; t < n; ++t) {
                if (!triple[static_cast<std::size_t>((g * n + h) * n + t)]) continue;
                Scalar lhs = s(g, h) * s(G.mul(g, h), t);
                Scalar rhs = s(g, G.mul(h, t)) * s(h, t);
                if (lhs != rhs) rep.fail("cocycle identity fails at " + triple_str(G, g, h, t));
            }
    return rep;
}

ValidationReport validate_monoid_factor_set(const MonoidFactorSet& rho) {
    ValidationReport rep;
    const ExelMonoid& S = *rho.monoid;
    const std::size_t N = S.size();
    if (rho.values.size() != N * N) fail(ErrorKind::InvalidInput, "monoid factor set must be |S| x |S|");
    for (std::size_t x = 0; x < N && !rep.full(); ++x)
        for (std::size_t y = 0; y < N; ++y) {
            if (rho(x, y).is_zero() != rho(S.identity(), S.mul(x, y)).is_zero())
                rep.fail("rho(x,y)=0 <=> rho(1,xy)=0 fails at (" + S.label(x) + "," + S.label(y) + ")");
            for (std::size_t z = 0; z < N; ++z) {
                Scalar lhs = rho(x, y) * rho(S.mul(x, y), z);
                Scalar rhs = rho(x, S.mul(y, z)) * rho(y, z);
                if (lhs != rhs) {
                    rep.fail("cocycle identity fails at (" + S.label(x) + "," + S.label(y) + "," + S.label(z) + ")");
                    if (rep.full()) break;
                }
            }
        }
    return rep;
}

PartialFactorSet derive_sigma_from_monoid(const MonoidFactorSet& rho, const FieldSpec& f) {
    const ExelMonoid& S = *rho.monoid;
    const FiniteGroup& G = S.group();
    PartialFactorSet out = PartialFactorSet::constant_one(S.group_ptr(), f);
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            std::size_t xg = S.generator(g), xh = S.generator(h), xgi = S.generator(G.inv(g));
            std::size_t xgh = S.generator(G.mul(g, h));
            const Scalar& top = rho(xg, xh);
            if (top.is_zero()) {
                out.set(g, h, Scalar::zero(f));
                continue;
            }
            const Scalar& den = rho(xgi, xgh);
            if (den.is_zero())
                fail(ErrorKind::InvalidInput, "rho([g^-1],[gh]) vanishes while rho([g],[h]) does not at " +
                                                  pair_str(G, g, h));
            out.set(g, h, top * rho(xgi, S.mul(xg, xh)) / den);
        }
    return out;
}

PartialFactorSet product(const PartialFactorSet& a, const PartialFactorSet& b) {
    if (a.field() != b.field()) fail(ErrorKind::FieldMismatch, "factor sets over different fields");
    if (a.order() != b.order()) fail(ErrorKind::InvalidInput, "factor sets over different groups");
    PartialFactorSet out = a;
    for (int g = 0; g < a.order(); ++g)
        for (int h = 0; h < a.order(); ++h) out.set(g, h, a(g, h) * b(g, h));
    return out;
}

PartialFactorSet involution_star(const PartialFactorSet& s) {
    const FiniteGroup& G = s.group();
    PartialFactorSet out = s;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) out.set(g, h, s(G.inv(h), G.inv(g)));
    return out;
}

PartialFactorSet sigma_prime(const PartialFactorSet& s) { return product(s, involution_star(s)); }

bool is_inverse_normalized(const PartialFactorSet& s) {
    const FiniteGroup& G = s.group();
    for (int g = 0; g < G.order(); ++g) {
        if (G.squares_to_one(g)) continue;
        const Scalar& v = s(g, G.inv(g));
        if (!v.is_zero() && !v.is_one()) return false;
    }
    return true;
}

XiResult xi_sigma_double_prime(const PartialFactorSet& s) {
    if (!is_inverse_normalized(s))
        fail(ErrorKind::NotNormalized, "sigma(g,g^-1) must lie in {0,1} outside the involutions");
    const FiniteGroup& G = s.group();
    const FieldSpec f = s.field();
    std::vector<Scalar> xi(static_cast<std::size_t>(G.order()), Scalar::one(f));
    for (int g = 0; g < G.order(); ++g)
        if (G.squares_to_one(g) && !s(g, g).is_zero()) xi[static_cast<std::size_t>(g)] = s(g, g).inverse();
    PartialFactorSet sp = sigma_prime(s);
    PartialFactorSet sdp = sp;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            auto gh = static_cast<std::size_t>(G.mul(g, h));
            sdp.set(g, h, xi[static_cast<std::size_t>(g)] * xi[static_cast<std::size_t>(h)] / xi[gh] * sp(g, h));
        }
    XiResult out{xi, sdp, {}};
    if (!sdp.is_idempotent()) {
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h)
                if (!sdp(g, h).is_zero() && !sdp(g, h).is_one())
                    out.checks.fail("sigma'' value " + sdp(g, h).to_string() + " outside {0,1} at " + pair_str(G, g, h));
    }
    if (involution_star(sdp) != sdp) out.checks.fail("sigma'' is not self-dual under the involution");
    return out;
}

PartialFactorSet transport(const PartialFactorSet& s, const EquivalenceWitness& eta) {
    const FiniteGroup& G = s.group();
    if (static_cast<int>(eta.size()) != G.order()) fail(ErrorKind::InvalidInput, "witness size differs from order");
    PartialFactorSet out = s;
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            auto gh = static_cast<std::size_t>(G.mul(g, h));
            out.set(g, h,
                    eta[static_cast<std::size_t>(g)] * eta[static_cast<std::size_t>(h)] / eta[gh] * s(g, h));
        }
    return out;
}

NormalizationResult normalize_inverse_pairs(const PartialFactorSet& s) {
    const FiniteGroup& G = s.group();
    const FieldSpec f = s.field();
    EquivalenceWitness eta(static_cast<std::size_t>(G.order()), Scalar::one(f));
    NormalizationResult out{eta, s, true, {}};
    for (int g = 1; g < G.order(); ++g) {
        int gi = G.inv(g);
        const Scalar& v = s(g, gi);
        if (v.is_zero()) continue;
        if (!G.squares_to_one(g)) {
            if (g < gi) eta[static_cast<std::size_t>(g)] = v.inverse();
        } else {
            auto root = square_root(v);
            if (root) {
                eta[static_cast<std::size_t>(g)] = root->inverse();
            } else {
                out.square_roots_applied = false;
                out.report.note("no square root of sigma(" + G.label(g) + "," + G.label(g) +
                                ") in the field; involution left unnormalized");
            }
        }
    }
    out.eta = eta;
    out.nu = transport(s, eta);
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            if (out.nu(g, h).is_zero() != s(g, h).is_zero())
                out.report.fail("zero pattern changed at " + pair_str(G, g, h));
    return out;
}

ValidationReport check_good_factor_set_identities(const PartialFactorSet& s) {
    const FiniteGroup& G = s.group();
    ValidationReport rep;
    for (int g = 0; g < G.order(); ++g) {
        const Scalar& v = s(g, G.inv(g));
        if (!v.is_zero() && !v.is_one()) rep.fail("precondition sigma(g,g^-1) in {0,1} fails at " + G.label(g));
    }
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            const Scalar& v = s(g, h);
            if (v.is_zero()) continue;
            int hi = G.inv(h), gi = G.inv(g);
            const Scalar& w = s(hi, gi);
            if (w.is_zero() || v != w.inverse())
                rep.fail("sigma(g,h) = sigma(h^-1,g^-1)^-1 fails at " + pair_str(G, g, h));
            if (v != s(h, G.mul(hi, gi))) rep.fail("sigma(g,h) = sigma(h,h^-1 g^-1) fails at " + pair_str(G, g, h));
        }
    return rep;
}

}  // namespace parhox
