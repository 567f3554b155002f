#include "iterfact/poly.hpp"

#include <algorithm>
#include <cstring>

#include "poly_internal.hpp"

namespace iterfact {

namespace detail {

std::vector<u64> zp_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    if (zp_lazy_ok(p, std::min(a.size(), b.size()))) {
        for (size_t i = 0; i < a.size(); ++i) {
            u64 ai = a[i];
            if (!ai) continue;
            u64* dst = r.data() + i;
            for (size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
        }
        for (u64& x : r) x %= p;
    } else {
        bool big = p >> 32;
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                u64 prod = big ? mulmod(a[i], b[j], p) : a[i] * b[j] % p;
                r[i + j] = (r[i + j] + prod) % p;
            }
        }
    }
    zp_trim(r);
    return r;
}

void zp_rem_inplace(std::vector<u64>& a, const std::vector<u64>& f, u64 p) {
    size_t nf = f.size();
    if (a.size() < nf) return;
    size_t df = nf - 1;
    if (zp_lazy_ok(p, nf + 1)) {
        std::vector<i64> acc(a.begin(), a.end());
        for (size_t i = a.size(); i-- > nf - 1;) {
            if (i < df) break;
            i64 c = acc[i] % (i64)p;
            if (c < 0) c += (i64)p;
            if (!c) continue;
            i64* dst = acc.data() + (i - df);
            for (size_t j = 0; j < df; ++j) dst[j] -= c * (i64)f[j];
        }
        a.resize(df);
        for (size_t i = 0; i < df; ++i) {
            i64 v = acc[i] % (i64)p;
            a[i] = (u64)(v < 0 ? v + (i64)p : v);
        }
    } else {
        bool big = p >> 32;
        for (size_t i = a.size(); i-- > df;) {
            u64 c = a[i];
            if (!c) continue;
            for (size_t j = 0; j < df; ++j) {
                u64 prod = big ? mulmod(c, f[j], p) : c * f[j] % p;
                u64& slot = a[i - df + j];
                slot = (slot + p - prod) % p;
            }
            a[i] = 0;
        }
        a.resize(df);
    }
    zp_trim(a);
}

std::pair<std::vector<u64>, std::vector<u64>> zp_divmod(const std::vector<u64>& a,
                                                        const std::vector<u64>& f, u64 p) {
    size_t nf = f.size(), df = nf - 1;
    if (a.size() < nf) return {{}, a};
    u64 linv = powmod(f.back(), p - 2, p);
    std::vector<u64> q(a.size() - df, 0);
    bool big = p >> 32;
    std::vector<u64> r = a;
    for (size_t i = r.size(); i-- > df;) {
        u64 c = big ? mulmod(r[i], linv, p) : r[i] * linv % p;
        if (!c) continue;
        q[i - df] = c;
        for (size_t j = 0; j < nf; ++j) {
            u64 prod = big ? mulmod(c, f[j], p) : c * f[j] % p;
            u64& slot = r[i - df + j];
            slot = (slot + p - prod) % p;
        }
    }
    r.resize(df);
    zp_trim(r);
    zp_trim(q);
    return {std::move(q), std::move(r)};
}

std::vector<u64> zp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        if (b.back() != 1) {
            u64 inv = powmod(b.back(), p - 2, p);
            bool big = p >> 32;
            for (u64& x : b) x = big ? mulmod(x, inv, p) : x * inv % p;
        }
        zp_rem_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = powmod(a.back(), p - 2, p);
        bool big = p >> 32;
        for (u64& x : a) x = big ? mulmod(x, inv, p) : x * inv % p;
    }
    return a;
}

std::vector<u64> zp_frobp_mod(const std::vector<u64>& h, const std::vector<u64>& f, u64 p) {
    if (h.empty()) return {};
    std::vector<u64> spread((h.size() - 1) * p + 1, 0);
    for (size_t i = 0; i < h.size(); ++i) spread[i * p] = h[i];  // a^p = a in F_p
    zp_rem_inplace(spread, f, p);
    return spread;
}

}  // namespace detail

// ---- Poly basics --------------------------------------------------------------

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field() || !b.field() || !same_field(*a.field(), *b.field()))
        fail(errc::field_mismatch, "polynomials over different fields");
}

}  // namespace

void Poly::trim() {
    u32 m = F_->m;
    while (!c_.empty() && F_->el_is_zero(c_.data() + c_.size() - m)) c_.resize(c_.size() - m);
}

Poly::Poly(FieldPtr F, const std::vector<FieldElem>& coeffs) : F_(std::move(F)) {
    c_.resize(coeffs.size() * F_->m);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!same_field(*coeffs[i].F, *F_)) fail(errc::field_mismatch, "coefficient field mismatch");
        std::copy(coeffs[i].c.begin(), coeffs[i].c.end(), c_.begin() + i * F_->m);
    }
    trim();
}

Poly Poly::from_flat(FieldPtr F, std::vector<u64> flat) {
    Poly r(std::move(F));
    if (flat.size() % r.F_->m) fail(errc::internal, "flat size not a multiple of stride");
    r.c_ = std::move(flat);
    r.trim();
    return r;
}

Poly Poly::one(const FieldPtr& F) { return monomial(F, 0, one_elem(F)); }

Poly Poly::x(const FieldPtr& F) { return monomial(F, 1, one_elem(F)); }

Poly Poly::monomial(const FieldPtr& F, u64 e, const FieldElem& c) {
    Poly r(F);
    if (c.is_zero()) return r;
    r.c_.assign((e + 1) * F->m, 0);
    std::copy(c.c.begin(), c.c.end(), r.c_.begin() + e * F->m);
    return r;
}

Poly Poly::from_ints(const FieldPtr& F, const std::vector<i64>& coeffs) {
    Poly r(F);
    r.c_.assign(coeffs.size() * F->m, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) r.c_[i * F->m] = F->reduce_int(coeffs[i]);
    r.trim();
    return r;
}

FieldElem Poly::coeff(u64 i) const {
    u32 m = F_->m;
    if (i * m >= c_.size()) return zero_elem(F_);
    return FieldElem(F_, std::vector<u64>(c_.begin() + i * m, c_.begin() + (i + 1) * m));
}

FieldElem Poly::leading() const {
    if (is_zero()) return zero_elem(F_);
    return coeff((u64)degree());
}

bool Poly::is_monic() const { return !is_zero() && leading().is_one(); }

FieldElem Poly::operator()(const FieldElem& at) const {
    FieldElem acc = zero_elem(F_);
    for (int i = degree(); i >= 0; --i) acc = acc * at + coeff((u64)i);
    return acc;
}

Poly Poly::scaled(const FieldElem& s) const {
    if (s.is_zero()) return Poly(F_);
    Poly r(F_);
    r.c_.resize(c_.size());
    u32 m = F_->m;
    for (size_t i = 0; i * m < c_.size(); ++i) F_->el_mul(r.c_.data() + i * m, c_.data() + i * m, s.c.data());
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) fail(errc::division_by_zero_poly, "monic() of zero polynomial");
    if (is_monic()) return *this;
    return scaled(leading().inv());
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& F = *a.field();
    Poly r(a.field());
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), r.c_.begin());
    u32 m = F.m;
    for (size_t i = 0; i * m < b.c_.size(); ++i)
        F.el_add(r.c_.data() + i * m, r.c_.data() + i * m, b.c_.data() + i * m);
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& F = *a.field();
    Poly r(a.field());
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), r.c_.begin());
    u32 m = F.m;
    for (size_t i = 0; i * m < b.c_.size(); ++i)
        F.el_sub(r.c_.data() + i * m, r.c_.data() + i * m, b.c_.data() + i * m);
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r(a.field());
    r.c_.resize(a.c_.size());
    u32 m = a.field()->m;
    for (size_t i = 0; i * m < a.c_.size(); ++i)
        a.field()->el_neg(r.c_.data() + i * m, a.c_.data() + i * m);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const FieldPtr& Fp = a.field();
    const Field& F = *Fp;
    if (a.is_zero() || b.is_zero()) return Poly(Fp);
    if (F.m == 1) return Poly::from_flat(Fp, detail::zp_mul(a.c_, b.c_, F.p));
    u32 m = F.m;
    size_t na = a.c_.size() / m, nb = b.c_.size() / m;
    Poly r(Fp);
    r.c_.assign((na + nb - 1) * m, 0);
    u64 tmp[Field::max_degree];
    for (size_t i = 0; i < na; ++i) {
        if (F.el_is_zero(a.c_.data() + i * m)) continue;
        for (size_t j = 0; j < nb; ++j) {
            F.el_mul(tmp, a.c_.data() + i * m, b.c_.data() + j * m);
            F.el_add(r.c_.data() + (i + j) * m, r.c_.data() + (i + j) * m, tmp);
        }
    }
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return a.c_ == b.c_;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) fail(errc::division_by_zero_poly, "polynomial division by zero");
    const FieldPtr& Fp = a.field();
    const Field& F = *Fp;
    if (a.degree() < b.degree()) return {Poly(Fp), a};
    if (F.m == 1) {
        auto [q, r] = detail::zp_divmod(a.c_, b.c_, F.p);
        return {Poly::from_flat(Fp, std::move(q)), Poly::from_flat(Fp, std::move(r))};
    }
    u32 m = F.m;
    size_t df = (size_t)b.degree();
    std::vector<u64> r = a.c_;
    std::vector<u64> q(((size_t)a.degree() - df + 1) * m, 0);
    FieldElem linv = b.leading().inv();
    u64 c[Field::max_degree], tmp[Field::max_degree];
    for (size_t i = r.size() / m; i-- > df;) {
        F.el_mul(c, r.data() + i * m, linv.c.data());
        if (F.el_is_zero(c)) continue;
        std::copy(c, c + m, q.begin() + (i - df) * m);
        for (size_t j = 0; j <= df; ++j) {
            F.el_mul(tmp, c, b.c_.data() + j * m);
            F.el_sub(r.data() + (i - df + j) * m, r.data() + (i - df + j) * m, tmp);
        }
    }
    r.resize(df * m);
    return {Poly::from_flat(Fp, std::move(q)), Poly::from_flat(Fp, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd_poly(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const FieldPtr& Fp = a.field();
    if (Fp->m == 1) {
        auto g = detail::zp_gcd(a.c_, b.c_, Fp->p);
        return Poly::from_flat(Fp, std::move(g));
    }
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly derivative(const Poly& a) {
    const FieldPtr& Fp = a.field();
    if (a.degree() < 1) return Poly(Fp);
    u32 m = Fp->m;
    Poly r(Fp);
    r.c_.resize((size_t)a.degree() * m);
    for (u64 i = 1; i <= (u64)a.degree(); ++i) {
        u64 k = i % Fp->p;
        for (u32 j = 0; j < m; ++j) r.c_[(i - 1) * m + j] = Fp->mm(a.c_[i * m + j], k);
    }
    r.trim();
    return r;
}

Poly compose(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    Poly acc(f.field());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * g;
        acc = acc + Poly::monomial(f.field(), 0, f.coeff((u64)i));
    }
    return acc;
}

Poly iterate_poly(const Poly& g, u64 n, u64 degree_cap) {
    const FieldPtr& Fp = g.field();
    if (n == 0) return Poly::x(Fp);
    if (g.degree() >= 1) {
        u64 total = 1;
        for (u64 i = 0; i < n; ++i) {
            total = mul_u64_checked(total, (u64)g.degree());
            if (total > degree_cap)
                fail(errc::degree_overflow, "iterate: degree " + std::to_string(total) +
                                                " exceeds cap " + std::to_string(degree_cap));
        }
    }
    Poly acc = g;
    for (u64 i = 1; i < n; ++i) acc = compose(g, acc);
    return acc;
}

Poly frobenius_poly(const Poly& f, i64 i) {
    const FieldPtr& Fp = f.field();
    u32 m = Fp->m;
    i64 j = i % (i64)m;
    if (j < 0) j += m;
    if (j == 0) return f;
    Poly r(Fp);
    r.c_.resize(f.c_.size());
    for (size_t t = 0; t * m < f.c_.size(); ++t)
        Fp->el_pow_p(r.c_.data() + t * m, f.c_.data() + t * m, (u64)j);
    r.trim();
    return r;
}

Poly pth_root_poly(const Poly& f) {
    const FieldPtr& Fp = f.field();
    u64 p = Fp->p;
    u32 m = Fp->m;
    if (f.is_zero()) return f;
    Poly r(Fp);
    r.c_.assign(((size_t)f.degree() / p + 1) * m, 0);
    for (u64 i = 0; i <= (u64)f.degree(); ++i) {
        const u64* src = f.c_.data() + i * m;
        if (Fp->el_is_zero(src)) continue;
        if (i % p) fail(errc::internal, "pth_root_poly: exponent not divisible by p");
        // p-th root of a coefficient in F_{p^m} is a^(p^(m-1))
        Fp->el_pow_p(r.c_.data() + (i / p) * m, src, m - 1);
    }
    r.trim();
    return r;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const Field& F = *a.field();
    u32 m = F.m;
    for (u64 i = 0; i <= (u64)std::max(a.degree(), 0); ++i) {
        if (a.is_zero()) break;
        int c = F.el_cmp(a.flat().data() + i * m, b.flat().data() + i * m);
        if (c) return c;
    }
    return 0;
}

Poly embed_poly(const Poly& f, const Embedding& emb) {
    if (!same_field(*f.field(), *emb.sub)) fail(errc::field_mismatch, "embed_poly: wrong field");
    std::vector<FieldElem> coeffs;
    coeffs.reserve((size_t)(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(emb.embed(f.coeff((u64)i)));
    return f.degree() < 0 ? Poly(emb.super) : Poly(emb.super, coeffs);
}

std::optional<Poly> unembed_poly(const Poly& f, const Embedding& emb) {
    if (!same_field(*f.field(), *emb.super)) fail(errc::field_mismatch, "unembed_poly: wrong field");
    std::vector<FieldElem> coeffs;
    coeffs.reserve((size_t)(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        auto c = emb.unembed(f.coeff((u64)i));
        if (!c) return std::nullopt;
        coeffs.push_back(std::move(*c));
    }
    return f.degree() < 0 ? Poly(emb.sub) : Poly(emb.sub, coeffs);
}

}  // namespace iterfact
