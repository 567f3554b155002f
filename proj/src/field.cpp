#include "iterfact/field.hpp"

#include <algorithm>
#include <cstring>

namespace iterfact {

namespace {

// ---- minimal F_p[x] arithmetic, used only for modulus handling -------------
// coefficient vectors low-to-high, not necessarily trimmed

using Fpx = std::vector<u64>;

int fpx_deg(const Fpx& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i]) return (int)i;
    return -1;
}

void fpx_trim(Fpx& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 fmm(u64 a, u64 b, u64 p) { return p >> 32 ? mulmod(a, b, p) : a * b % p; }

Fpx fpx_mul(const Fpx& a, const Fpx& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fpx r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + fmm(a[i], b[j], p)) % p;
    }
    return r;
}

// a mod f, f monic
Fpx fpx_rem(Fpx a, const Fpx& f, u64 p) {
    int df = fpx_deg(f);
    for (int i = fpx_deg(a); i >= df; --i) {
        u64 c = a[i];
        if (!c) continue;
        for (int j = 0; j <= df; ++j) {
            u64 sub = fmm(c, f[j], p);
            u64& slot = a[i - df + j];
            slot = (slot + p - sub) % p;
        }
    }
    fpx_trim(a);
    return a;
}

Fpx fpx_powmod(const Fpx& base, u64 e, const Fpx& f, u64 p) {
    Fpx r{1}, b = fpx_rem(base, f, p);
    while (e) {
        if (e & 1) r = fpx_rem(fpx_mul(r, b, p), f, p);
        b = fpx_rem(fpx_mul(b, b, p), f, p);
        e >>= 1;
    }
    return r;
}

Fpx fpx_gcd(Fpx a, Fpx b, u64 p) {
    fpx_trim(a);
    fpx_trim(b);
    while (!b.empty()) {
        // make b monic so fpx_rem applies
        u64 lead = b.back();
        if (lead != 1) {
            u64 inv = powmod(lead, p - 2, p);
            for (u64& x : b) x = fmm(x, inv, p);
        }
        Fpx r = fpx_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = powmod(a.back(), p - 2, p);
        for (u64& x : a) x = fmm(x, inv, p);
    }
    return a;
}

bool fpx_irreducible(const Fpx& f, u64 p) {
    int n = fpx_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // Rabin's test: x^(p^n) = x (mod f) and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n
    std::vector<Fpx> frob(n + 1);
    frob[0] = Fpx{0, 1};
    for (int i = 1; i <= n; ++i) frob[i] = fpx_powmod(frob[i - 1], p, f, p);
    Fpx xmod = fpx_rem(Fpx{0, 1}, f, p);
    if (frob[n] != xmod) return false;
    FactoredInt nf = factorize_u64((u64)n);
    for (auto [r, e] : nf.prime_powers) {
        Fpx h = frob[n / r];
        // h - x
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        fpx_trim(h);
        Fpx g = fpx_gcd(h, f, p);
        if (fpx_deg(g) != 0) return false;
    }
    return true;
}

}  // namespace

// ---- Field ------------------------------------------------------------------

bool Field::card_fits_u64() const {
    u64 acc = 1;
    for (u32 i = 0; i < m; ++i) {
        if (acc > UINT64_MAX / p) return false;
        acc *= p;
    }
    return true;
}

u64 Field::card() const {
    u64 acc = 1;
    for (u32 i = 0; i < m; ++i) acc = mul_u64_checked(acc, p);
    return acc;
}

u64 Field::card_mod(u64 b) const { return powmod(p % b, m, b); }

u64 Field::reduce_int(i64 v) const {
    i64 r = v % (i64)p;
    if (r < 0) r += (i64)p;
    return (u64)r;
}

void Field::el_zero(u64* dst) const { std::memset(dst, 0, m * sizeof(u64)); }

void Field::el_one(u64* dst) const {
    el_zero(dst);
    dst[0] = 1 % p;
}

bool Field::el_is_zero(const u64* a) const {
    for (u32 i = 0; i < m; ++i)
        if (a[i]) return false;
    return true;
}

void Field::el_add(u64* dst, const u64* a, const u64* b) const {
    for (u32 i = 0; i < m; ++i) {
        u64 s = a[i] + b[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void Field::el_sub(u64* dst, const u64* a, const u64* b) const {
    for (u32 i = 0; i < m; ++i) dst[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
}

void Field::el_neg(u64* dst, const u64* a) const {
    for (u32 i = 0; i < m; ++i) dst[i] = a[i] ? p - a[i] : 0;
}

void Field::el_mul(u64* dst, const u64* a, const u64* b) const {
    if (m == 1) {
        dst[0] = mm(a[0], b[0]);
        return;
    }
    u64 tmp[2 * max_degree - 1];
    std::memset(tmp, 0, (2 * m - 1) * sizeof(u64));
    for (u32 i = 0; i < m; ++i) {
        if (!a[i]) continue;
        for (u32 j = 0; j < m; ++j) tmp[i + j] = (tmp[i + j] + mm(a[i], b[j])) % p;
    }
    for (u32 i = 2 * m - 2; i >= m; --i) {
        u64 c = tmp[i];
        if (!c) continue;
        for (u32 j = 0; j < m; ++j) {
            u64 sub = mm(c, modulus[j]);
            u64& slot = tmp[i - m + j];
            slot = (slot + p - sub) % p;
        }
        tmp[i] = 0;
    }
    std::memcpy(dst, tmp, m * sizeof(u64));
}

void Field::el_inv(u64* dst, const u64* a) const {
    if (el_is_zero(a)) fail(errc::zero_element, "inverse of zero");
    if (m == 1) {
        dst[0] = powmod(a[0], p - 2, p);
        return;
    }
    // extended Euclid in F_p[t] for (a, modulus)
    Fpx r0(modulus), r1(a, a + m), s0{}, s1{1};
    fpx_trim(r1);
    while (fpx_deg(r1) > 0) {
        // divide r0 by r1
        Fpx q(fpx_deg(r0) - fpx_deg(r1) + 1, 0);
        Fpx rem = r0;
        u64 linv = powmod(r1.back(), p - 2, p);
        for (int i = fpx_deg(rem); i >= fpx_deg(r1); --i) {
            u64 c = fmm(rem[i], linv, p);
            if (!c) continue;
            q[i - fpx_deg(r1)] = c;
            for (int j = 0; j <= fpx_deg(r1); ++j) {
                u64 sub = fmm(c, r1[j], p);
                rem[i - fpx_deg(r1) + j] = (rem[i - fpx_deg(r1) + j] + p - sub) % p;
            }
        }
        fpx_trim(rem);
        Fpx s2 = s0;  // s2 = s0 - q*s1
        Fpx qs = fpx_mul(q, s1, p);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + p - qs[i]) % p;
        fpx_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant: inverse = s1 / r1
    u64 cinv = powmod(r1.empty() ? 0 : r1[0], p - 2, p);
    el_zero(dst);
    for (size_t i = 0; i < s1.size(); ++i) dst[i] = fmm(s1[i], cinv, p);
}

void Field::el_pow(u64* dst, const u64* a, u64 e) const {
    u64 base[max_degree], acc[max_degree];
    std::memcpy(base, a, m * sizeof(u64));
    el_one(acc);
    while (e) {
        if (e & 1) el_mul(acc, acc, base);
        el_mul(base, base, base);
        e >>= 1;
    }
    std::memcpy(dst, acc, m * sizeof(u64));
}

void Field::el_pow_p(u64* dst, const u64* a, u64 times) const {
    u64 cur[max_degree];
    std::memcpy(cur, a, m * sizeof(u64));
    for (u64 i = 0; i < times; ++i) el_pow(cur, cur, p);
    std::memcpy(dst, cur, m * sizeof(u64));
}

int Field::el_cmp(const u64* a, const u64* b) const {
    for (u32 i = m; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// ---- construction -----------------------------------------------------------

namespace {

std::vector<u64> default_modulus(u64 p, u32 m) {
    // lexicographically smallest monic irreducible; tuple (a_0, ..., a_{m-1}),
    // a_0 most significant, so a_{m-1} spins fastest
    std::vector<u64> low(m, 0);
    // a_0 = 0 means divisible by x, so for m >= 2 the scan starts at a_0 = 1
    if (m >= 2) low[0] = 1;
    while (true) {
        Fpx f(low);
        f.push_back(1);
        if (fpx_irreducible(f, p)) return f;
        u32 i = m;
        while (i-- > 0) {
            if (++low[i] < p) break;
            low[i] = 0;
            if (i == 0) fail(errc::internal, "no irreducible of requested degree");
        }
    }
}

}  // namespace

FieldPtr make_field(u64 p, u32 m, const std::vector<u64>* modulus) {
    if (!is_prime_u64(p)) fail(errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1 || m > Field::max_degree)
        fail(errc::degree_mismatch, "extension degree out of range: " + std::to_string(m));
    auto f = std::shared_ptr<Field>(new Field());
    f->p = p;
    f->m = m;
    f->big_p_ = p >> 32;
    if (modulus) {
        std::vector<u64> mod = *modulus;
        for (u64& c : mod) c %= p;
        while (!mod.empty() && mod.back() == 0) mod.pop_back();
        if (mod.size() != m + 1) fail(errc::degree_mismatch, "modulus degree does not match m");
        if (mod.back() != 1) fail(errc::degree_mismatch, "modulus must be monic");
        if (!fpx_irreducible(mod, p)) fail(errc::reducible_modulus, "modulus is reducible");
        f->modulus = std::move(mod);
    } else {
        f->modulus = default_modulus(p, m);
    }
    return f;
}

FieldPtr make_field(u64 p, u32 m, const std::vector<u64>& modulus) {
    return make_field(p, m, &modulus);
}

bool same_field(const Field& a, const Field& b) {
    return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
}

// ---- FieldElem --------------------------------------------------------------

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.F || !b.F || !same_field(*a.F, *b.F))
        fail(errc::field_mismatch, "elements of different fields");
}
}  // namespace

bool FieldElem::is_one() const {
    if (c[0] != 1 % F->p) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i]) return false;
    return true;
}

FieldElem FieldElem::pow(u64 e) const {
    FieldElem r(F, std::vector<u64>(F->m));
    F->el_pow(r.c.data(), c.data(), e);
    return r;
}

FieldElem FieldElem::inv() const {
    FieldElem r(F, std::vector<u64>(F->m));
    F->el_inv(r.c.data(), c.data());
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    FieldElem r(a.F, std::vector<u64>(a.F->m));
    a.F->el_add(r.c.data(), a.c.data(), b.c.data());
    return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    FieldElem r(a.F, std::vector<u64>(a.F->m));
    a.F->el_sub(r.c.data(), a.c.data(), b.c.data());
    return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    FieldElem r(a.F, std::vector<u64>(a.F->m));
    a.F->el_mul(r.c.data(), a.c.data(), b.c.data());
    return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

FieldElem operator-(const FieldElem& a) {
    FieldElem r(a.F, std::vector<u64>(a.F->m));
    a.F->el_neg(r.c.data(), a.c.data());
    return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.c == b.c;
}

int elem_cmp(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.F->el_cmp(a.c.data(), b.c.data());
}

FieldElem zero_elem(const FieldPtr& F) { return FieldElem(F, std::vector<u64>(F->m, 0)); }

FieldElem one_elem(const FieldPtr& F) {
    FieldElem r = zero_elem(F);
    r.c[0] = 1 % F->p;
    return r;
}

FieldElem gen_elem(const FieldPtr& F) {
    FieldElem r = zero_elem(F);
    if (F->m == 1)
        fail(errc::degree_mismatch, "prime field has no extension generator");
    r.c[1] = 1;
    return r;
}

FieldElem scalar_elem(const FieldPtr& F, i64 v) {
    FieldElem r = zero_elem(F);
    r.c[0] = F->reduce_int(v);
    return r;
}

FieldElem element_from_index(const FieldPtr& F, u64 idx) {
    FieldElem r = zero_elem(F);
    for (u32 i = 0; i < F->m && idx; ++i) {
        r.c[i] = idx % F->p;
        idx /= F->p;
    }
    if (idx) fail(errc::overflow, "element index out of range");
    return r;
}

u64 element_index(const FieldElem& a) {
    u64 idx = 0;
    for (u32 i = a.F->m; i-- > 0;) idx = mul_u64_checked(idx, a.F->p) + a.c[i];
    return idx;
}

FieldElem frobenius(const FieldElem& a, i64 i) {
    u32 M = a.F->m;
    i64 j = i % (i64)M;
    if (j < 0) j += M;
    FieldElem r(a.F, std::vector<u64>(M));
    a.F->el_pow_p(r.c.data(), a.c.data(), (u64)j);
    return r;
}

u32 element_degree(const FieldElem& a, u32 base_abs_deg) {
    u32 M = a.F->m;
    if (base_abs_deg == 0 || M % base_abs_deg != 0)
        fail(errc::degree_mismatch, "base degree does not divide ambient degree");
    FieldElem cur = a;
    for (u32 s = 1;; ++s) {
        cur = frobenius(cur, base_abs_deg);
        if (cur == a) return s;
        if (s > M) fail(errc::internal, "element degree exceeded ambient degree");
    }
}

u32 element_degree(const FieldElem& a, const Field& base) { return element_degree(a, base.m); }

u64 mult_order(const FieldElem& a) {
    if (a.is_zero()) fail(errc::zero_element, "multiplicative order of zero");
    u64 n = a.F->card() - 1;
    u64 ord = n;
    for (auto [r, e] : factorize_u64(n).prime_powers) {
        for (u32 i = 0; i < e && ord % r == 0; ++i) {
            if (a.pow(ord / r).is_one())
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

// ---- embeddings (construction lives in towers.cpp) ---------------------------

Embedding identity_embedding(const FieldPtr& F) {
    return Embedding{F, F, F->m > 1 ? gen_elem(F) : zero_elem(F)};
}

FieldElem Embedding::embed(const FieldElem& a) const {
    if (!same_field(*a.F, *sub)) fail(errc::field_mismatch, "embed: element not in subfield");
    if (is_identity()) return FieldElem(super, a.c);
    // a = sum a_i t^i  ->  sum a_i rho^i
    FieldElem acc = zero_elem(super);
    FieldElem pw = one_elem(super);
    for (u32 i = 0; i < sub->m; ++i) {
        if (a.c[i]) {
            FieldElem term = pw;
            for (u64& x : term.c) x = super->mm(x, a.c[i]);
            acc = acc + term;
        }
        if (i + 1 < sub->m) pw = pw * gen_image;
    }
    return acc;
}

std::optional<FieldElem> Embedding::unembed(const FieldElem& a) const {
    if (!same_field(*a.F, *super)) fail(errc::field_mismatch, "unembed: element not in superfield");
    if (is_identity()) return FieldElem(sub, a.c);
    // solve sum_i y_i rho^i = a over F_p by Gaussian elimination
    u32 rows = super->m, cols = sub->m;
    u64 p = super->p;
    std::vector<std::vector<u64>> A(rows, std::vector<u64>(cols + 1, 0));
    FieldElem pw = one_elem(super);
    for (u32 j = 0; j < cols; ++j) {
        for (u32 i = 0; i < rows; ++i) A[i][j] = pw.c[i];
        if (j + 1 < cols) pw = pw * gen_image;
    }
    for (u32 i = 0; i < rows; ++i) A[i][cols] = a.c[i];
    u32 rank = 0;
    std::vector<int> pivot_col(rows, -1);
    for (u32 j = 0; j < cols && rank < rows; ++j) {
        u32 sel = rank;
        while (sel < rows && A[sel][j] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[rank]);
        u64 inv = powmod(A[rank][j], p - 2, p);
        for (u32 k = j; k <= cols; ++k) A[rank][k] = super->mm(A[rank][k], inv);
        for (u32 i = 0; i < rows; ++i) {
            if (i == rank || A[i][j] == 0) continue;
            u64 f = A[i][j];
            for (u32 k = j; k <= cols; ++k) {
                u64 sub_ = super->mm(f, A[rank][k]);
                A[i][k] = (A[i][k] + p - sub_) % p;
            }
        }
        pivot_col[rank] = (int)j;
        ++rank;
    }
    for (u32 i = rank; i < rows; ++i)
        if (A[i][cols]) return std::nullopt;  // inconsistent: not in the image
    FieldElem y = zero_elem(sub);
    for (u32 i = 0; i < rank; ++i) y.c[(u32)pivot_col[i]] = A[i][cols];
    return y;
}

}  // namespace iterfact
