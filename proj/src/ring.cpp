#include "padic/ring.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace {

// ---- dense polynomial helpers over Z/(M), ascending coefficients ----

void trim(std::vector<Int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod (monic m), coefficients reduced mod M
void reduce_mod_monic(std::vector<Int>& a, const std::vector<Int>& m, const Int& M) {
    const size_t d = m.size() - 1;
    for (size_t i = a.size(); i-- > d;) {
        if (a[i] == 0) continue;
        Int q = a[i];
        for (size_t k = 0; k < d; ++k) {
            a[i - d + k] -= q * m[k];
            mpz_mod(a[i - d + k].get_mpz_t(), a[i - d + k].get_mpz_t(), M.get_mpz_t());
        }
        a[i] = 0;
    }
    if (a.size() > d) a.resize(d);
    for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
}

std::vector<Int> poly_mulmod(const std::vector<Int>& a, const std::vector<Int>& b,
                             const std::vector<Int>& m, const Int& M) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    for (auto& x : c) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
    reduce_mod_monic(c, m, M);
    trim(c);
    return c;
}

std::vector<Int> poly_powmod(std::vector<Int> base, Int k, const std::vector<Int>& m, const Int& M) {
    std::vector<Int> acc{Int(1)};
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = poly_mulmod(acc, base, m, M);
        k >>= 1;
        if (k > 0) base = poly_mulmod(base, base, m, M);
    }
    return acc;
}

std::vector<Int> poly_sub(std::vector<Int> a, const std::vector<Int>& b, const Int& M) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        mpz_mod(a[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
    }
    trim(a);
    return a;
}

// gcd over F_p (M = p prime)
std::vector<Int> poly_gcd_fp(std::vector<Int> a, std::vector<Int> b, const Int& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b, with b made monic first
        Int lead_inv;
        mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
        std::vector<Int> bm = b;
        for (auto& c : bm) c = c * lead_inv % p;
        reduce_mod_monic(a, bm, p);
        trim(a);
        std::swap(a, b);
    }
    return a;
}

// inverse of a modulo monic irreducible m over F_p, via extended Euclid
std::vector<Int> poly_invmod_fp(std::vector<Int> a, const std::vector<Int>& m, const Int& p) {
    // r0 = m, r1 = a; t0 = 0, t1 = 1
    std::vector<Int> r0 = m, r1 = a, t0, t1{Int(1)};
    trim(r1);
    while (!r1.empty() && r1.size() > 1) {
        Int lead_inv;
        mpz_invert(lead_inv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t());
        std::vector<Int> r1m = r1;
        for (auto& c : r1m) c = c * lead_inv % p;
        // long division of r0 by r1m to get quotient q
        std::vector<Int> rem = r0, q(rem.size() > r1m.size() ? rem.size() - r1m.size() + 1 : 1, Int(0));
        const size_t d = r1m.size() - 1;
        for (size_t i = rem.size(); i-- > 0 && rem.size() > d;) {
            if (i < d || i >= rem.size() || rem[i] == 0) continue;
            Int c = rem[i];
            q[i - d] = c;
            for (size_t k = 0; k <= d; ++k) {
                rem[i - d + k] -= c * r1m[k];
                mpz_mod(rem[i - d + k].get_mpz_t(), rem[i - d + k].get_mpz_t(), p.get_mpz_t());
            }
        }
        trim(rem);
        // scale quotient back: r0 = q*r1m + rem and r1 = lead*r1m, so r0 = (q*lead_inv)*r1 + rem
        for (auto& c : q) c = c * lead_inv % p;
        // (t0, t1) <- (t1, t0 - q*t1)
        std::vector<Int> qt1(q.size() + (t1.empty() ? 0 : t1.size() - 1) + 1, Int(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j) qt1[i + j] += q[i] * t1[j];
        for (auto& c : qt1) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        std::vector<Int> t2 = poly_sub(t0, qt1, p);
        t0 = std::move(t1);
        t1 = std::move(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    if (r1.empty()) throw NotAUnit("residue is not invertible");
    // r1 is a nonzero constant: divide t1 by it
    Int cinv;
    mpz_invert(cinv.get_mpz_t(), r1[0].get_mpz_t(), p.get_mpz_t());
    for (auto& c : t1) c = c * cinv % p;
    t1.resize(m.size() - 1, Int(0));
    return t1;
}

bool rabin_irreducible(const std::vector<Int>& h, const Int& p) {
    const long r = static_cast<long>(h.size()) - 1;
    if (r < 1) return false;
    std::vector<Int> x{Int(0), Int(1)};
    std::vector<Int> xr = x;
    reduce_mod_monic(xr, h, p);
    trim(xr);
    // X^{p^r} == X mod (h, p)
    Int pr;
    mpz_pow_ui(pr.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
    std::vector<Int> xq = poly_powmod(x, pr, h, p);
    if (poly_sub(xq, xr, p) != std::vector<Int>{}) return false;
    // gcd(h, X^{p^{r/l}} - X) = 1 for every prime l | r
    for (long l = 2; l <= r; ++l) {
        if (r % l != 0) continue;
        bool prime = true;
        for (long d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        Int prl;
        mpz_pow_ui(prl.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r / l));
        std::vector<Int> g = poly_gcd_fp(h, poly_sub(poly_powmod(x, prl, h, p), xr, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

long int_valuation(const Int& x, const Int& p) {
    if (x == 0) throw Error("int_valuation of zero");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// ---------------------------------------------------------------- RingConfig

RingConfig::RingConfig(Int p_, int r_, int e_, std::vector<Int> h_, std::vector<Int> E_, int n_prec_)
    : p(std::move(p_)), r(r_), e(e_), h(std::move(h_)), E(std::move(E_)), n_prec(n_prec_) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw Error("RingConfig: p is not prime");
    if (r < 1 || e < 1) throw Error("RingConfig: need r >= 1 and e >= 1");
    if (n_prec < 1) throw Error("RingConfig: need n_prec >= 1");
    if (static_cast<long>(h.size()) != r + 1 || h.back() != 1)
        throw Error("RingConfig: h must be monic of degree r");
    if (static_cast<long>(E.size()) != e + 1 || E.back() != 1)
        throw Error("RingConfig: E must be monic of degree e");
    // Eisenstein: constant term exactly p*unit, middle coefficients divisible by p
    if (E[0] == 0 || int_valuation(E[0], p) != 1)
        throw Error("RingConfig: E constant term must have p-valuation exactly 1");
    for (int k = 1; k < e; ++k)
        if (E[k] != 0 && int_valuation(E[k], p) < 1)
            throw Error("RingConfig: E middle coefficients must be divisible by p");
    {
        std::vector<Int> hp = h;
        for (auto& c : hp) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        if (!rabin_irreducible(hp, p)) throw Error("RingConfig: h is not irreducible mod p");
    }
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n_prec));
    // pi^e = -(E_{e-1} pi^{e-1} + ... + E_0) = p * v with v = -sum (E_k/p) pi^k
    pi_e_over_p.resize(e);
    for (int k = 0; k < e; ++k) {
        Int q;
        mpz_divexact(q.get_mpz_t(), E[k].get_mpz_t(), p.get_mpz_t());
        pi_e_over_p[k] = -q;
        mpz_mod(pi_e_over_p[k].get_mpz_t(), pi_e_over_p[k].get_mpz_t(), modulus.get_mpz_t());
    }
}

std::vector<Int> RingConfig::default_h(const Int& p, int r) {
    if (r == 1) return {Int(0), Int(1)};
    // first monic degree-r polynomial (low coefficients counted in base p)
    // that passes the irreducibility test
    Int bound;
    mpz_pow_ui(bound.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
    for (Int n = 1; n < bound; ++n) {
        std::vector<Int> h(static_cast<size_t>(r) + 1, Int(0));
        Int rest = n;
        for (int i = 0; i < r; ++i) {
            h[i] = rest % p;
            rest /= p;
        }
        h[r] = 1;
        if (rabin_irreducible(h, p)) return h;
    }
    throw Error("default_h: no irreducible polynomial found");  // unreachable
}

std::vector<Int> RingConfig::default_E(const Int& p, int e) {
    std::vector<Int> E(static_cast<size_t>(e) + 1, Int(0));
    E[0] = -p;
    E[e] = 1;
    return E;
}

RingConfig RingConfig::with_defaults(Int p, int r, int e, int n_prec) {
    std::vector<Int> h = default_h(p, r);
    std::vector<Int> E = default_E(p, e);
    return RingConfig(std::move(p), r, e, std::move(h), std::move(E), n_prec);
}

bool RingConfig::operator==(const RingConfig& o) const {
    return p == o.p && r == o.r && e == o.e && n_prec == o.n_prec && h == o.h && E == o.E;
}

ConfigPtr make_config(Int p, int r, int e, int n_prec) {
    return std::make_shared<const RingConfig>(RingConfig::with_defaults(std::move(p), r, e, n_prec));
}

ConfigPtr make_config(RingConfig cfg) { return std::make_shared<const RingConfig>(std::move(cfg)); }

bool coprimality_hypothesis(const RingConfig& cfg) {
    Int g;
    Int m = cfg.p * cfg.p - cfg.p;
    Int e(cfg.e);
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return g == 1;
}

// ------------------------------------------------------------------ OKScalar

OKScalar::OKScalar(ConfigPtr cfg) : cfg_(std::move(cfg)) {
    c_.assign(static_cast<size_t>(cfg_->e) * cfg_->r, Int(0));
}

OKScalar OKScalar::from_int(ConfigPtr cfg, const Int& n) {
    OKScalar x(std::move(cfg));
    mpz_mod(x.c_[0].get_mpz_t(), n.get_mpz_t(), x.cfg_->modulus.get_mpz_t());
    return x;
}

OKScalar OKScalar::uniformizer(ConfigPtr cfg) {
    OKScalar x(std::move(cfg));
    if (x.cfg_->e == 1) {
        // pi = -E_0 (degree-1 Eisenstein: pi - (-E_0) = 0)
        Int v = -x.cfg_->E[0];
        mpz_mod(x.c_[0].get_mpz_t(), v.get_mpz_t(), x.cfg_->modulus.get_mpz_t());
    } else {
        x.c_[static_cast<size_t>(1) * x.cfg_->r] = 1;
    }
    return x;
}

OKScalar OKScalar::unramified_generator(ConfigPtr cfg) {
    OKScalar x(std::move(cfg));
    if (x.cfg_->r == 1) {
        Int v = -x.cfg_->h[0];
        mpz_mod(x.c_[0].get_mpz_t(), v.get_mpz_t(), x.cfg_->modulus.get_mpz_t());
    } else {
        x.c_[1] = 1;
    }
    return x;
}

OKScalar OKScalar::from_coords(ConfigPtr cfg, std::vector<Int> coords) {
    OKScalar x(std::move(cfg));
    if (coords.size() != x.c_.size()) throw Error("from_coords: wrong coordinate count");
    for (size_t i = 0; i < coords.size(); ++i)
        mpz_mod(x.c_[i].get_mpz_t(), coords[i].get_mpz_t(), x.cfg_->modulus.get_mpz_t());
    return x;
}

void OKScalar::require_same_config(const OKScalar& o) const {
    if (cfg_ == o.cfg_) return;
    if (!cfg_ || !o.cfg_ || !(*cfg_ == *o.cfg_)) throw ConfigMismatch("operands from different ring configurations");
}

bool OKScalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

OKScalar OKScalar::operator-() const {
    OKScalar y(cfg_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        y.c_[i] = cfg_->modulus - c_[i];
    }
    return y;
}

OKScalar operator+(const OKScalar& a, const OKScalar& b) {
    a.require_same_config(b);
    OKScalar y(a.cfg_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        y.c_[i] = a.c_[i] + b.c_[i];
        if (y.c_[i] >= a.cfg_->modulus) y.c_[i] -= a.cfg_->modulus;
    }
    return y;
}

OKScalar operator-(const OKScalar& a, const OKScalar& b) {
    a.require_same_config(b);
    OKScalar y(a.cfg_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        y.c_[i] = a.c_[i] - b.c_[i];
        if (y.c_[i] < 0) y.c_[i] += a.cfg_->modulus;
    }
    return y;
}

OKScalar operator*(const OKScalar& a, const OKScalar& b) {
    a.require_same_config(b);
    const RingConfig& cfg = *a.cfg_;
    const int e = cfg.e, r = cfg.r;
    const Int& M = cfg.modulus;
    OKScalar y(a.cfg_);

    if (e == 1 && r == 1) {
        y.c_[0] = a.c_[0] * b.c_[0] % M;
        return y;
    }

    // bivariate product: rows indexed by pi-power (up to 2e-2), entries
    // by t-power (up to 2r-2)
    std::vector<std::vector<Int>> rows(static_cast<size_t>(2 * e - 1),
                                       std::vector<Int>(static_cast<size_t>(2 * r - 1), Int(0)));
    for (int i1 = 0; i1 < e; ++i1)
        for (int j1 = 0; j1 < r; ++j1) {
            const Int& x = a.c_[static_cast<size_t>(i1) * r + j1];
            if (x == 0) continue;
            for (int i2 = 0; i2 < e; ++i2)
                for (int j2 = 0; j2 < r; ++j2) {
                    const Int& z = b.c_[static_cast<size_t>(i2) * r + j2];
                    if (z == 0) continue;
                    rows[static_cast<size_t>(i1 + i2)][static_cast<size_t>(j1 + j2)] += x * z;
                }
        }
    // reduce each row mod (h, M)
    for (auto& row : rows) {
        for (auto& x : row) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
        reduce_mod_monic(row, cfg.h, M);
        row.resize(static_cast<size_t>(r), Int(0));
    }
    // reduce pi-direction mod E (integer coefficients)
    for (int d = 2 * e - 2; d >= e; --d) {
        auto& top = rows[static_cast<size_t>(d)];
        bool any = false;
        for (const auto& x : top)
            if (x != 0) any = true;
        if (!any) continue;
        for (int k = 0; k < e; ++k) {
            if (cfg.E[k] == 0) continue;
            auto& dst = rows[static_cast<size_t>(d - e + k)];
            for (int j = 0; j < r; ++j) {
                dst[static_cast<size_t>(j)] -= cfg.E[k] * top[static_cast<size_t>(j)];
                mpz_mod(dst[static_cast<size_t>(j)].get_mpz_t(), dst[static_cast<size_t>(j)].get_mpz_t(),
                        M.get_mpz_t());
            }
        }
        for (auto& x : top) x = 0;
    }
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < r; ++j) y.c_[static_cast<size_t>(i) * r + j] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return y;
}

bool operator==(const OKScalar& a, const OKScalar& b) {
    a.require_same_config(b);
    return a.c_ == b.c_;
}

OKScalar OKScalar::mul_int(const Int& n) const {
    OKScalar y(cfg_);
    Int m;
    mpz_mod(m.get_mpz_t(), n.get_mpz_t(), cfg_->modulus.get_mpz_t());
    for (size_t i = 0; i < c_.size(); ++i) y.c_[i] = c_[i] * m % cfg_->modulus;
    return y;
}

OKScalar OKScalar::pow(unsigned long k) const {
    OKScalar acc = one(cfg_), base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

OKScalar OKScalar::pow(const Int& k) const {
    if (k < 0) throw Error("pow: negative exponent");
    OKScalar acc = one(cfg_), base = *this;
    Int m = k;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) acc *= base;
        m >>= 1;
        if (m > 0) base *= base;
    }
    return acc;
}

long OKScalar::stored_valuation() const {
    const long full = cfg_->uk_prec();
    long v = full;
    for (int i = 0; i < cfg_->e; ++i)
        for (int j = 0; j < cfg_->r; ++j) {
            const Int& x = c_[static_cast<size_t>(i) * cfg_->r + j];
            if (x == 0) continue;
            long cand = static_cast<long>(cfg_->e) * int_valuation(x, cfg_->p) + i;
            v = std::min(v, cand);
        }
    return v;
}

ValuationResult OKScalar::valuation() const {
    long v = stored_valuation();
    if (v >= cfg_->uk_prec()) return ValuationResult::zero_to_precision();
    return ValuationResult::exact(v);
}

OKScalar OKScalar::invert() const {
    if (stored_valuation() != 0) throw NotAUnit("invert: element has positive valuation");
    // lift the residue inverse, then Newton: y <- y(2 - xy)
    std::vector<Int> res = residue();
    std::vector<Int> hp = cfg_->h;
    for (auto& c : hp) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), cfg_->p.get_mpz_t());
    std::vector<Int> rinv = poly_invmod_fp(res, hp, cfg_->p);
    OKScalar y(cfg_);
    for (int j = 0; j < cfg_->r; ++j) y.c_[static_cast<size_t>(j)] = rinv[static_cast<size_t>(j)];
    OKScalar two = from_int(cfg_, 2);
    for (int it = 0; it < 64; ++it) {
        OKScalar prod = *this * y;
        if (prod == one(cfg_)) return y;
        y = y * (two - prod);
    }
    throw Error("invert: Newton iteration failed to converge");
}

std::vector<Int> OKScalar::residue() const {
    std::vector<Int> res(static_cast<size_t>(cfg_->r));
    for (int j = 0; j < cfg_->r; ++j)
        mpz_mod(res[static_cast<size_t>(j)].get_mpz_t(), c_[static_cast<size_t>(j)].get_mpz_t(),
                cfg_->p.get_mpz_t());
    return res;
}

bool OKScalar::embeds_in_Zp() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Int& OKScalar::zp_value() const {
    if (!embeds_in_Zp()) throw Error("zp_value: element does not embed in Z_p");
    return c_[0];
}

OKScalar OKScalar::mul_pi_pow(long k) const {
    if (k < 0) throw Error("mul_pi_pow: negative exponent");
    return *this * uniformizer(cfg_).pow(static_cast<unsigned long>(k));
}

OKScalar OKScalar::div_pi_pow_exact(long k) const {
    if (k < 0) throw Error("div_pi_pow_exact: negative exponent");
    if (k == 0) return *this;
    const int e = cfg_->e;
    long a = k / e, b = k % e;
    OKScalar x = *this;
    if (b > 0) {
        x = x.mul_pi_pow(e - b);
        a += 1;
    }
    // now x = p^a * v^a * (this / pi^k) with v = pi^e/p
    if (a > 0) {
        OKScalar v = from_coords(cfg_, [&] {
            std::vector<Int> coords(static_cast<size_t>(e) * cfg_->r, Int(0));
            for (int i = 0; i < e; ++i) coords[static_cast<size_t>(i) * cfg_->r] = cfg_->pi_e_over_p[static_cast<size_t>(i)];
            return coords;
        }());
        x = x * v.invert().pow(static_cast<unsigned long>(a));
        Int pa;
        mpz_pow_ui(pa.get_mpz_t(), cfg_->p.get_mpz_t(), static_cast<unsigned long>(a));
        for (auto& comp : x.c_) {
            if (!mpz_divisible_p(comp.get_mpz_t(), pa.get_mpz_t()))
                throw Error("div_pi_pow_exact: element not divisible by pi^k");
            mpz_divexact(comp.get_mpz_t(), comp.get_mpz_t(), pa.get_mpz_t());
        }
    }
    return x;
}

std::string OKScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < cfg_->e; ++i)
        for (int j = 0; j < cfg_->r; ++j) {
            const Int& x = c_[static_cast<size_t>(i) * cfg_->r + j];
            if (x == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << x.get_str();
            if (j > 0) os << "*t" << (j > 1 ? "^" + std::to_string(j) : "");
            if (i > 0) os << "*pi" << (i > 1 ? "^" + std::to_string(i) : "");
        }
    if (first) os << "0";
    return os.str();
}

std::vector<Int> residue_add(const RingConfig& cfg, const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(static_cast<size_t>(cfg.r), Int(0));
    for (int j = 0; j < cfg.r; ++j) {
        Int s = (j < static_cast<int>(a.size()) ? a[static_cast<size_t>(j)] : Int(0)) +
                (j < static_cast<int>(b.size()) ? b[static_cast<size_t>(j)] : Int(0));
        mpz_mod(c[static_cast<size_t>(j)].get_mpz_t(), s.get_mpz_t(), cfg.p.get_mpz_t());
    }
    return c;
}

std::vector<Int> residue_mul(const RingConfig& cfg, const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> hp = cfg.h;
    for (auto& c : hp) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), cfg.p.get_mpz_t());
    std::vector<Int> c = poly_mulmod(a, b, hp, cfg.p);
    c.resize(static_cast<size_t>(cfg.r), Int(0));
    return c;
}

bool residue_is_zero(const std::vector<Int>& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace padic
