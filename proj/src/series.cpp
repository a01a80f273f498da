#include "padic/series.hpp"

#include <algorithm>

namespace padic {

// ------------------------------------------------------------------- KScalar

KScalar::KScalar(OKScalar integral) : unit_(std::move(integral)), shift_(0) {
    prec_ = unit_.config()->uk_prec();
    uval_ = unit_.stored_valuation();
}

KScalar::KScalar(OKScalar unit_part, long shift, long abs_prec)
    : unit_(std::move(unit_part)), shift_(shift), prec_(abs_prec) {
    if (shift_ < 0) throw Error("KScalar: negative shift");
    normalize();
}

KScalar KScalar::zero(const ConfigPtr& cfg) {
    KScalar z{OKScalar::zero(cfg)};
    z.exact0_ = true;
    return z;
}

KScalar KScalar::from_int(const ConfigPtr& cfg, const Int& n) {
    if (n == 0) return zero(cfg);
    return KScalar(OKScalar::from_int(cfg, n));
}

void KScalar::normalize() {
    const RingConfig& cfg = *unit_.config();
    const long full = cfg.uk_prec();
    prec_ = std::min(prec_, full - shift_);
    if (prec_ <= 0) throw PrecisionExhausted("certified precision exhausted");
    uval_ = unit_.stored_valuation();
    if (uval_ >= full) {
        shift_ = 0;
        return;
    }
    if (shift_ == 0) return;
    long k = std::min(shift_, uval_);
    if (k > 0) {
        unit_ = unit_.div_pi_pow_exact(k);
        shift_ -= k;
        // the quotient's canonical representative carries e*ceil(k/e)
        // fewer certified digits
        long digits_lost = static_cast<long>(cfg.e) * ((k + cfg.e - 1) / cfg.e);
        prec_ = std::min(prec_, full - digits_lost - shift_);
        uval_ = unit_.stored_valuation();
        if (uval_ >= full) shift_ = 0;
        if (prec_ <= 0) throw PrecisionExhausted("certified precision exhausted");
    }
}

bool KScalar::is_zero_to_prec() const { return exact0_ || uval_ - shift_ >= prec_; }

long KScalar::vlow() const {
    if (exact0_) return kExactZeroVal;
    return std::min(uval_ - shift_, prec_);
}

long KScalar::valuation() const {
    if (exact0_) throw PrecisionExhausted("valuation: exact zero");
    long w = uval_ - shift_;
    if (w >= prec_) throw PrecisionExhausted("valuation: not certified at this precision");
    return w;
}

KScalar operator+(const KScalar& a, const KScalar& b) {
    if (a.exact0_) return b;
    if (b.exact0_) return a;
    long s = std::max(a.shift_, b.shift_);
    OKScalar u = a.unit_.mul_pi_pow(s - a.shift_) + b.unit_.mul_pi_pow(s - b.shift_);
    return KScalar(std::move(u), s, std::min(a.prec_, b.prec_));
}

KScalar operator-(const KScalar& a, const KScalar& b) {
    if (b.exact0_) return a;
    if (a.exact0_) return -b;
    long s = std::max(a.shift_, b.shift_);
    OKScalar u = a.unit_.mul_pi_pow(s - a.shift_) - b.unit_.mul_pi_pow(s - b.shift_);
    return KScalar(std::move(u), s, std::min(a.prec_, b.prec_));
}

KScalar KScalar::operator-() const {
    KScalar y = *this;
    y.unit_ = -y.unit_;
    return y;
}

KScalar operator*(const KScalar& a, const KScalar& b) {
    if (a.exact0_ || b.exact0_) return KScalar::zero(a.unit_.config());
    long prec = product_prec(a, b);
    if (a.unit_.is_zero() || b.unit_.is_zero())
        return KScalar(OKScalar::zero(a.unit_.config()), 0, prec);
    OKScalar u = a.unit_ * b.unit_;
    return KScalar(std::move(u), a.shift_ + b.shift_, prec);
}

void KScalar::cap_prec(long bound) {
    if (exact0_) {
        // the accumulated value stays zero, but an omitted term caps
        // what the coefficient is certified to
        *this = KScalar(OKScalar::zero(unit_.config()), 0,
                        std::min(unit_.config()->uk_prec(), bound));
        return;
    }
    prec_ = std::min(prec_, bound);
    if (prec_ <= 0) throw PrecisionExhausted("certified precision exhausted");
}

KScalar KScalar::mul_int(const Int& n) const {
    if (exact0_) return *this;
    if (n == 0) return zero(config());
    return KScalar(unit_.mul_int(n), shift_, prec_);
}

KScalar KScalar::inverse() const {
    if (is_zero_to_prec()) throw NotAUnit("inverse: element is zero to certified precision");
    const RingConfig& cfg = *unit_.config();
    const long full = cfg.uk_prec();
    long w = uval_;  // exact: w - shift < prec by the check above
    long val = w - shift_;
    OKScalar uu = unit_;
    long digits_lost = 0;
    if (w > 0) {
        uu = uu.div_pi_pow_exact(w);
        digits_lost = static_cast<long>(cfg.e) * ((w + cfg.e - 1) / cfg.e);
    }
    OKScalar vinv = uu.invert();
    long prec = std::min(prec_ - 2 * val, (full - digits_lost) - val);
    if (shift_ >= w) return KScalar(vinv.mul_pi_pow(shift_ - w), 0, prec);
    return KScalar(std::move(vinv), w - shift_, prec);
}

bool eq_to_prec(const KScalar& a, const KScalar& b) { return (a - b).is_zero_to_prec(); }

// -------------------------------------------------------------- TruncSeries1

TruncSeries1::TruncSeries1(ConfigPtr cfg, int N) : cfg_(std::move(cfg)), N_(N) {
    if (N_ < 1) throw Error("TruncSeries1: need N >= 1");
    c_.assign(static_cast<size_t>(N_), KScalar::zero(cfg_));
}

TruncSeries1::TruncSeries1(ConfigPtr cfg, int N, std::vector<KScalar> coeffs)
    : cfg_(std::move(cfg)), N_(N), c_(std::move(coeffs)) {
    if (N_ < 1) throw Error("TruncSeries1: need N >= 1");
    if (c_.size() != static_cast<size_t>(N_)) throw Error("TruncSeries1: coefficient count != N");
}

TruncSeries1 TruncSeries1::identity(const ConfigPtr& cfg, int N) {
    TruncSeries1 s(cfg, N);
    s.c_[0] = KScalar::one(cfg);
    return s;
}

TruncSeries1 TruncSeries1::from_ints(const ConfigPtr& cfg, int N, const std::vector<Int>& a) {
    TruncSeries1 s(cfg, N);
    for (size_t k = 0; k < a.size() && k < static_cast<size_t>(N); ++k)
        s.c_[k] = KScalar::from_int(cfg, a[k]);
    return s;
}

long TruncSeries1::certified_prec() const {
    long m = cfg_->uk_prec();
    for (const auto& c : c_) m = std::min(m, c.abs_prec());
    return m;
}

bool TruncSeries1::integral() const {
    for (const auto& c : c_)
        if (!c.is_integral()) return false;
    return true;
}

bool TruncSeries1::is_zero_to_prec() const {
    for (const auto& c : c_)
        if (!c.is_zero_to_prec()) return false;
    return true;
}

TruncSeries1 TruncSeries1::truncated(int M) const {
    if (M > N_) throw TruncationTooShallow("truncated: requested degree exceeds stored degree");
    TruncSeries1 s(cfg_, M);
    std::copy(c_.begin(), c_.begin() + M, s.c_.begin());
    return s;
}

namespace {
void require_same_config(const TruncSeries1& s, const TruncSeries1& t) {
    if (s.config() == t.config()) return;
    if (!(*s.config() == *t.config())) throw ConfigMismatch("series over different ring configurations");
}
bool stored_zero(const KScalar& x) { return x.unit_part().is_zero(); }
}  // namespace

TruncSeries1 operator+(const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    int N = std::min(s.degree(), t.degree());
    TruncSeries1 r(s.config(), N);
    for (int i = 1; i <= N; ++i) r.c_[static_cast<size_t>(i - 1)] = s.coeff(i) + t.coeff(i);
    return r;
}

TruncSeries1 operator-(const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    int N = std::min(s.degree(), t.degree());
    TruncSeries1 r(s.config(), N);
    for (int i = 1; i <= N; ++i) r.c_[static_cast<size_t>(i - 1)] = s.coeff(i) - t.coeff(i);
    return r;
}

TruncSeries1 operator*(const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    int N = std::min(s.degree(), t.degree());
    TruncSeries1 r(s.config(), N);
    for (int i = 1; i < N; ++i) {
        const KScalar& a = s.coeff(i);
        if (a.is_exact_zero()) continue;
        for (int j = 1; i + j <= N; ++j) {
            const KScalar& b = t.coeff(j);
            if (b.is_exact_zero()) continue;
            KScalar& acc = r.c_[static_cast<size_t>(i + j - 1)];
            // a term that is zero only to precision still bounds the result
            if (stored_zero(a) || stored_zero(b))
                acc.cap_prec(product_prec(a, b));
            else
                acc += a * b;
        }
    }
    return r;
}

TruncSeries1 TruncSeries1::scaled(const KScalar& c) const {
    TruncSeries1 r(cfg_, N_);
    if (c.is_exact_zero()) return r;
    for (int i = 1; i <= N_; ++i) {
        const KScalar& x = coeff(i);
        if (x.is_exact_zero()) continue;
        if (stored_zero(x) || stored_zero(c))
            r.c_[static_cast<size_t>(i - 1)].cap_prec(product_prec(x, c));
        else
            r.c_[static_cast<size_t>(i - 1)] = x * c;
    }
    return r;
}

TruncSeries1 TruncSeries1::scaled_int(const Int& n) const {
    TruncSeries1 r(cfg_, N_);
    for (int i = 1; i <= N_; ++i) r.c_[static_cast<size_t>(i - 1)] = coeff(i).mul_int(n);
    return r;
}

TruncSeries1 compose(const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    const int N = std::min(s.degree(), t.degree());
    // ascending power sum s(t) = sum_k s_k t^k; Horner scratch would
    // carry the denominators of the deep coefficients of s through
    // every level and lose certified precision
    TruncSeries1 tt = t.truncated(N);
    TruncSeries1 P = tt;
    TruncSeries1 r = tt.scaled(s.coeff(1));
    for (int k = 2; k <= N; ++k) {
        P = P * tt;
        r = r + P.scaled(s.coeff(k));
    }
    return r;
}

TruncSeries1 iterate(const TruncSeries1& s, long n) {
    if (n < 0) throw Error("iterate: negative count");
    TruncSeries1 r = TruncSeries1::identity(s.config(), s.degree());
    TruncSeries1 base = s;
    while (n > 0) {
        if (n & 1) r = compose(r, base);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return r;
}

TruncSeries1 comp_inverse(const TruncSeries1& s) {
    const KScalar& lam = s.coeff(1);
    if (!lam.is_integral() || stored_zero(lam) || lam.unit_part().stored_valuation() != 0)
        throw NotInvertible("comp_inverse: linear coefficient is not a unit");
    const int N = s.degree();
    const ConfigPtr& cfg = s.config();
    KScalar lam_inv = lam.inverse();

    std::vector<KScalar> t(static_cast<size_t>(N), KScalar::zero(cfg));
    t[0] = lam_inv;
    // running data: P = s^m, T = sum_{k<m} t_k s^k, invpow = lam^{-m}
    TruncSeries1 P = s;
    TruncSeries1 T = s.scaled(t[0]);
    KScalar invpow = lam_inv;
    for (int m = 2; m <= N; ++m) {
        invpow = invpow * lam_inv;
        t[static_cast<size_t>(m - 1)] = (-T.coeff(m)) * invpow;
        if (m == N) break;
        P = P * s;
        T = T + P.scaled(t[static_cast<size_t>(m - 1)]);
    }
    return TruncSeries1(cfg, N, std::move(t));
}

std::optional<int> weierstrass_degree(const TruncSeries1& s) {
    for (int i = 1; i <= s.degree(); ++i) {
        const KScalar& c = s.coeff(i);
        if (c.is_zero_to_prec()) continue;
        if (!c.is_integral()) continue;  // not an O_K coefficient, cannot be a unit
        if (!residue_is_zero(c.unit_part().residue())) return i;
    }
    return std::nullopt;
}

DerivativeResult derivative(const TruncSeries1& s) {
    const int N = s.degree();
    DerivativeResult d{s.coeff(1), TruncSeries1(s.config(), std::max(1, N - 1))};
    if (N == 1) return d;
    std::vector<KScalar> c(static_cast<size_t>(N - 1), KScalar::zero(s.config()));
    for (int m = 2; m <= N; ++m) c[static_cast<size_t>(m - 2)] = s.coeff(m).mul_int(m);
    d.tail = TruncSeries1(s.config(), N - 1, std::move(c));
    return d;
}

// -------------------------------------------------------------- TruncSeries2

TruncSeries2::TruncSeries2(ConfigPtr cfg, int N) : cfg_(std::move(cfg)), N_(N) {
    if (N_ < 1) throw Error("TruncSeries2: need N >= 1");
    c_.assign(static_cast<size_t>(N_) * (N_ + 3) / 2, KScalar::zero(cfg_));
}

size_t TruncSeries2::index(int i, int j) const {
    int d = i + j;
    if (i < 0 || j < 0 || d < 1 || d > N_) throw Error("TruncSeries2: index out of range");
    return static_cast<size_t>(d - 1) * (d + 2) / 2 + static_cast<size_t>(j);
}

TruncSeries2 TruncSeries2::from_pure_parts(const TruncSeries1& xp, const TruncSeries1& yp) {
    require_same_config(xp, yp);
    int N = std::min(xp.degree(), yp.degree());
    TruncSeries2 F(xp.config(), N);
    for (int i = 1; i <= N; ++i) {
        F.set_coeff(i, 0, xp.coeff(i));
        F.set_coeff(0, i, yp.coeff(i));
    }
    return F;
}

long TruncSeries2::certified_prec() const {
    long m = cfg_->uk_prec();
    for (const auto& c : c_) m = std::min(m, c.abs_prec());
    return m;
}

bool TruncSeries2::integral() const {
    for (const auto& c : c_)
        if (!c.is_integral()) return false;
    return true;
}

bool TruncSeries2::is_zero_to_prec() const {
    for (const auto& c : c_)
        if (!c.is_zero_to_prec()) return false;
    return true;
}

namespace {
void require_same_config2(const TruncSeries2& a, const TruncSeries2& b) {
    if (a.config() == b.config()) return;
    if (!(*a.config() == *b.config())) throw ConfigMismatch("series over different ring configurations");
}
}  // namespace

TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b) {
    require_same_config2(a, b);
    int N = std::min(a.degree(), b.degree());
    TruncSeries2 r(a.config(), N);
    for (int d = 1; d <= N; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, a.coeff(d - j, j) + b.coeff(d - j, j));
    return r;
}

TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b) {
    require_same_config2(a, b);
    int N = std::min(a.degree(), b.degree());
    TruncSeries2 r(a.config(), N);
    for (int d = 1; d <= N; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(d - j, j, a.coeff(d - j, j) - b.coeff(d - j, j));
    return r;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
    require_same_config2(a, b);
    int N = std::min(a.degree(), b.degree());
    TruncSeries2 r(a.config(), N);
    for (int d1 = 1; d1 < N; ++d1)
        for (int j1 = 0; j1 <= d1; ++j1) {
            const KScalar& x = a.coeff(d1 - j1, j1);
            if (x.is_exact_zero()) continue;
            bool xz = x.unit_part().is_zero();
            for (int d2 = 1; d1 + d2 <= N; ++d2)
                for (int j2 = 0; j2 <= d2; ++j2) {
                    const KScalar& y = b.coeff(d2 - j2, j2);
                    if (y.is_exact_zero()) continue;
                    size_t at = r.index((d1 - j1) + (d2 - j2), j1 + j2);
                    if (xz || y.unit_part().is_zero())
                        r.c_[at].cap_prec(product_prec(x, y));
                    else
                        r.c_[at] += x * y;
                }
        }
    return r;
}

TruncSeries2 TruncSeries2::scaled(const KScalar& s) const {
    TruncSeries2 r(cfg_, N_);
    if (s.is_exact_zero()) return r;
    for (int d = 1; d <= N_; ++d)
        for (int j = 0; j <= d; ++j) {
            const KScalar& x = coeff(d - j, j);
            if (x.is_exact_zero()) continue;
            size_t at = index(d - j, j);
            if (x.unit_part().is_zero() || s.unit_part().is_zero())
                r.c_[at].cap_prec(product_prec(x, s));
            else
                r.c_[at] = x * s;
        }
    return r;
}

TruncSeries2 TruncSeries2::transposed() const {
    TruncSeries2 r(cfg_, N_);
    for (int d = 1; d <= N_; ++d)
        for (int j = 0; j <= d; ++j) r.set_coeff(j, d - j, coeff(d - j, j));
    return r;
}

TruncSeries1 subst2(const TruncSeries2& F, const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    int N = std::min({F.degree(), s.degree(), t.degree()});
    const ConfigPtr& cfg = s.config();
    // powers of s and t, truncated at N: S[a-1] = s^a, T[b-1] = t^b
    std::vector<TruncSeries1> S{s.truncated(N)}, T{t.truncated(N)};
    S.reserve(static_cast<size_t>(N));
    T.reserve(static_cast<size_t>(N));
    for (int k = 2; k <= N; ++k) {
        S.push_back(S.back() * s);
        T.push_back(T.back() * t);
    }
    TruncSeries1 r(cfg, N);
    // a = 0 row: sum_b c_{0b} t^b
    for (int b = 1; b <= N; ++b) r = r + T[static_cast<size_t>(b - 1)].scaled(F.coeff(0, b));
    for (int a = 1; a <= N; ++a) {
        TruncSeries1 inner(cfg, N);
        // b = 0 contributes the scalar c_{a0}
        for (int b = 1; a + b <= N; ++b)
            inner = inner + T[static_cast<size_t>(b - 1)].scaled(F.coeff(a, b));
        TruncSeries1 term = S[static_cast<size_t>(a - 1)] * inner;
        term = term + S[static_cast<size_t>(a - 1)].scaled(F.coeff(a, 0));
        r = r + term;
    }
    return r;
}

TruncSeries2 subst2_outer(const TruncSeries1& s, const TruncSeries2& F) {
    int N = std::min(s.degree(), F.degree());
    TruncSeries2 P = F;
    TruncSeries2 r = F.scaled(s.coeff(1));
    for (int k = 2; k <= N; ++k) {
        P = P * F;
        r = r + P.scaled(s.coeff(k));
    }
    return r;
}

TruncSeries2 subst2_diag(const TruncSeries2& F, const TruncSeries1& s, const TruncSeries1& t) {
    require_same_config(s, t);
    int N = std::min({F.degree(), s.degree(), t.degree()});
    const ConfigPtr& cfg = s.config();
    std::vector<TruncSeries1> S{s.truncated(N)}, T{t.truncated(N)};
    for (int k = 2; k <= N; ++k) {
        S.push_back(S.back() * s);
        T.push_back(T.back() * t);
    }
    TruncSeries2 r(cfg, N);
    for (int a = 0; a <= N; ++a)
        for (int b = (a == 0 ? 1 : 0); a + b <= N; ++b) {
            const KScalar& c = F.coeff(a, b);
            if (c.is_exact_zero()) continue;
            if (a == 0) {
                const TruncSeries1& Q = T[static_cast<size_t>(b - 1)];
                for (int j = 1; j <= N; ++j) r.set_coeff(0, j, r.coeff(0, j) + c * Q.coeff(j));
            } else if (b == 0) {
                const TruncSeries1& P = S[static_cast<size_t>(a - 1)];
                for (int i = 1; i <= N; ++i) r.set_coeff(i, 0, r.coeff(i, 0) + c * P.coeff(i));
            } else {
                const TruncSeries1& P = S[static_cast<size_t>(a - 1)];
                const TruncSeries1& Q = T[static_cast<size_t>(b - 1)];
                for (int i = 1; i <= N; ++i) {
                    if (P.coeff(i).is_exact_zero()) continue;
                    KScalar cp = c * P.coeff(i);
                    for (int j = 1; i + j <= N; ++j) r.set_coeff(i, j, r.coeff(i, j) + cp * Q.coeff(j));
                }
            }
        }
    return r;
}

}  // namespace padic
