#include "padic/dynamics.hpp"

#include <algorithm>
#include <random>

namespace padic {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "undecidable";
    }
}

bool HypothesisReport::all_yes() const {
    return coprimality == Tri::yes && wdeg_is_p == Tri::yes && simple_roots == Tri::yes &&
           f_prime_uniformizer == Tri::yes && u_prime_unit == Tri::yes && u_prime_nontorsion == Tri::yes;
}

bool HypothesisReport::any_no() const {
    return coprimality == Tri::no || wdeg_is_p == Tri::no || simple_roots == Tri::no ||
           f_prime_uniformizer == Tri::no || u_prime_unit == Tri::no || u_prime_nontorsion == Tri::no;
}

// ------------------------------------------------------------------- DynPair

DynPair::DynPair(TruncSeries1 f, TruncSeries1 u) : f_(std::move(f)), u_(std::move(u)) {
    if (!(*f_.config() == *u_.config())) throw ConfigMismatch("DynPair: series over different configurations");
    int N = std::min(f_.degree(), u_.degree());
    f_ = f_.truncated(N);
    u_ = u_.truncated(N);
    if (!f_.integral() || !u_.integral()) throw NonIntegralSeries("DynPair: series must lie in S_0(O_K)");
    if (!(compose(f_, u_) - compose(u_, f_)).is_zero_to_prec())
        throw CommutationFailure("DynPair: f and u do not commute to certified precision");
    f_lin_ = f_.linear_coeff();
    u_lin_ = u_.linear_coeff();
    wdeg_f_ = weierstrass_degree(f_);
    const RingConfig& cfg = *config();
    normalized_ = u_lin_.is_integral() && u_lin_.unit_part().embeds_in_Zp() &&
                  ((u_lin_.unit_part().zp_value() - 1) % cfg.p == 0);
}

// ---------------------------------------------------------------- hypotheses

HypothesisReport check_hypotheses(const DynPair& pair, int nontorsion_power_bound) {
    const RingConfig& cfg = *pair.config();
    HypothesisReport rep;
    rep.certified_prec = std::min(pair.f().certified_prec(), pair.u().certified_prec());

    rep.coprimality = coprimality_hypothesis(cfg) ? Tri::yes : Tri::no;

    if (pair.wdeg_f())
        rep.wdeg_is_p = (Int(*pair.wdeg_f()) == cfg.p) ? Tri::yes : Tri::no;
    else
        rep.wdeg_is_p = Tri::undecidable;  // no unit coefficient up to N

    if (rep.coprimality == Tri::yes) {
        try {
            rep.simple_roots = simple_roots_criterion(pair.f()) ? Tri::yes : Tri::no;
        } catch (const PrecisionExhausted&) {
            rep.simple_roots = Tri::undecidable;
        }
    }

    {
        const KScalar& fl = pair.f_lin();
        if (fl.is_exact_zero()) {
            rep.f_prime_uniformizer = Tri::no;
        } else {
            try {
                rep.f_prime_uniformizer =
                    (fl.is_integral() && fl.unit_part().embeds_in_Zp() && fl.valuation() == cfg.e)
                        ? Tri::yes
                        : Tri::no;
            } catch (const PrecisionExhausted&) {
                rep.f_prime_uniformizer = Tri::undecidable;
            }
        }
    }
    {
        const KScalar& ul = pair.u_lin();
        if (ul.is_exact_zero())
            rep.u_prime_unit = Tri::no;
        else if (ul.is_zero_to_prec())
            rep.u_prime_unit = Tri::undecidable;
        else
            rep.u_prime_unit =
                (ul.is_integral() && ul.unit_part().embeds_in_Zp() && ul.unit_part().stored_valuation() == 0)
                    ? Tri::yes
                    : Tri::no;
    }

    if (rep.u_prime_unit == Tri::yes) {
        // u'(0)^{p^k (q-1)} must stay away from 1 for k up to the bound;
        // at finite precision torsion-freeness is only falsifiable
        Int q;
        mpz_pow_ui(q.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(cfg.r));
        OKScalar x = pair.u_lin().unit_part().pow(q - 1);
        const long certified = pair.u_lin().abs_prec();
        Tri verdict = Tri::yes;
        for (int k = 0; k <= nontorsion_power_bound; ++k) {
            OKScalar d = x - OKScalar::one(pair.config());
            if (d.is_zero() || d.stored_valuation() >= certified) {
                verdict = Tri::undecidable;  // torsion or a congruence deeper than certified
                break;
            }
            x = x.pow(cfg.p);
        }
        rep.u_prime_nontorsion = verdict;
    }
    return rep;
}

DynPair normalize_u(const DynPair& pair) {
    const RingConfig& cfg = *pair.config();
    const KScalar& ul = pair.u_lin();
    if (ul.is_zero_to_prec() || !ul.unit_part().embeds_in_Zp() || ul.unit_part().stored_valuation() != 0)
        throw NotAUnit("normalize_u: u'(0) is not a unit of Z_p");
    Int c = ul.unit_part().zp_value() % cfg.p;
    long k = 1;
    Int acc = c;
    while (acc % cfg.p != 1) {
        acc = acc * c % cfg.p;
        ++k;
        if (k > 1000000) throw Error("normalize_u: order search overflow");  // cannot happen, k | p-1
    }
    if (k == 1) return pair;
    return DynPair(pair.f(), iterate(pair.u(), k));
}

long ell(const DynPair& pair) {
    if (!pair.normalized()) throw HypothesisFailure("ell: u is not normalized (u'(0) not in 1 + pZ_p)");
    return v_of_m(pair, 1);
}

long v_of_m(const DynPair& pair, const Int& m) {
    if (m == 0) throw Error("v_of_m: m must be nonzero");
    if (!pair.normalized()) throw HypothesisFailure("v_of_m: u is not normalized (u'(0) not in 1 + pZ_p)");
    const RingConfig& cfg = *pair.config();
    Int mm = m < 0 ? Int(-m) : m;  // v_K(x^{-m} - 1) = v_K(x^m - 1) for units
    OKScalar t = pair.u_lin().unit_part().pow(mm) - OKScalar::one(pair.config());
    long v = t.stored_valuation();
    // u'(0) is a unit known mod pi^A, so the power is too; valuations at
    // or above A are not certified
    if (v >= pair.u_lin().abs_prec())
        throw PrecisionExhausted("v_of_m: u'(0)^m - 1 is zero to certified precision");
    if (v % cfg.e != 0) throw Error("v_of_m: valuation not divisible by e for a Z_p value");
    return v / cfg.e;
}

Int fixed_point_count_with_iterate(const DynPair& pair, const TruncSeries1& u_m, const Int& m) {
    const RingConfig& cfg = *pair.config();
    long v = v_of_m(pair, m);
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(v));
    if (pv > u_m.degree()) throw TruncationTooShallow("fixed_point_count: need N >= p^{v(m)}");
    TruncSeries1 g = u_m - TruncSeries1::identity(pair.config(), u_m.degree());
    std::optional<int> wd = weierstrass_degree(g);
    if (!wd)
        throw MismatchWithTheorem("fixed_point_count: no unit coefficient in u^{o m} - X up to N = " +
                                  std::to_string(u_m.degree()));
    if (Int(*wd) != pv)
        throw MismatchWithTheorem("fixed_point_count: Weierstrass degree " + std::to_string(*wd) +
                                  " differs from p^{v(m)} = " + pv.get_str());
    return pv;
}

Int fixed_point_count(const DynPair& pair, const Int& m) {
    if (m == 0) throw Error("fixed_point_count: m must be nonzero");
    Int mm = m < 0 ? Int(-m) : m;  // u^{o m} and u^{o -m} have the same fixed points
    if (mm > 1000000) throw Error("fixed_point_count: iterate count out of range");
    TruncSeries1 u_m = iterate(pair.u(), mm.get_si());
    return fixed_point_count_with_iterate(pair, u_m, m);
}

Int stabilizer_exponent(const DynPair& pair, long n) {
    const RingConfig& cfg = *pair.config();
    long l = ell(pair);
    if (n <= l) throw HypothesisFailure("stabilizer_exponent: need n > ell");
    Int res;
    mpz_pow_ui(res.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(n - l));
    Int below = res / cfg.p;
    if (!(v_of_m(pair, res) >= n && v_of_m(pair, below) < n))
        throw MismatchWithTheorem("stabilizer_exponent: v(p^{n-ell}) cross-check failed");
    return res;
}

Int cell_count(const DynPair& pair) {
    const RingConfig& cfg = *pair.config();
    long l = ell(pair);
    Int pl, pl1;
    mpz_pow_ui(pl.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(l));
    mpz_pow_ui(pl1.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(l - 1));
    return pl - pl1;
}

Rat tilt_valuation(const RingConfig& cfg) {
    // q^m * v_p(pi_{mr}) with v_p(pi_n) = 1/(p^{n-1}(p-1)); all terms agree
    Rat limit;
    for (int m = 1; m <= 3; ++m) {
        Int qm, pden;
        mpz_pow_ui(qm.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(m * cfg.r));
        mpz_pow_ui(pden.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(m * cfg.r - 1));
        Rat term(qm, pden * (cfg.p - 1));
        term.canonicalize();
        if (m == 1)
            limit = term;
        else if (term != limit)
            throw Error("tilt_valuation: sequence is not constant");  // cannot happen
    }
    return limit;
}

DynPair make_lubin_tate(const ConfigPtr& cfg, int N, const std::map<int, Int>& middle, const Int& a) {
    const RingConfig& c = *cfg;
    if (c.p > N) throw TruncationTooShallow("make_lubin_tate: need N >= p");
    if (a % c.p == 0) throw InvalidTemplate("make_lubin_tate: a must be a unit of Z_p");
    TruncSeries1 f(cfg, N);
    std::vector<KScalar> coeffs(static_cast<size_t>(N), KScalar::zero(cfg));
    coeffs[0] = KScalar::from_int(cfg, c.p);
    long pl = c.p.get_si();
    coeffs[static_cast<size_t>(pl - 1)] = KScalar::one(cfg);
    for (const auto& [deg, val] : middle) {
        if (deg < 2 || deg > N) throw InvalidTemplate("make_lubin_tate: middle degree out of range [2, N]");
        if (val % c.p != 0) throw InvalidTemplate("make_lubin_tate: middle coefficients must be divisible by p");
        coeffs[static_cast<size_t>(deg - 1)] += KScalar::from_int(cfg, val);
    }
    f = TruncSeries1(cfg, N, std::move(coeffs));
    TruncSeries1 u = mult_by_m(f, a);
    if (!u.integral())
        throw MismatchWithTheorem("make_lubin_tate: [a]_f has a certified non-integral coefficient");
    return DynPair(std::move(f), std::move(u));
}

DynPair make_lubin_tate(const ConfigPtr& cfg, int N) { return make_lubin_tate(cfg, N, {}, cfg->p + 1); }

DynPair conjugate_pair(const DynPair& pair, const TruncSeries1& w) {
    if (!w.integral()) throw NotInvertible("conjugate_pair: w must be integral");
    KScalar w1 = w.coeff(1);
    if (!(w1 - KScalar::one(w.config())).is_zero_to_prec())
        throw NotInvertible("conjugate_pair: w'(0) must be 1");
    TruncSeries1 winv = comp_inverse(w);
    TruncSeries1 fc = compose(winv, compose(pair.f(), w));
    TruncSeries1 uc = compose(winv, compose(pair.u(), w));
    return DynPair(std::move(fc), std::move(uc));
}

OKScalar random_okscalar(const ConfigPtr& cfg, std::uint64_t& state) {
    std::mt19937_64 gen(state);
    const size_t words = mpz_sizeinbase(cfg->modulus.get_mpz_t(), 2) / 32 + 2;
    std::vector<Int> coords(static_cast<size_t>(cfg->e) * cfg->r);
    for (auto& c : coords) {
        Int acc(0);
        for (size_t w = 0; w < words; ++w) {
            acc <<= 32;
            acc += static_cast<unsigned long>(gen() & 0xffffffffu);
        }
        mpz_mod(c.get_mpz_t(), acc.get_mpz_t(), cfg->modulus.get_mpz_t());
    }
    state = gen();
    return OKScalar::from_coords(cfg, std::move(coords));
}

TruncSeries1 random_conjugator(const ConfigPtr& cfg, int N, std::uint64_t seed) {
    std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ull;
    std::vector<KScalar> coeffs(static_cast<size_t>(N), KScalar::zero(cfg));
    coeffs[0] = KScalar::one(cfg);
    for (int k = 2; k <= N; ++k) coeffs[static_cast<size_t>(k - 1)] = KScalar(random_okscalar(cfg, state));
    return TruncSeries1(cfg, N, std::move(coeffs));
}

ConjectureVerdict verify_conjecture(const DynPair& pair, int N) {
    if (N > pair.degree()) throw TruncationTooShallow("verify_conjecture: pair degree below requested N");
    ConjectureVerdict out;
    out.hypotheses = check_hypotheses(pair);
    if (out.hypotheses.any_no())
        throw HypothesisFailure("verify_conjecture: a hypothesis of the main theorem fails");

    TruncSeries1 f = pair.f().truncated(N);
    TruncSeries1 u = pair.u().truncated(N);
    out.F = formal_group(f);
    out.certified_degree = N;

    out.integral = true;
    for (int d = 1; d <= N && out.integral; ++d)
        for (int j = 0; j <= d; ++j) {
            const KScalar& c = out.F.coeff(d - j, j);
            if (!c.is_integral()) {
                out.integral = false;
                out.offending = std::make_tuple(d - j, j, c.shift());
                break;
            }
        }

    TruncSeries2 rf = subst2_diag(out.F, f, f) - subst2_outer(f, out.F);
    TruncSeries2 ru = subst2_diag(out.F, u, u) - subst2_outer(u, out.F);
    out.endo_f_zero = rf.is_zero_to_prec();
    out.endo_u_zero = ru.is_zero_to_prec();
    out.certified_prec =
        std::min({out.F.certified_prec(), rf.certified_prec(), ru.certified_prec()});
    return out;
}

}  // namespace padic
