#include "padic/lubin.hpp"

namespace padic {

LogResult lubin_log(const TruncSeries1& s) {
    const int N = s.degree();
    const ConfigPtr& cfg = s.config();
    const long full = cfg->uk_prec();
    const long slack = cfg->e;
    KScalar lam = s.coeff(1);

    // reject lambda = 0 and roots of unity: every lambda^m - lambda must
    // keep a usable valuation (lambda = 0 fails at m = 2)
    std::vector<KScalar> divisors;  // divisors[m-2] = lambda^m - lambda
    divisors.reserve(static_cast<size_t>(N > 1 ? N - 1 : 0));
    KScalar pw = lam;
    for (int m = 2; m <= N; ++m) {
        pw = pw * lam;
        KScalar d = pw - lam;
        if (d.is_zero_to_prec() || d.unit_part().stored_valuation() - d.shift() >= full - slack)
            throw RootOfUnityLinearCoefficient(
                "lubin_log: lambda^" + std::to_string(m) + " - lambda is zero to usable precision");
        divisors.push_back(std::move(d));
    }

    LogResult lr{TruncSeries1(cfg, N), lam, {}};
    std::vector<KScalar> b(static_cast<size_t>(N), KScalar::zero(cfg));
    b[0] = KScalar::one(cfg);
    lr.loss_profile.reserve(divisors.size());

    // running data: P = s^m, T = sum_{k<m} b_k s^k
    TruncSeries1 P = s;
    TruncSeries1 T = s;
    for (int m = 2; m <= N; ++m) {
        const KScalar& d = divisors[static_cast<size_t>(m - 2)];
        lr.loss_profile.push_back(d.valuation());
        b[static_cast<size_t>(m - 1)] = (-T.coeff(m)).div(d);
        if (m == N) break;
        P = P * s;
        T = T + P.scaled(b[static_cast<size_t>(m - 1)]);
    }
    lr.log = TruncSeries1(cfg, N, std::move(b));
    return lr;
}

TruncSeries1 lubin_log_by_limit(const TruncSeries1& s, int max_iter) {
    KScalar lam_inv = s.coeff(1).inverse();
    KScalar lam_inv_pow = lam_inv;
    TruncSeries1 g = s.scaled(lam_inv_pow);  // s / lambda
    TruncSeries1 cur = s;
    for (int n = 2; n <= max_iter; ++n) {
        cur = compose(cur, s);
        lam_inv_pow = lam_inv_pow * lam_inv;
        TruncSeries1 next = cur.scaled(lam_inv_pow);
        if ((next - g).is_zero_to_prec()) return next;
        g = std::move(next);
    }
    throw PrecisionExhausted("lubin_log_by_limit: iterates did not stabilize");
}

TruncSeries1 lubin_exp(const LogResult& lr) { return comp_inverse(lr.log); }

TruncSeries2 formal_group(const TruncSeries1& f) {
    LogResult lr = lubin_log(f);
    TruncSeries1 exp = comp_inverse(lr.log);
    TruncSeries2 sum = TruncSeries2::from_pure_parts(lr.log, lr.log);
    return subst2_outer(exp, sum);
}

TruncSeries1 mult_by_m(const TruncSeries1& f, const Int& m) {
    LogResult lr = lubin_log(f);
    TruncSeries1 exp = comp_inverse(lr.log);
    return compose(exp, lr.log.scaled_int(m));
}

IntegralityCheck log_derivative_integral(const LogResult& lr) {
    const TruncSeries1& L = lr.log;
    long prec = L.certified_prec();
    for (int m = 1; m <= L.degree(); ++m) {
        KScalar t = L.coeff(m).mul_int(m);
        if (!t.is_integral()) return {false, m, prec};
    }
    return {true, std::nullopt, prec};
}

}  // namespace padic
