#ifndef PADIC_TESTS_SUPPORT_HPP
#define PADIC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "padic/series.hpp"

namespace padic::testsupport {

// ---- exact integer polynomial oracles (independent of the series layer) ----

using ZPoly = std::vector<Int>;  // ascending, index 0 = constant term

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline ZPoly zp_add(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

// s(t(X)) by direct expansion
inline ZPoly zp_compose(const ZPoly& s, const ZPoly& t) {
    ZPoly acc{Int(0)};
    ZPoly power{Int(1)};
    for (size_t k = 0; k < s.size(); ++k) {
        if (k > 0) power = zp_mul(power, t);
        if (s[k] != 0) acc = zp_add(acc, [&] {
                           ZPoly scaled = power;
                           for (auto& c : scaled) c *= s[k];
                           return scaled;
                       }());
    }
    return acc;
}

// (1+X)^c - 1 truncated at degree N, exact binomials
inline TruncSeries1 binomial_series(const ConfigPtr& cfg, int N, const Int& c) {
    std::vector<Int> coeffs(static_cast<size_t>(N), Int(0));
    for (int k = 1; k <= N; ++k) {
        Int b;
        if (mpz_fits_ulong_p(c.get_mpz_t())) {
            mpz_bin_ui(b.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
        } else {
            b = 1;
            for (int i = 0; i < k; ++i) b *= (c - i);
            Int fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            b /= fact;
        }
        coeffs[static_cast<size_t>(k - 1)] = b;
    }
    return TruncSeries1::from_ints(cfg, N, coeffs);
}

// ---- reproducible random inputs ----

inline Int random_int_mod(std::mt19937_64& gen, const Int& M) {
    Int acc(0);
    const size_t words = mpz_sizeinbase(M.get_mpz_t(), 2) / 32 + 2;
    for (size_t w = 0; w < words; ++w) {
        acc <<= 32;
        acc += static_cast<unsigned long>(gen() & 0xffffffffu);
    }
    Int out;
    mpz_mod(out.get_mpz_t(), acc.get_mpz_t(), M.get_mpz_t());
    return out;
}

inline OKScalar random_okscalar(const ConfigPtr& cfg, std::mt19937_64& gen) {
    std::vector<Int> coords(static_cast<size_t>(cfg->e) * cfg->r);
    for (auto& c : coords) c = random_int_mod(gen, cfg->modulus);
    return OKScalar::from_coords(cfg, std::move(coords));
}

// random integral series; make_unit forces a unit linear coefficient
inline TruncSeries1 random_series(const ConfigPtr& cfg, int N, std::mt19937_64& gen, bool unit_linear) {
    std::vector<KScalar> coeffs(static_cast<size_t>(N), KScalar::zero(cfg));
    for (int k = 1; k <= N; ++k) coeffs[static_cast<size_t>(k - 1)] = KScalar(random_okscalar(cfg, gen));
    if (unit_linear) {
        OKScalar lin = random_okscalar(cfg, gen);
        while (lin.stored_valuation() != 0) lin = random_okscalar(cfg, gen);
        coeffs[0] = KScalar(lin);
    }
    return TruncSeries1(cfg, N, std::move(coeffs));
}

// compare a computed series against an exact integer polynomial oracle
// (index 0 of the oracle must be zero)
inline bool matches_zpoly(const TruncSeries1& s, const ZPoly& oracle) {
    for (int i = 1; i <= s.degree(); ++i) {
        Int expect = static_cast<size_t>(i) < oracle.size() ? oracle[static_cast<size_t>(i)] : Int(0);
        KScalar diff = s.coeff(i) - KScalar::from_int(s.config(), expect);
        if (!diff.is_zero_to_prec()) return false;
    }
    return true;
}

}  // namespace padic::testsupport

#endif
