#ifndef PADIC_DYNAMICS_HPP
#define PADIC_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "padic/lubin.hpp"
#include "padic/newton.hpp"
#include "padic/series.hpp"

namespace padic {

enum class Tri { yes, no, undecidable };

const char* tri_name(Tri t);

/// Verdicts on the standing hypotheses of the main theorem, each
/// tri-state: a check can be undecidable at the working precision.
struct HypothesisReport {
    Tri coprimality = Tri::undecidable;          // gcd(e, p^2 - p) = 1
    Tri wdeg_is_p = Tri::undecidable;            // Weierstrass degree of f is p
    Tri simple_roots = Tri::undecidable;         // polygon criterion for simple roots
    Tri f_prime_uniformizer = Tri::undecidable;  // f'(0) in Z_p with v_K = e
    Tri u_prime_unit = Tri::undecidable;         // u'(0) in Z_p^x
    Tri u_prime_nontorsion = Tri::undecidable;   // nontorsion to precision
    long certified_prec = 0;

    bool all_yes() const;
    bool any_no() const;
};

/// A commuting pair (f, u) of integral series: f noninvertible, u
/// invertible.  Commutation is checked at construction.
class DynPair {
  public:
    DynPair(TruncSeries1 f, TruncSeries1 u);

    const TruncSeries1& f() const { return f_; }
    const TruncSeries1& u() const { return u_; }
    const ConfigPtr& config() const { return f_.config(); }
    int degree() const { return f_.degree(); }

    const KScalar& f_lin() const { return f_lin_; }
    const KScalar& u_lin() const { return u_lin_; }
    const std::optional<int>& wdeg_f() const { return wdeg_f_; }
    /// u'(0) in 1 + pZ_p?
    bool normalized() const { return normalized_; }

  private:
    TruncSeries1 f_, u_;
    KScalar f_lin_, u_lin_;
    std::optional<int> wdeg_f_;
    bool normalized_ = false;
};

HypothesisReport check_hypotheses(const DynPair& pair, int nontorsion_power_bound = 3);

/// Replace u by u^{o k} with k the multiplicative order of u'(0) mod p,
/// so that u'(0) lands in 1 + pZ_p.
DynPair normalize_u(const DynPair& pair);

/// ell = v_K(u'(0) - 1)/e for normalized u.
long ell(const DynPair& pair);

/// v(m) = v_K(u'(0)^m - 1)/e for m != 0.
long v_of_m(const DynPair& pair, const Int& m);

/// Weierstrass degree of u^{o m}(X) - X, checked against p^{v(m)}.
Int fixed_point_count(const DynPair& pair, const Int& m);
/// Same check with the iterate u^{o m} already computed (bulk loops).
Int fixed_point_count_with_iterate(const DynPair& pair, const TruncSeries1& u_m, const Int& m);

/// p^{n - ell}, cross-checked via v(p^{n-ell}) >= n > v(p^{n-ell-1}).
Int stabilizer_exponent(const DynPair& pair, long n);

/// j = p^ell - p^{ell-1}.
Int cell_count(const DynPair& pair);

/// lim_m q^m v_p(pi_{mr}) with v_p(pi_n) = 1/(p^{n-1}(p-1)): every term
/// equals p/(p-1), returned exactly.
Rat tilt_valuation(const RingConfig& cfg);

/// Build f = pX + (middle terms) + X^p and u = [a]_f.  Middle
/// coefficients must be divisible by p.  Commutation is re-checked by
/// the pair constructor.
DynPair make_lubin_tate(const ConfigPtr& cfg, int N, const std::map<int, Int>& middle, const Int& a);
/// Default template: f = pX + X^p, u = [1+p]_f.
DynPair make_lubin_tate(const ConfigPtr& cfg, int N);

/// (w^{o-1} o f o w, w^{o-1} o u o w) for integral w with w'(0) = 1.
DynPair conjugate_pair(const DynPair& pair, const TruncSeries1& w);

/// Seed-reproducible integral w = X + c_2 X^2 + ... with w'(0) = 1.
TruncSeries1 random_conjugator(const ConfigPtr& cfg, int N, std::uint64_t seed);

/// Reproducible element of O_K drawn from a seeded generator.
OKScalar random_okscalar(const ConfigPtr& cfg, std::uint64_t& state);

struct ConjectureVerdict {
    TruncSeries2 F;
    bool integral = false;
    std::optional<std::tuple<int, int, long>> offending;  // (i, j, shift)
    bool endo_f_zero = false;
    bool endo_u_zero = false;
    int certified_degree = 0;
    long certified_prec = 0;
    HypothesisReport hypotheses;
};

/// Compute F = formal_group(f) to degree N, decide integrality
/// coefficientwise, and check both endomorphism residuals
/// F(s(X), s(Y)) - s(F(X, Y)) for s = f, u.
ConjectureVerdict verify_conjecture(const DynPair& pair, int N);

}  // namespace padic

#endif
