#ifndef PADIC_RING_HPP
#define PADIC_RING_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "padic/errors.hpp"

namespace padic {

using Int = mpz_class;
using Rat = mpq_class;

/// Description of the tower Z_p ⊂ W(F_q) ⊂ O_K, with q = p^r and
/// ramification index e.  All coefficient arithmetic happens modulo
/// p^n_prec; the valuation is normalized so that v_K(p) = e.
struct RingConfig {
    Int p;
    int r = 1;
    int e = 1;
    std::vector<Int> h;  // monic, degree r, irreducible mod p; defines the unramified generator
    std::vector<Int> E;  // monic, degree e, Eisenstein; defines the uniformizer pi
    int n_prec = 1;

    // derived, fixed at construction
    Int modulus;                   // p^n_prec
    std::vector<Int> pi_e_over_p;  // pi-coordinates of the unit pi^e/p, exact integers

    RingConfig(Int p, int r, int e, std::vector<Int> h, std::vector<Int> E, int n_prec);

    /// Config with the default polynomials: E = X^e - p and the first
    /// monic degree-r polynomial that passes the irreducibility test.
    static RingConfig with_defaults(Int p, int r, int e, int n_prec);

    static std::vector<Int> default_h(const Int& p, int r);
    static std::vector<Int> default_E(const Int& p, int e);

    bool operator==(const RingConfig& o) const;

    /// Full working precision in v_K units: e * n_prec.
    long uk_prec() const { return static_cast<long>(e) * n_prec; }
};

using ConfigPtr = std::shared_ptr<const RingConfig>;

ConfigPtr make_config(Int p, int r, int e, int n_prec);
ConfigPtr make_config(RingConfig cfg);

/// gcd(e, p^2 - p) = 1?
bool coprimality_hypothesis(const RingConfig& cfg);

/// Outcome of a valuation query: an exact integer in [0, e*n_prec), or
/// ZeroToPrecision when the element is indistinguishable from 0.
class ValuationResult {
  public:
    static ValuationResult exact(long v) { return ValuationResult(v); }
    static ValuationResult zero_to_precision() { return ValuationResult(-1); }

    bool is_zero_to_precision() const { return v_ < 0; }
    long value() const {
        if (v_ < 0) throw PrecisionExhausted("valuation: element is zero to working precision");
        return v_;
    }
    bool operator==(const ValuationResult& o) const { return v_ == o.v_; }

  private:
    explicit ValuationResult(long v) : v_(v) {}
    long v_;
};

/// Element of O_K in canonical reduced form: a polynomial in pi of
/// degree < e whose coefficients are polynomials of degree < r in the
/// unramified generator, all integer coefficients reduced mod p^n_prec.
class OKScalar {
  public:
    OKScalar() = default;  // empty; usable only as a target of assignment
    explicit OKScalar(ConfigPtr cfg);  // zero

    static OKScalar from_int(ConfigPtr cfg, const Int& n);
    static OKScalar zero(ConfigPtr cfg) { return OKScalar(std::move(cfg)); }
    static OKScalar one(ConfigPtr cfg) { return from_int(std::move(cfg), 1); }
    static OKScalar uniformizer(ConfigPtr cfg);
    static OKScalar unramified_generator(ConfigPtr cfg);
    /// Element with prescribed coordinates c[i*r+j] of pi^i t^j.
    static OKScalar from_coords(ConfigPtr cfg, std::vector<Int> coords);

    const ConfigPtr& config() const { return cfg_; }
    const std::vector<Int>& coords() const { return c_; }
    const Int& coord(int i, int j) const { return c_[static_cast<size_t>(i) * cfg_->r + j]; }

    bool is_zero() const;

    OKScalar operator-() const;
    friend OKScalar operator+(const OKScalar& a, const OKScalar& b);
    friend OKScalar operator-(const OKScalar& a, const OKScalar& b);
    friend OKScalar operator*(const OKScalar& a, const OKScalar& b);
    OKScalar& operator+=(const OKScalar& o) { return *this = *this + o; }
    OKScalar& operator-=(const OKScalar& o) { return *this = *this - o; }
    OKScalar& operator*=(const OKScalar& o) { return *this = *this * o; }
    friend bool operator==(const OKScalar& a, const OKScalar& b);
    friend bool operator!=(const OKScalar& a, const OKScalar& b) { return !(a == b); }

    OKScalar mul_int(const Int& n) const;
    OKScalar pow(unsigned long k) const;
    OKScalar pow(const Int& k) const;  // k >= 0

    /// Largest v with x in (pi^v), exact when < e*n_prec.
    ValuationResult valuation() const;
    /// Valuation of the stored representative, with e*n_prec standing
    /// in for ZeroToPrecision.  Internal workhorse.
    long stored_valuation() const;

    /// Inverse at full working precision; throws NotAUnit unless
    /// valuation(x) = 0.
    OKScalar invert() const;

    /// Image in F_q = F_p[t]/(h): r coefficients reduced mod p.
    std::vector<Int> residue() const;

    /// Does x lie in the image of Z/(p^n_prec) (no pi, no t components)?
    bool embeds_in_Zp() const;

    /// If x embeds in Z_p, its integer representative mod p^n_prec.
    const Int& zp_value() const;

    /// x * pi^k for k >= 0.  Exact mod p^n_prec.
    OKScalar mul_pi_pow(long k) const;

    /// x / pi^k for k >= 0, assuming v_K(x) >= k; the result is the
    /// canonical representative of the quotient mod p^{n_prec - ceil(k/e)}
    /// (digits above that are zero).  Throws if x is not divisible.
    OKScalar div_pi_pow_exact(long k) const;

    std::string str() const;

  private:
    void require_same_config(const OKScalar& o) const;

    ConfigPtr cfg_;
    std::vector<Int> c_;  // e*r entries, row-major in pi then t, each in [0, p^n_prec)
};

/// Arithmetic in the residue field F_q = F_p[t]/(h) on coefficient
/// vectors of length r (values mod p).
std::vector<Int> residue_add(const RingConfig& cfg, const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> residue_mul(const RingConfig& cfg, const std::vector<Int>& a, const std::vector<Int>& b);
bool residue_is_zero(const std::vector<Int>& a);

/// p-adic valuation of a nonzero integer.
long int_valuation(const Int& x, const Int& p);

}  // namespace padic

#endif
