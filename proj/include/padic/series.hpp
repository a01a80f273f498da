#ifndef PADIC_SERIES_HPP
#define PADIC_SERIES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "padic/ring.hpp"

namespace padic {

/// Valuation lower bound standing in for "exactly zero".
inline constexpr long kExactZeroVal = 1L << 40;

/// Element of K stored as unit_part * pi^(-shift), shift >= 0, together
/// with a certified absolute precision in v_K units: the stored value
/// agrees with the true one modulo pi^abs_prec.  Kept in minimal-shift
/// form (unit_part not divisible by pi unless it is zero to precision).
class KScalar {
  public:
    KScalar() = default;
    explicit KScalar(OKScalar integral);  // shift 0, full precision
    KScalar(OKScalar unit_part, long shift, long abs_prec);

    /// The exact zero of K: products with it vanish identically, at
    /// any precision of the other factor.
    static KScalar zero(const ConfigPtr& cfg);
    static KScalar one(const ConfigPtr& cfg) { return KScalar(OKScalar::one(cfg)); }
    static KScalar from_int(const ConfigPtr& cfg, const Int& n);

    bool is_exact_zero() const { return exact0_; }

    const ConfigPtr& config() const { return unit_.config(); }
    const OKScalar& unit_part() const { return unit_; }
    long shift() const { return shift_; }
    long abs_prec() const { return prec_; }
    /// Valuation of the stored unit part (e*n_prec when zero).
    long unit_val() const { return uval_; }

    bool is_integral() const { return shift_ == 0; }
    /// Indistinguishable from 0 at the certified precision.
    bool is_zero_to_prec() const;
    /// Lower bound for the valuation of the true value.
    long vlow() const;
    /// Exact valuation; throws PrecisionExhausted when the element is
    /// zero to precision or its stored valuation is uncertified.
    long valuation() const;

    friend KScalar operator+(const KScalar& a, const KScalar& b);
    friend KScalar operator-(const KScalar& a, const KScalar& b);
    friend KScalar operator*(const KScalar& a, const KScalar& b);
    KScalar operator-() const;
    KScalar& operator+=(const KScalar& o) { return *this = *this + o; }
    KScalar& operator-=(const KScalar& o) { return *this = *this - o; }
    KScalar& operator*=(const KScalar& o) { return *this = *this * o; }

    KScalar mul_int(const Int& n) const;
    /// Multiplicative inverse; requires an exactly known valuation.
    KScalar inverse() const;
    KScalar div(const KScalar& d) const { return *this * d.inverse(); }

    /// Lower the certified precision to account for an omitted term
    /// that is zero to precision bound.
    void cap_prec(long bound);
    /// Certified precision of the product a*b, without computing it.
    friend long product_prec(const KScalar& a, const KScalar& b) {
        if (a.exact0_ || b.exact0_) return kExactZeroVal;
        return std::min(a.prec_ + b.vlow(), b.prec_ + a.vlow());
    }

    /// Equal as elements of K up to min(abs_prec) of the two sides.
    friend bool eq_to_prec(const KScalar& a, const KScalar& b);

  private:
    void normalize();

    OKScalar unit_;
    long shift_ = 0;
    long prec_ = 0;
    long uval_ = 0;
    bool exact0_ = false;
};

/// Truncated one-variable series a_1 X + ... + a_N X^N over K (no
/// constant term).  Immutable value type.
class TruncSeries1 {
  public:
    TruncSeries1() = default;
    TruncSeries1(ConfigPtr cfg, int N);  // zero series
    TruncSeries1(ConfigPtr cfg, int N, std::vector<KScalar> coeffs);  // coeffs[k] is a_{k+1}

    static TruncSeries1 identity(const ConfigPtr& cfg, int N);  // X
    /// Series with integer coefficients a_1..a_N (ascending, may be short).
    static TruncSeries1 from_ints(const ConfigPtr& cfg, int N, const std::vector<Int>& a);

    const ConfigPtr& config() const { return cfg_; }
    int degree() const { return N_; }
    /// a_i for 1 <= i <= N.
    const KScalar& coeff(int i) const { return c_[static_cast<size_t>(i - 1)]; }
    const std::vector<KScalar>& coeffs() const { return c_; }

    /// min over coefficients of the certified absolute precision.
    long certified_prec() const;
    /// Every coefficient has shift 0.
    bool integral() const;
    /// Every coefficient is zero to its certified precision.
    bool is_zero_to_prec() const;
    KScalar linear_coeff() const { return N_ >= 1 ? c_[0] : KScalar::zero(cfg_); }

    TruncSeries1 truncated(int M) const;

    friend TruncSeries1 operator+(const TruncSeries1& s, const TruncSeries1& t);
    friend TruncSeries1 operator-(const TruncSeries1& s, const TruncSeries1& t);
    /// Product truncated at degree N.
    friend TruncSeries1 operator*(const TruncSeries1& s, const TruncSeries1& t);
    TruncSeries1 scaled(const KScalar& c) const;
    TruncSeries1 scaled_int(const Int& n) const;

  private:
    ConfigPtr cfg_;
    int N_ = 0;
    std::vector<KScalar> c_;
};

/// s(t(X)) mod X^{N+1}.
TruncSeries1 compose(const TruncSeries1& s, const TruncSeries1& t);

/// s^{o n} for n >= 0 (n = 0 gives X).
TruncSeries1 iterate(const TruncSeries1& s, long n);

/// Compositional inverse: s(result) = result(s) = X mod X^{N+1}.
/// Requires s'(0) to be a unit.
TruncSeries1 comp_inverse(const TruncSeries1& s);

/// Least i with a_i a certified unit of O_K (shift 0 and nonzero
/// residue); nullopt when no coefficient up to N qualifies.  Throws
/// PrecisionExhausted if an undetermined residue blocks the scan.
std::optional<int> weierstrass_degree(const TruncSeries1& s);

struct DerivativeResult {
    KScalar at_zero;     // s'(0)
    TruncSeries1 tail;   // s'(X) - s'(0), degree N-1
};
DerivativeResult derivative(const TruncSeries1& s);

/// Truncated two-variable series, no constant term, dense by total
/// degree: coefficients c_{ij} for 1 <= i+j <= N.
class TruncSeries2 {
  public:
    TruncSeries2() = default;
    TruncSeries2(ConfigPtr cfg, int N);  // zero

    static TruncSeries2 from_pure_parts(const TruncSeries1& x_part, const TruncSeries1& y_part);

    const ConfigPtr& config() const { return cfg_; }
    int degree() const { return N_; }
    const KScalar& coeff(int i, int j) const { return c_[index(i, j)]; }
    void set_coeff(int i, int j, KScalar v) { c_[index(i, j)] = std::move(v); }

    long certified_prec() const;
    bool integral() const;
    bool is_zero_to_prec() const;

    friend TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b);
    friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
    TruncSeries2 scaled(const KScalar& c) const;

    /// Swap the roles of X and Y.
    TruncSeries2 transposed() const;

    size_t index(int i, int j) const;
    size_t coeff_count() const { return c_.size(); }

  private:
    ConfigPtr cfg_;
    int N_ = 0;
    std::vector<KScalar> c_;
};

/// F(s(X), t(X)) as a one-variable series.
TruncSeries1 subst2(const TruncSeries2& F, const TruncSeries1& s, const TruncSeries1& t);

/// s(F(X,Y)) as a two-variable series.
TruncSeries2 subst2_outer(const TruncSeries1& s, const TruncSeries2& F);

/// F(s(X), t(Y)): substitute one-variable series into the two slots,
/// each in its own variable.
TruncSeries2 subst2_diag(const TruncSeries2& F, const TruncSeries1& s, const TruncSeries1& t);

}  // namespace padic

#endif
