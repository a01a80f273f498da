#ifndef PADIC_LUBIN_HPP
#define PADIC_LUBIN_HPP

#include <optional>

#include "padic/series.hpp"

namespace padic {

/// Logarithm of a series s: the unique Log with Log'(0) = 1 and
/// Log(s(X)) = s'(0) Log(X), solved degree by degree.
struct LogResult {
    TruncSeries1 log;  // over K
    KScalar lambda;    // s'(0)
    // v_K(lambda^m - lambda) consumed by the division at degree m;
    // entry k corresponds to m = k + 2
    std::vector<long> loss_profile;
};

/// Degreewise solve of the functional equation.  Requires lambda^m -
/// lambda nonzero to usable precision for 2 <= m <= N (slack e), which
/// also rules out lambda = 0 and roots of unity.
LogResult lubin_log(const TruncSeries1& s);

/// Cross-check oracle for noninvertible s: the limit of s^{o n}/lambda^n,
/// iterated until two successive normalized iterates agree to certified
/// precision.
TruncSeries1 lubin_log_by_limit(const TruncSeries1& s, int max_iter = 64);

/// Compositional inverse of the logarithm.
TruncSeries1 lubin_exp(const LogResult& lr);

/// The candidate latent formal group F(X,Y) = exp(log X + log Y).
TruncSeries2 formal_group(const TruncSeries1& f);

/// [m]_f = exp(m log X): the series commuting with f whose linear
/// coefficient is m.
TruncSeries1 mult_by_m(const TruncSeries1& f, const Int& m);

struct IntegralityCheck {
    bool integral;
    std::optional<int> offending_index;
    long certified_prec;
};

/// Is the derivative of the logarithm integral, i.e. m*b_m in O_K for
/// all m <= N?
IntegralityCheck log_derivative_integral(const LogResult& lr);

}  // namespace padic

#endif
