#ifndef AC_PARAMS_HPP
#define AC_PARAMS_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ac {

// q thresholds are of the form 32*e*ln2 with integer e, never an integer
// themselves, so minimality is decidable; comparisons run at increasing MPFR
// precision with directed rounding until the interval excludes q.

// true iff e^{-q/32} < 2^{-exponent} (strict) or <= (weak)
bool q_inequality_holds(long long q, long long exponent, bool strict);

// least q satisfying the inequality above
long long min_q_for_exponent(long long exponent);

struct ChiParameters {
    long long t = 0, c = 0;
    long long p = 0; // 32c
    long long q = 0; // least with e^{-q/32} < 2^{-4p-3}
    // d value per clique-bound level, starting at level 2 (value 2)
    std::vector<std::pair<long long, mpz_class>> d_chain;
    mpz_class d_prime; // the level t-1 value feeding the final d
    mpz_class d;
    std::vector<std::string> notes;
};

// Inductive chain: d(2) = 2; d(level) is the least integer exceeding
// max(2p+1 + 2q*d' + 2^(4p+2)*c, 8q^2*d'/p + c) with d' = d(level-1).
ChiParameters chi_parameters(long long t, long long c);

struct MindegParameters {
    long long t = 0, c = 0;
    long long p = 0; // max(32c, 4t)
    long long q = 0; // least with e^{-q/32} * 2^(8p+4) <= 1/2
    mpz_class s;     // least with s*t >= 2q^2 + 2^(2q+1)*q*(t-1)
    mpz_class d;     // least integer exceeding the three-branch max
    std::vector<std::string> notes;
};

MindegParameters mindeg_parameters(long long t, long long c);

// exact branch checks used by the verification suites
bool chi_d_exceeds_branches(const ChiParameters& par);
bool mindeg_d_exceeds_branches(const MindegParameters& par);

std::string mpz_brief(const mpz_class& z, std::size_t max_digits = 40);

} // namespace ac

#endif
