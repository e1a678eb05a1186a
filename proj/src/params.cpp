#include "ac/params.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace ac {

namespace {

    // keeps requested power-of-two magnitudes within a few megabytes
    void require_exponent_sane(long long bits, const char* what)
    {
        if (bits > (1LL << 24))
            throw std::runtime_error(std::string(what) + ": requested magnitude near 2^" + std::to_string(bits)
                + " exceeds the supported range");
    }

    // -1 when q < 32*e*ln2, +1 when q > 32*e*ln2 (equality cannot occur)
    int compare_q_to_bound(long long q, long long exponent)
    {
        for (mpfr_prec_t prec = 128; prec <= (1 << 22); prec *= 2) {
            mpfr_t lo, hi;
            mpfr_init2(lo, prec);
            mpfr_init2(hi, prec);
            mpfr_const_log2(lo, MPFR_RNDD);
            mpfr_const_log2(hi, MPFR_RNDU);
            mpfr_mul_si(lo, lo, 32 * exponent, MPFR_RNDD);
            mpfr_mul_si(hi, hi, 32 * exponent, MPFR_RNDU);
            int against_hi = mpfr_cmp_si(hi, q);
            int against_lo = mpfr_cmp_si(lo, q);
            mpfr_clear(lo);
            mpfr_clear(hi);
            if (against_hi < 0)
                return 1;
            if (against_lo > 0)
                return -1;
        }
        throw std::runtime_error("compare_q_to_bound: precision exhausted");
    }

} // namespace

bool q_inequality_holds(long long q, long long exponent, bool strict)
{
    // e^{-q/32} < 2^{-e}  <=>  q > 32 e ln2; the weak form coincides since
    // equality is impossible
    (void)strict;
    return compare_q_to_bound(q, exponent) > 0;
}

long long min_q_for_exponent(long long exponent)
{
    if (exponent < 1)
        throw std::runtime_error("min_q_for_exponent: exponent must be positive");
    long long q = static_cast<long long>(std::llround(32.0 * static_cast<double>(exponent) * 0.6931471805599453));
    if (q < 1)
        q = 1;
    while (q > 1 && compare_q_to_bound(q - 1, exponent) > 0)
        --q;
    while (compare_q_to_bound(q, exponent) < 0)
        ++q;
    return q;
}

ChiParameters chi_parameters(long long t, long long c)
{
    if (t < 1 || c < 1)
        throw std::runtime_error("chi_parameters: t and c must be positive");
    ChiParameters par;
    par.t = t;
    par.c = c;
    par.p = 32 * c;
    par.q = min_q_for_exponent(4 * par.p + 3);
    require_exponent_sane(4 * par.p + 2, "chi_parameters");
    par.d_chain.emplace_back(2, mpz_class(2));
    par.notes.push_back("the 2^x*c term of the d bound uses exponent 4p+2");
    if (t <= 2) {
        par.d = 2;
        par.d_prime = 2;
        return par;
    }
    mpz_class q(static_cast<long>(par.q)), p(static_cast<long>(par.p)), cc(static_cast<long>(c));
    mpz_class pow_term;
    mpz_ui_pow_ui(pow_term.get_mpz_t(), 2, static_cast<unsigned long>(4 * par.p + 2));
    pow_term *= cc;
    mpz_class dprime = 2;
    for (long long level = 3; level <= t; ++level) {
        mpz_class b1 = 2 * p + 1 + 2 * q * dprime + pow_term;
        mpz_class b2 = (8 * q * q * dprime) / p + cc; // floor
        mpz_class d = (b1 > b2 ? b1 : b2) + 1;
        par.d_chain.emplace_back(level, d);
        dprime = d;
    }
    par.d = par.d_chain.back().second;
    par.d_prime = par.d_chain.size() >= 2 ? par.d_chain[par.d_chain.size() - 2].second : mpz_class(2);
    return par;
}

MindegParameters mindeg_parameters(long long t, long long c)
{
    if (t < 1 || c < 1)
        throw std::runtime_error("mindeg_parameters: t and c must be positive");
    MindegParameters par;
    par.t = t;
    par.c = c;
    par.p = std::max(32 * c, 4 * t);
    par.q = min_q_for_exponent(8 * par.p + 5);

    mpz_class q(static_cast<long>(par.q)), tt(static_cast<long>(t)), cc(static_cast<long>(c)),
        p(static_cast<long>(par.p));
    // s minimal with s*t >= 2q^2 + 2^(2q+1) * q * (t-1)
    mpz_class rhs = 2 * q * q;
    if (t > 1) {
        require_exponent_sane(2 * par.q + 1, "mindeg_parameters");
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(2 * par.q + 1));
        rhs += pw * q * (tt - 1);
    }
    mpz_cdiv_q(par.s.get_mpz_t(), rhs.get_mpz_t(), tt.get_mpz_t());

    mpz_class b1 = p + 2 * par.s * tt;
    require_exponent_sane(8 * par.p + 4, "mindeg_parameters");
    require_exponent_sane(static_cast<long long>(mpz_sizeinbase(par.s.get_mpz_t(), 2)) * t, "mindeg_parameters");
    mpz_class st;
    mpz_pow_ui(st.get_mpz_t(), par.s.get_mpz_t(), static_cast<unsigned long>(t));
    mpz_class pw2t;
    mpz_ui_pow_ui(pw2t.get_mpz_t(), 2, static_cast<unsigned long>(2 * t));
    mpz_class b2 = 2 * cc * tt + 2 * par.s * tt + tt * st * pw2t;
    mpz_class pw8p;
    mpz_ui_pow_ui(pw8p.get_mpz_t(), 2, static_cast<unsigned long>(8 * par.p + 4));
    mpz_class b3 = 2 * par.s * tt + pw8p * cc + 3 * p + 2;
    mpz_class mx = b1;
    if (b2 > mx)
        mx = b2;
    if (b3 > mx)
        mx = b3;
    par.d = mx + 1;
    return par;
}

bool chi_d_exceeds_branches(const ChiParameters& par)
{
    if (par.t <= 2)
        return par.d == 2;
    mpz_class q(static_cast<long>(par.q)), p(static_cast<long>(par.p)), cc(static_cast<long>(par.c));
    mpz_class pow_term;
    mpz_ui_pow_ui(pow_term.get_mpz_t(), 2, static_cast<unsigned long>(4 * par.p + 2));
    mpz_class b1 = 2 * p + 1 + 2 * q * par.d_prime + pow_term * cc;
    if (par.d <= b1)
        return false;
    // d > 8q^2 d'/p + c  <=>  (d - c) * p > 8 q^2 d'
    return (par.d - cc) * p > 8 * q * q * par.d_prime;
}

bool mindeg_d_exceeds_branches(const MindegParameters& par)
{
    mpz_class q(static_cast<long>(par.q)), tt(static_cast<long>(par.t)), cc(static_cast<long>(par.c)),
        p(static_cast<long>(par.p));
    mpz_class rhs = 2 * q * q;
    if (par.t > 1) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(2 * par.q + 1));
        rhs += pw * q * (tt - 1);
    }
    if (par.s * tt < rhs)
        return false;
    mpz_class st;
    mpz_pow_ui(st.get_mpz_t(), par.s.get_mpz_t(), static_cast<unsigned long>(par.t));
    mpz_class pw2t, pw8p;
    mpz_ui_pow_ui(pw2t.get_mpz_t(), 2, static_cast<unsigned long>(2 * par.t));
    mpz_ui_pow_ui(pw8p.get_mpz_t(), 2, static_cast<unsigned long>(8 * par.p + 4));
    return par.d > p + 2 * par.s * tt && par.d > 2 * cc * tt + 2 * par.s * tt + tt * st * pw2t
        && par.d > 2 * par.s * tt + pw8p * cc + 3 * p + 2;
}

std::string mpz_brief(const mpz_class& z, std::size_t max_digits)
{
    std::string s = z.get_str();
    if (s.size() <= max_digits)
        return s;
    return s.substr(0, max_digits / 2) + "..." + s.substr(s.size() - max_digits / 2) + " (" + std::to_string(s.size())
        + " digits)";
}

} // namespace ac
