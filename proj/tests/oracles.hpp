#ifndef SPFKIT_TEST_ORACLES_HPP
#define SPFKIT_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle
{

using C = std::complex<double>;

inline C ipow(C z, std::size_t k)
{
    C r = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        r *= z;
    return r;
}

/// Max distance under the best greedy pairing of two equal-size multisets.
inline double multiset_distance(std::vector<C> a, std::vector<C> b)
{
    if (a.size() != b.size())
        return INFINITY;
    double worst = 0.0;
    for (C x : a)
    {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](C p, C q) { return std::abs(p - x) < std::abs(q - x); });
        worst = std::max(worst, std::abs(*it - x));
        b.erase(it);
    }
    return worst;
}

/// Horner evaluation of ascending coefficients.
inline C horner(const std::vector<C>& c, C z)
{
    C r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * z + c[i];
    return r;
}

/// Elementary symmetric polynomials from power sums by the textbook Newton recursion
/// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} S_i; returns ascending monic coefficients.
inline std::vector<C> monic_from_power_sums(const std::vector<C>& s)
{
    std::size_t n = s.size();
    std::vector<C> e(n + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k)
    {
        C acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i)
            acc += (i % 2 == 1 ? 1.0 : -1.0) * e[k - i] * s[i - 1];
        e[k] = acc / static_cast<double>(k);
    }
    std::vector<C> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        coeffs[n - k] = (k % 2 == 0 ? 1.0 : -1.0) * e[k];
    return coeffs;
}

inline C random_in_disk(std::mt19937_64& rng, double r)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

} // namespace oracle

#endif
