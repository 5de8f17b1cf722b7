#include "linespec/horn.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <sstream>

namespace linespec {

namespace {

void check_dimensions(int n, int r)
{
    if (n < 1 || r < 1 || r > n)
        throw std::invalid_argument("invalid Horn parameters n=" + std::to_string(n) + " r=" + std::to_string(r)
                                    + " (need 1 <= r <= n)");
}

// r-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int sum_of(const std::vector<int>& s)
{
    int total = 0;
    for (int v : s)
        total += v;
    return total;
}

// Inner Horn condition: for (F, G, H) in T^r_p, with i_f the f-th smallest
// element of I, sum i_f + sum j_g <= sum k_h + p(p+1)/2.
bool satisfies_inner(const IndexTriple& t, const IndexTriple& inner)
{
    int p = inner.r();
    int lhs = 0;
    int rhs = p * (p + 1) / 2;
    for (int f : inner.I)
        lhs += t.I[f - 1];
    for (int g : inner.J)
        lhs += t.J[g - 1];
    for (int h : inner.K)
        rhs += t.K[h - 1];
    return lhs <= rhs;
}

struct TCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, int>, std::vector<IndexTriple>> table;
};

TCache& t_cache()
{
    static TCache cache;
    return cache;
}

template <class T>
void check_lengths(const SpectrumVector<T>& a, const SpectrumVector<T>& b, const SpectrumVector<T>& c)
{
    if (a.size() != b.size() || a.size() != c.size())
        throw std::invalid_argument("spectrum length mismatch: " + std::to_string(a.size()) + ", "
                                    + std::to_string(b.size()) + ", " + std::to_string(c.size()));
}

template <class T>
bool leq(const T& lhs, const T& rhs, double tol)
{
    if constexpr (std::is_floating_point_v<T>)
        return lhs <= rhs + tol;
    else
        return lhs <= rhs;
}

template <class T>
bool inequality_holds(const IndexTriple& t, const SpectrumVector<T>& alpha, const SpectrumVector<T>& beta,
                      const SpectrumVector<T>& gamma, double tol)
{
    check_lengths(alpha, beta, gamma);
    if (static_cast<std::size_t>(t.n) != alpha.size())
        throw std::invalid_argument("triple dimension " + std::to_string(t.n) + " does not match spectrum length "
                                    + std::to_string(alpha.size()));
    T lhs = 0;
    T rhs = 0;
    for (int k : t.K)
        lhs += gamma[k - 1];
    for (int i : t.I)
        rhs += alpha[i - 1];
    for (int j : t.J)
        rhs += beta[j - 1];
    return leq(lhs, rhs, tol);
}

template <class T>
bool trace_holds(const SpectrumVector<T>& alpha, const SpectrumVector<T>& beta, const SpectrumVector<T>& gamma,
                 double tol)
{
    check_lengths(alpha, beta, gamma);
    T diff = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        diff += gamma[i] - alpha[i] - beta[i];
    if constexpr (std::is_floating_point_v<T>)
        return std::abs(diff) <= tol;
    else
        return diff == 0;
}

template <class T>
HornCheck run_horn(const SpectrumVector<T>& alpha, const SpectrumVector<T>& beta, const SpectrumVector<T>& gamma,
                   double tol)
{
    check_lengths(alpha, beta, gamma);
    HornCheck result;
    result.trace_ok = trace_holds(alpha, beta, gamma, tol);
    if (!result.trace_ok)
        return result;
    int n = static_cast<int>(alpha.size());
    for (int r = 1; r < n; ++r) {
        for (const auto& t : generate_t(n, r)) {
            if (!inequality_holds(t, alpha, beta, gamma, tol)) {
                result.violated = t;
                return result;
            }
        }
    }
    return result;
}

template <class T>
WeylWindow<T> weyl_window(const SpectrumVector<T>& alpha, const SpectrumVector<T>& beta, int k)
{
    if (alpha.size() != beta.size())
        throw std::invalid_argument("spectrum length mismatch in Weyl bounds");
    int n = static_cast<int>(alpha.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("Weyl index k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    WeylWindow<T> w;
    for (int i = 1; i <= n; ++i) {
        int j = n + k - i;
        if (j < 1 || j > n)
            continue;
        T v = alpha[i - 1] + beta[j - 1];
        if (!w.lower || v > *w.lower)
            w.lower = v;
    }
    for (int i = 1; i <= n; ++i) {
        int j = k + 1 - i;
        if (j < 1 || j > n)
            continue;
        T v = alpha[i - 1] + beta[j - 1];
        if (!w.upper || v < *w.upper)
            w.upper = v;
    }
    return w;
}

} // namespace

std::string to_string(const IndexTriple& t)
{
    std::ostringstream os;
    auto put = [&os](const char* name, const std::vector<int>& s) {
        os << name << "={";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? "," : "") << s[i];
        os << '}';
    };
    put("I", t.I);
    os << ' ';
    put("J", t.J);
    os << ' ';
    put("K", t.K);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexTriple& t) { return os << to_string(t); }

std::vector<IndexTriple> generate_u(int n, int r)
{
    check_dimensions(n, r);
    auto all = subsets(n, r);
    std::map<int, std::vector<const std::vector<int>*>> by_sum;
    for (const auto& s : all)
        by_sum[sum_of(s)].push_back(&s);
    const int shift = r * (r + 1) / 2;
    std::vector<IndexTriple> out;
    for (const auto& I : all) {
        for (const auto& J : all) {
            auto it = by_sum.find(sum_of(I) + sum_of(J) - shift);
            if (it == by_sum.end())
                continue;
            for (const auto* K : it->second)
                out.push_back(IndexTriple{n, I, J, *K});
        }
    }
    return out;
}

const std::vector<IndexTriple>& generate_t(int n, int r)
{
    check_dimensions(n, r);
    auto& cache = t_cache();
    const auto key = std::make_pair(n, r);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end())
            return it->second;
    }

    auto candidates = generate_u(n, r);
    std::vector<IndexTriple> kept;
    if (r == 1) {
        kept = std::move(candidates);
    } else {
        for (auto& t : candidates) {
            bool ok = true;
            for (int p = 1; p < r && ok; ++p)
                for (const auto& inner : generate_t(r, p))
                    if (!satisfies_inner(t, inner)) {
                        ok = false;
                        break;
                    }
            if (ok)
                kept.push_back(std::move(t));
        }
    }

    std::unique_lock lock(cache.mutex);
    return cache.table.emplace(key, std::move(kept)).first->second;
}

ExactSpectrumVector exact_spectrum(const Partition& p, std::size_t n)
{
    std::vector<Rational> values;
    for (auto v : p.padded(n))
        values.emplace_back(v);
    return ExactSpectrumVector(std::move(values));
}

bool check_inequality(const IndexTriple& t, const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                      const ExactSpectrumVector& gamma)
{
    return inequality_holds(t, alpha, beta, gamma, 0.0);
}

bool check_inequality(const IndexTriple& t, const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                      const RealSpectrumVector& gamma, double tol)
{
    return inequality_holds(t, alpha, beta, gamma, tol);
}

bool trace_condition(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma)
{
    return trace_holds(alpha, beta, gamma, 0.0);
}

bool trace_condition(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol)
{
    return trace_holds(alpha, beta, gamma, tol);
}

HornCheck horn_check(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma)
{
    return run_horn(alpha, beta, gamma, 0.0);
}

HornCheck horn_check(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol)
{
    return run_horn(alpha, beta, gamma, tol);
}

bool horn_compatible(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma)
{
    return horn_check(alpha, beta, gamma).compatible();
}

bool horn_compatible(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol)
{
    return horn_check(alpha, beta, gamma, tol).compatible();
}

WeylWindow<Rational> weyl_bounds(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta, int k)
{
    return weyl_window(alpha, beta, k);
}

WeylWindow<double> weyl_bounds(const RealSpectrumVector& alpha, const RealSpectrumVector& beta, int k)
{
    return weyl_window(alpha, beta, k);
}

} // namespace linespec
