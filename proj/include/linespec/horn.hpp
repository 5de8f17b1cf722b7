#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "linespec/partition.hpp"

namespace linespec {

/// A triple (I, J, K) of r-element subsets of {1..n}, each stored strictly
/// increasing and 1-based.
struct IndexTriple {
    int n = 0;
    std::vector<int> I;
    std::vector<int> J;
    std::vector<int> K;

    int r() const { return static_cast<int>(I.size()); }

    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
    friend auto operator<=>(const IndexTriple& a, const IndexTriple& b)
    {
        if (auto c = a.I <=> b.I; c != 0)
            return c;
        if (auto c = a.J <=> b.J; c != 0)
            return c;
        return a.K <=> b.K;
    }
};

/// "I={1,2} J={1,3} K={2,3}"
std::string to_string(const IndexTriple& t);
std::ostream& operator<<(std::ostream& os, const IndexTriple& t);

/// All triples of r-subsets of {1..n} with sum(I) + sum(J) = sum(K) + r(r+1)/2,
/// in lexicographic order of (I, J, K).
std::vector<IndexTriple> generate_u(int n, int r);

/// Horn's recursively filtered family. The table is memoized per (n, r) and
/// shared by every caller; the returned reference stays valid for the
/// lifetime of the process.
const std::vector<IndexTriple>& generate_t(int n, int r);

/// Weakly decreasing spectrum of length n. Rational entries give exact
/// comparisons; double entries are compared with a caller tolerance.
template <class T>
class SpectrumVector {
public:
    using value_type = T;

    SpectrumVector() = default;

    /// Throws std::invalid_argument unless values are weakly decreasing.
    explicit SpectrumVector(std::vector<T> values)
        : values_(std::move(values))
    {
        for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
            if (values_[i] < values_[i + 1] && !nearly_equal(values_[i], values_[i + 1]))
                throw std::invalid_argument("spectrum vector is not weakly decreasing");
        }
    }

    /// Sorts descending before validating.
    static SpectrumVector sorted(std::vector<T> values)
    {
        std::ranges::sort(values, [](const T& a, const T& b) { return a > b; });
        return SpectrumVector(std::move(values));
    }

    std::size_t size() const { return values_.size(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<T>& values() const { return values_; }

private:
    static bool nearly_equal(const T& a, const T& b)
    {
        if constexpr (std::is_floating_point_v<T>) {
            T scale = std::max<T>({T(1), a < 0 ? -a : a, b < 0 ? -b : b});
            T diff = a - b;
            return (diff < 0 ? -diff : diff) <= T(1e-12) * scale;
        } else {
            return a == b;
        }
    }

    std::vector<T> values_;
};

using ExactSpectrumVector = SpectrumVector<Rational>;
using RealSpectrumVector = SpectrumVector<double>;

/// Partition parts as an exact spectrum padded with zeros to length n.
ExactSpectrumVector exact_spectrum(const Partition& p, std::size_t n);

inline constexpr double default_tolerance = 1e-9;

bool check_inequality(const IndexTriple& t, const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                      const ExactSpectrumVector& gamma);
bool check_inequality(const IndexTriple& t, const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                      const RealSpectrumVector& gamma, double tol = default_tolerance);

bool trace_condition(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma);
bool trace_condition(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol = default_tolerance);

/// Outcome of the full Horn test; `violated` holds the first failing triple
/// in (r, I, J, K) order when the trace condition held but an inequality failed.
struct HornCheck {
    bool trace_ok = false;
    std::optional<IndexTriple> violated;

    bool compatible() const { return trace_ok && !violated; }
};

/// Trace condition plus every inequality indexed by generate_t(n, r), r < n.
HornCheck horn_check(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma);
HornCheck horn_check(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol = default_tolerance);

bool horn_compatible(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta,
                     const ExactSpectrumVector& gamma);
bool horn_compatible(const RealSpectrumVector& alpha, const RealSpectrumVector& beta,
                     const RealSpectrumVector& gamma, double tol = default_tolerance);

/// Per-index window max_{i+j=n+k}(alpha_i + beta_j) <= gamma_k <= min_{i+j=k+1}(alpha_i + beta_j).
/// Pairs with an index outside 1..n are skipped; a side with no valid pair is absent.
template <class T>
struct WeylWindow {
    std::optional<T> lower;
    std::optional<T> upper;
};

WeylWindow<Rational> weyl_bounds(const ExactSpectrumVector& alpha, const ExactSpectrumVector& beta, int k);
WeylWindow<double> weyl_bounds(const RealSpectrumVector& alpha, const RealSpectrumVector& beta, int k);

} // namespace linespec
