#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linespec/graph.hpp"
#include "linespec/partition.hpp"

namespace linespec {

/// A theorem-level precondition (connectivity, regularity, ...) does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Candidate spectra for an integral line graph with degree partitions
/// (alpha, beta): partitions gamma of 2e with exactly nu - 1 parts, a
/// strictly dominant first part, c^gamma_{alpha,beta} > 0 and the two
/// closed-walk moment identities. Members are in descending lexicographic order.
struct CandidateSet {
    Partition alpha;
    Partition beta;
    std::int64_t e = 0;
    std::int64_t nu = 0;
    std::vector<Partition> members;

    bool contains(const Partition& gamma) const;
    /// Largest number of distinct parts over the members; nullopt when empty.
    std::optional<std::size_t> max_distinct_parts() const;
};

/// sum (gamma_i - 2)^2 == 2 (sum C(alpha_j, 2) + sum C(beta_k, 2)) - 4 (e - nu + 1),
/// summing i over 1..nu-1. False if gamma has more than nu - 1 parts.
bool moment_c(const Partition& gamma, const Partition& alpha, const Partition& beta, std::int64_t e,
              std::int64_t nu);

/// sum (gamma_i - 2)^3 == 6 (sum C(alpha_j, 3) + sum C(beta_k, 3)) + 8 (e - nu + 1).
bool moment_d(const Partition& gamma, const Partition& alpha, const Partition& beta, std::int64_t e,
              std::int64_t nu);

/// Checks every membership condition for one gamma directly.
bool is_candidate(const Partition& gamma, const Partition& alpha, const Partition& beta);

/// Exhaustive search. With `cap_first_part` the search only visits gamma_1 <=
/// alpha_1 + beta_1 (the k = 1 Weyl bound); without it every gamma_1 <= 2e is tried.
/// Throws std::invalid_argument unless size(alpha) == size(beta) > 0.
CandidateSet enumerate_p(const Partition& alpha, const Partition& beta, bool cap_first_part = true);

/// Thread-safe memo of enumerate_p keyed by (alpha, beta).
class CandidateCache {
public:
    const CandidateSet& get(const Partition& alpha, const Partition& beta);

private:
    std::mutex mutex_;
    std::map<std::pair<Partition, Partition>, CandidateSet> table_;
};

struct RamanujanVerdict {
    int degree = 0;
    /// True when the comparisons used the exact integer spectrum.
    bool exact = false;
    double lambda2 = 0;
    double least = 0;
    std::optional<std::int64_t> lambda2_exact;
    std::optional<std::int64_t> least_exact;
    /// 2 sqrt(k - 1)
    double bound = 0;
    /// |lambda_2| <= bound
    bool ramanujan_second_largest = false;
    /// every eigenvalue other than one copy of k (and one copy of -k, if
    /// present) has absolute value <= bound
    bool ramanujan_all_nontrivial = false;
};

/// Throws std::invalid_argument when g is not k-regular, k < 1 or g has fewer than 2 vertices.
RamanujanVerdict ramanujan_verdict(const Graph& g, int k);
/// Same, reusing an already computed exact spectrum of g.
RamanujanVerdict ramanujan_verdict(const Graph& g, int k, const ExactSpectrum& spectrum);

/// Spectrum of the line graph of an s-regular bipartite graph with classes of
/// size n, parametrised by the multiplicities x (of s-4 and s) and y (of s-3 and s-1).
/// Throws std::invalid_argument when a multiplicity would be negative.
IntegerSpectrum regular_line_spectrum_template(std::int64_t s, std::int64_t n, std::int64_t x, std::int64_t y);

enum class RamanujanCase { lambda0, lambda1, lambda2 };

std::string to_string(RamanujanCase c);

struct CaseClassification {
    std::optional<RamanujanCase> label;
    int s = 0;
    int n = 0;
    /// Second largest eigenvalue of the base graph.
    std::int64_t base_lambda = 0;
    /// Whether s lies in the admissible range for the label.
    bool s_in_range = false;
    /// Non-empty when the finding contradicts the classification.
    std::string violation;
};

/// Requires g connected, s-regular with equal classes, s >= 3, and L(g)
/// integral and Ramanujan (second-largest reading). Throws PreconditionError otherwise.
CaseClassification classify_regular_ramanujan_case(const BipartiteGraph& g);

struct AnalyzeOptions {
    /// Compute the candidate set even when L(g) is not integral.
    bool p_set_when_nonintegral = false;
    CandidateCache* cache = nullptr;
};

struct SpectrumReport {
    Partition alpha;
    Partition beta;
    std::int64_t e = 0;
    std::int64_t nu = 0;
    Polynomial char_poly;
    bool is_integral = false;
    std::optional<IntegerSpectrum> spectrum;
    std::vector<double> numeric;
    std::optional<Partition> gamma_matched;
    std::size_t minus_two_multiplicity = 0;
    std::optional<CandidateSet> p_set;
    int diameter = 0;
    std::optional<std::int64_t> max_k_gamma;
    int clique = 0;
    int two_omega = 0;
    std::optional<RamanujanVerdict> ramanujan;
    /// Theorem violations found while checking; empty on a clean run.
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Builds L(g), decides integrality exactly and, when integral, checks that
/// the spectrum is {gamma_i - 2} plus -2 with multiplicity e - nu + 1 for a
/// member gamma of the candidate set, and that the diameter is at most both
/// the largest k(gamma) over the set and twice the clique number.
/// Throws PreconditionError if g is disconnected.
SpectrumReport analyze_line_graph(const BipartiteGraph& g, const AnalyzeOptions& options = {});

} // namespace linespec
