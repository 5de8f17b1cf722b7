#include "linespec/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "linespec/horn.hpp"
#include "linespec/lr.hpp"

namespace linespec {

namespace {

BigInt choose2(std::int64_t a) { return BigInt(a) * (a - 1) / 2; }
BigInt choose3(std::int64_t a) { return BigInt(a) * (a - 1) * (a - 2) / 6; }

BigInt power_sum_shifted(const Partition& gamma, std::int64_t nu, int power)
{
    BigInt total = 0;
    for (std::int64_t i = 0; i < nu - 1; ++i) {
        BigInt d = BigInt(gamma[static_cast<std::size_t>(i)]) - 2;
        BigInt term = d;
        for (int k = 1; k < power; ++k)
            term *= d;
        total += term;
    }
    return total;
}

template <class F>
BigInt sum_over_parts(const Partition& p, F f)
{
    BigInt total = 0;
    for (auto v : p.parts())
        total += f(v);
    return total;
}

bool dominant_first_part(const Partition& gamma)
{
    return length(gamma) < 2 || gamma[0] > gamma[1];
}

void require_equal_sizes(const Partition& alpha, const Partition& beta)
{
    if (size(alpha) != size(beta))
        throw std::invalid_argument("candidate set needs |alpha| == |beta|, got " + std::to_string(size(alpha))
                                    + " and " + std::to_string(size(beta)));
    if (size(alpha) == 0)
        throw std::invalid_argument("candidate set needs a positive size e");
}

} // namespace

bool CandidateSet::contains(const Partition& gamma) const
{
    return std::ranges::find(members, gamma) != members.end();
}

std::optional<std::size_t> CandidateSet::max_distinct_parts() const
{
    std::optional<std::size_t> best;
    for (const auto& g : members)
        best = std::max(best.value_or(0), distinct_parts(g));
    return best;
}

bool moment_c(const Partition& gamma, const Partition& alpha, const Partition& beta, std::int64_t e,
              std::int64_t nu)
{
    if (static_cast<std::int64_t>(length(gamma)) > nu - 1)
        return false;
    BigInt lhs = power_sum_shifted(gamma, nu, 2);
    BigInt rhs = 2 * (sum_over_parts(alpha, choose2) + sum_over_parts(beta, choose2)) - 4 * BigInt(e - nu + 1);
    return lhs == rhs;
}

bool moment_d(const Partition& gamma, const Partition& alpha, const Partition& beta, std::int64_t e,
              std::int64_t nu)
{
    if (static_cast<std::int64_t>(length(gamma)) > nu - 1)
        return false;
    BigInt lhs = power_sum_shifted(gamma, nu, 3);
    BigInt rhs = 6 * (sum_over_parts(alpha, choose3) + sum_over_parts(beta, choose3)) + 8 * BigInt(e - nu + 1);
    return lhs == rhs;
}

bool is_candidate(const Partition& gamma, const Partition& alpha, const Partition& beta)
{
    require_equal_sizes(alpha, beta);
    const std::int64_t e = size(alpha);
    const auto nu = static_cast<std::int64_t>(length(alpha) + length(beta));
    return size(gamma) == 2 * e && static_cast<std::int64_t>(length(gamma)) == nu - 1
        && dominant_first_part(gamma) && moment_c(gamma, alpha, beta, e, nu) && moment_d(gamma, alpha, beta, e, nu)
        && lr_positive(alpha, beta, gamma);
}

CandidateSet enumerate_p(const Partition& alpha, const Partition& beta, bool cap_first_part)
{
    require_equal_sizes(alpha, beta);
    CandidateSet set{alpha, beta, size(alpha), static_cast<std::int64_t>(length(alpha) + length(beta)), {}};
    const std::int64_t cap = cap_first_part ? alpha[0] + beta[0] : 2 * set.e;
    for (auto it = PartitionRange(2 * set.e, set.nu - 1, cap).begin(); it != PartitionRange::iterator(); ++it) {
        const auto& parts = it.raw();
        if (parts.size() >= 2 && parts[0] == parts[1])
            continue;
        Partition gamma = *it;
        if (!moment_c(gamma, alpha, beta, set.e, set.nu) || !moment_d(gamma, alpha, beta, set.e, set.nu))
            continue;
        if (!lr_positive(alpha, beta, gamma))
            continue;
        set.members.push_back(std::move(gamma));
    }
    return set;
}

const CandidateSet& CandidateCache::get(const Partition& alpha, const Partition& beta)
{
    auto key = std::make_pair(alpha, beta);
    {
        std::lock_guard lock(mutex_);
        if (auto it = table_.find(key); it != table_.end())
            return it->second;
    }
    CandidateSet computed = enumerate_p(alpha, beta);
    std::lock_guard lock(mutex_);
    return table_.emplace(std::move(key), std::move(computed)).first->second;
}

RamanujanVerdict ramanujan_verdict(const Graph& g, int k)
{
    return ramanujan_verdict(g, k, exact_spectrum(g));
}

RamanujanVerdict ramanujan_verdict(const Graph& g, int k, const ExactSpectrum& spectrum)
{
    if (g.order() < 2)
        throw std::invalid_argument("Ramanujan verdict needs at least two vertices");
    if (k < 1)
        throw std::invalid_argument("Ramanujan verdict needs degree k >= 1");
    if (g.regular_degree() != k)
        throw std::invalid_argument("graph is not " + std::to_string(k) + "-regular");

    RamanujanVerdict v;
    v.degree = k;
    v.bound = 2.0 * std::sqrt(static_cast<double>(k - 1));
    if (spectrum.integer_roots) {
        // compare squares: |lambda| <= 2 sqrt(k-1)  <=>  lambda^2 <= 4(k-1)
        const std::int64_t bound_sq = 4 * static_cast<std::int64_t>(k - 1);
        auto eig = expand(*spectrum.integer_roots);
        v.exact = true;
        v.lambda2_exact = eig[1];
        v.least_exact = eig.back();
        v.lambda2 = static_cast<double>(eig[1]);
        v.least = static_cast<double>(eig.back());
        v.ramanujan_second_largest = eig[1] * eig[1] <= bound_sq;
        std::vector<std::int64_t> rest(eig.begin() + 1, eig.end());
        if (auto it = std::ranges::find(rest, -static_cast<std::int64_t>(k)); it != rest.end())
            rest.erase(it);
        v.ramanujan_all_nontrivial = std::ranges::all_of(rest, [&](std::int64_t l) { return l * l <= bound_sq; });
        return v;
    }

    const double tol = default_tolerance;
    auto eig = numeric_spectrum(g);
    v.lambda2 = eig[1];
    v.least = eig.back();
    v.ramanujan_second_largest = std::abs(eig[1]) <= v.bound + tol;
    std::vector<double> rest(eig.begin() + 1, eig.end());
    if (!rest.empty() && std::abs(rest.back() + k) <= tol * std::max(1, k))
        rest.pop_back();
    v.ramanujan_all_nontrivial = std::ranges::all_of(rest, [&](double l) { return std::abs(l) <= v.bound + tol; });
    return v;
}

IntegerSpectrum regular_line_spectrum_template(std::int64_t s, std::int64_t n, std::int64_t x, std::int64_t y)
{
    if (s < 2 || n < 1 || x < 0 || y < 0)
        throw std::invalid_argument("template needs s >= 2, n >= 1, x >= 0, y >= 0");
    const std::int64_t middle = 2 * n - 2 * x - 2 * y - 2;
    const std::int64_t minus_two = (s - 2) * n + 1;
    if (middle < 0)
        throw std::invalid_argument("multiplicity 2n - 2x - 2y - 2 is negative");
    IntegerSpectrum spec;
    auto add = [&spec](std::int64_t value, std::int64_t mult) {
        if (mult > 0)
            spec[value] += static_cast<std::size_t>(mult);
    };
    add(-2, minus_two);
    add(s - 4, x);
    add(s - 3, y);
    add(s - 2, middle);
    add(s - 1, y);
    add(s, x);
    add(2 * s - 2, 1);
    std::size_t total = 0;
    for (auto [value, mult] : spec)
        total += mult;
    if (static_cast<std::int64_t>(total) != s * n)
        throw std::invalid_argument("template multiplicities sum to " + std::to_string(total) + ", expected "
                                    + std::to_string(s * n));
    return spec;
}

std::string to_string(RamanujanCase c)
{
    switch (c) {
    case RamanujanCase::lambda0:
        return "lambda0";
    case RamanujanCase::lambda1:
        return "lambda1";
    case RamanujanCase::lambda2:
        return "lambda2";
    }
    return "unknown";
}

CaseClassification classify_regular_ramanujan_case(const BipartiteGraph& g)
{
    if (!is_connected(g))
        throw PreconditionError("graph is not connected");
    if (g.x_size() != g.y_size())
        throw PreconditionError("colour classes differ in size");
    auto dx = g.x_degrees();
    auto dy = g.y_degrees();
    const int s = dx.front();
    if (std::ranges::any_of(dx, [s](int d) { return d != s; }) || std::ranges::any_of(dy, [s](int d) { return d != s; }))
        throw PreconditionError("graph is not regular");
    if (s < 3)
        throw PreconditionError("degree s=" + std::to_string(s) + " < 3: the line graph degree 2s-2 is below 3");

    auto lg = line_graph(g);
    auto line_spec = exact_spectrum(lg.graph);
    if (!line_spec.integer_roots)
        throw PreconditionError("line graph is not integral");
    auto verdict = ramanujan_verdict(lg.graph, 2 * s - 2, line_spec);
    if (!verdict.ramanujan_second_largest)
        throw PreconditionError("line graph is not Ramanujan");

    auto base = integer_spectrum(g.as_graph());
    CaseClassification out;
    out.s = s;
    out.n = g.x_size();
    if (!base) {
        out.violation = "base graph is not integral although its line graph is";
        return out;
    }
    out.base_lambda = expand(*base)[1];
    int upper = 0;
    switch (out.base_lambda) {
    case 0:
        out.label = RamanujanCase::lambda0;
        upper = 10;
        break;
    case 1:
        out.label = RamanujanCase::lambda1;
        upper = 8;
        break;
    case 2:
        out.label = RamanujanCase::lambda2;
        upper = 6;
        break;
    default:
        out.violation = "second largest base eigenvalue " + std::to_string(out.base_lambda) + " is not in {0,1,2}";
        return out;
    }
    out.s_in_range = 3 <= s && s <= upper;
    if (!out.s_in_range)
        out.violation = "s=" + std::to_string(s) + " outside 3.." + std::to_string(upper) + " for " + to_string(*out.label);
    return out;
}

SpectrumReport analyze_line_graph(const BipartiteGraph& g, const AnalyzeOptions& options)
{
    if (!is_connected(g))
        throw PreconditionError("graph is not connected");
    auto degrees = degree_partitions(g);

    SpectrumReport r;
    r.alpha = degrees.alpha;
    r.beta = degrees.beta;
    r.e = g.edge_count();
    r.nu = g.order();

    auto lg = line_graph(g);
    auto spec = exact_spectrum(lg.graph);
    r.char_poly = spec.char_poly;
    r.is_integral = spec.integer_roots.has_value();
    r.spectrum = spec.integer_roots;
    r.numeric = numeric_spectrum(lg.graph);
    r.minus_two_multiplicity = root_multiplicity(spec.char_poly, -2);
    r.diameter = diameter(lg.graph).value_or(-1);
    r.clique = clique_number(lg.graph);
    r.two_omega = 2 * r.clique;

    auto fail = [&r](std::string msg) { r.violations.push_back(std::move(msg)); };

    const std::int64_t expected_minus_two = r.e - r.nu + 1;
    if (static_cast<std::int64_t>(r.minus_two_multiplicity) != expected_minus_two)
        fail("multiplicity of -2 is " + std::to_string(r.minus_two_multiplicity) + ", expected e-nu+1="
             + std::to_string(expected_minus_two));
    const int max_degree = std::max(std::ranges::max(g.x_degrees()), std::ranges::max(g.y_degrees()));
    if (max_degree >= 2 && r.clique != max_degree)
        fail("clique number " + std::to_string(r.clique) + " differs from maximum degree " + std::to_string(max_degree));
    if (r.numeric.back() < -2.0 - 1e-9)
        fail("least eigenvalue below -2");

    if (auto k = lg.graph.regular_degree(); k && *k >= 1 && lg.graph.order() >= 2)
        r.ramanujan = ramanujan_verdict(lg.graph, *k, spec);

    if (!r.is_integral && !options.p_set_when_nonintegral)
        return r;

    r.p_set = options.cache ? options.cache->get(r.alpha, r.beta) : enumerate_p(r.alpha, r.beta);
    if (auto k = r.p_set->max_distinct_parts())
        r.max_k_gamma = static_cast<std::int64_t>(*k);
    if (!r.is_integral)
        return r;

    if (r.p_set->members.empty())
        fail("candidate set is empty for an integral line graph");

    std::vector<Partition::part_type> shifted;
    bool shifted_ok = true;
    for (auto [value, mult] : *r.spectrum) {
        if (value == -2)
            continue;
        if (value < -2)
            shifted_ok = false;
        shifted.insert(shifted.end(), mult, value + 2);
    }
    if (!shifted_ok) {
        fail("eigenvalue below -2 in an integral line graph");
    } else {
        r.gamma_matched = Partition(shifted);
        if (static_cast<std::int64_t>(length(*r.gamma_matched)) != r.nu - 1)
            fail("recovered gamma " + to_string(*r.gamma_matched) + " does not have nu-1 parts");
        if (!r.p_set->contains(*r.gamma_matched))
            fail("recovered gamma " + to_string(*r.gamma_matched) + " is not in the candidate set");
    }
    if (r.max_k_gamma && r.diameter > *r.max_k_gamma)
        fail("diameter " + std::to_string(r.diameter) + " exceeds max k(gamma)=" + std::to_string(*r.max_k_gamma));
    if (r.diameter > r.two_omega)
        fail("diameter " + std::to_string(r.diameter) + " exceeds 2*omega=" + std::to_string(r.two_omega));
    return r;
}

} // namespace linespec
