#include "linespec/sampling.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "linespec/horn.hpp"

namespace linespec {

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m(i, j) = m(j, i) = dist(rng);
    return m;
}

RealSpectrumVector eigenvalues(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return RealSpectrumVector::sorted(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

} // namespace

SamplingSummary sample_horn_necessity(int n, int trials, double tol, std::uint64_t seed)
{
    if (n < 1 || trials < 0 || tol < 0)
        throw std::invalid_argument("sampling needs n >= 1, trials >= 0, tol >= 0");
    std::mt19937_64 rng(seed);
    SamplingSummary s;
    s.n = n;
    s.trials = trials;

    std::vector<const std::vector<IndexTriple>*> families;
    for (int r = 1; r < n; ++r)
        families.push_back(&generate_t(n, r));

    auto note = [&s](int trial, const std::string& what) {
        if (s.examples.size() < 5)
            s.examples.push_back("trial " + std::to_string(trial) + ": " + what);
    };

    for (int t = 0; t < trials; ++t) {
        Eigen::MatrixXd a = random_symmetric(n, rng);
        Eigen::MatrixXd b = random_symmetric(n, rng);
        auto alpha = eigenvalues(a);
        auto beta = eigenvalues(b);
        auto gamma = eigenvalues(a + b);

        if (!trace_condition(alpha, beta, gamma, tol)) {
            ++s.trace_violations;
            note(t, "trace condition");
        }
        for (const auto* family : families)
            for (const auto& triple : *family) {
                ++s.inequalities_checked;
                if (!check_inequality(triple, alpha, beta, gamma, tol)) {
                    ++s.horn_violations;
                    note(t, "inequality " + to_string(triple));
                }
            }
        for (int k = 1; k <= n; ++k) {
            auto w = weyl_bounds(alpha, beta, k);
            const double g = gamma[k - 1];
            if ((w.lower && g < *w.lower - tol) || (w.upper && g > *w.upper + tol)) {
                ++s.weyl_violations;
                note(t, "Weyl window k=" + std::to_string(k));
            }
        }
    }
    return s;
}

} // namespace linespec
