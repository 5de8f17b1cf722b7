#include "linespec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace linespec {

double round_real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::json numeric_json(const std::vector<double>& values)
{
    double scale = 1;
    for (double v : values)
        scale = std::max(scale, std::abs(v));
    nlohmann::json out = nlohmann::json::array();
    for (double v : values) {
        double nearest = std::round(v);
        out.push_back(std::abs(v - nearest) <= 1e-9 * scale ? round_real(nearest) : round_real(v));
    }
    return out;
}

nlohmann::json partition_json(const Partition& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto v : p.parts())
        out.push_back(v);
    return out;
}

nlohmann::json spectrum_json(const IntegerSpectrum& s)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto [value, mult] : s)
        out.push_back({value, mult});
    return out;
}

nlohmann::json polynomial_json(const Polynomial& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p)
        out.push_back(c.str());
    return out;
}

nlohmann::json to_json(const CandidateSet& s)
{
    nlohmann::json members = nlohmann::json::array();
    for (const auto& g : s.members)
        members.push_back(partition_json(g));
    return {{"alpha", partition_json(s.alpha)},
            {"beta", partition_json(s.beta)},
            {"e", s.e},
            {"nu", s.nu},
            {"members", members}};
}

nlohmann::json to_json(const RamanujanVerdict& v)
{
    nlohmann::json j = {{"degree", v.degree},
                        {"exact", v.exact},
                        {"bound", round_real(v.bound)},
                        {"ramanujan_second_largest", v.ramanujan_second_largest},
                        {"ramanujan_all_nontrivial", v.ramanujan_all_nontrivial}};
    if (v.exact) {
        j["lambda2"] = *v.lambda2_exact;
        j["least"] = *v.least_exact;
    } else {
        j["lambda2"] = round_real(v.lambda2);
        j["least"] = round_real(v.least);
    }
    return j;
}

nlohmann::json to_json(const SpectrumReport& r)
{
    nlohmann::json j;
    j["alpha"] = partition_json(r.alpha);
    j["beta"] = partition_json(r.beta);
    j["e"] = r.e;
    j["nu"] = r.nu;
    j["char_poly"] = polynomial_json(r.char_poly);
    j["is_integral"] = r.is_integral;
    j["spectrum"] = r.spectrum ? spectrum_json(*r.spectrum) : nlohmann::json(nullptr);
    j["numeric_spectrum"] = numeric_json(r.numeric);
    j["gamma"] = r.gamma_matched ? partition_json(*r.gamma_matched) : nlohmann::json(nullptr);
    j["p_set"] = r.p_set ? to_json(*r.p_set)["members"] : nlohmann::json(nullptr);
    j["minus_two_multiplicity"] = r.minus_two_multiplicity;
    j["diameter"] = r.diameter;
    j["max_k_gamma"] = r.max_k_gamma ? nlohmann::json(*r.max_k_gamma) : nlohmann::json(nullptr);
    j["clique_number"] = r.clique;
    j["two_omega"] = r.two_omega;
    j["ramanujan"] = r.ramanujan ? to_json(*r.ramanujan) : nlohmann::json(nullptr);
    j["violations"] = r.violations;
    return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text(std::ostream& out, const RamanujanVerdict& v)
{
    out << "degree " << v.degree << '\n';
    out << "mode " << (v.exact ? "exact" : "numeric") << '\n';
    if (v.exact)
        out << "lambda2 " << *v.lambda2_exact << "\nleast " << *v.least_exact << '\n';
    else
        out << "lambda2 " << nlohmann::json(round_real(v.lambda2)).dump() << "\nleast "
            << nlohmann::json(round_real(v.least)).dump() << '\n';
    out << "bound " << nlohmann::json(round_real(v.bound)).dump() << '\n';
    out << "ramanujan_second_largest " << (v.ramanujan_second_largest ? "true" : "false") << '\n';
    out << "ramanujan_all_nontrivial " << (v.ramanujan_all_nontrivial ? "true" : "false") << '\n';
}

void write_text(std::ostream& out, const SpectrumReport& r)
{
    out << "alpha " << r.alpha << "\nbeta " << r.beta << '\n';
    out << "e " << r.e << "\nnu " << r.nu << '\n';
    out << "char_poly " << to_string(r.char_poly) << '\n';
    out << "is_integral " << (r.is_integral ? "true" : "false") << '\n';
    if (r.spectrum) {
        out << "spectrum";
        for (auto [value, mult] : *r.spectrum)
            out << ' ' << value << '^' << mult;
        out << '\n';
    }
    out << "numeric_spectrum";
    for (const auto& v : numeric_json(r.numeric))
        out << ' ' << v.dump();
    out << '\n';
    if (r.gamma_matched)
        out << "gamma " << *r.gamma_matched << '\n';
    if (r.p_set) {
        out << "p_set";
        for (const auto& g : r.p_set->members)
            out << ' ' << g;
        out << '\n';
    }
    out << "minus_two_multiplicity " << r.minus_two_multiplicity << '\n';
    out << "diameter " << r.diameter << '\n';
    if (r.max_k_gamma)
        out << "max_k_gamma " << *r.max_k_gamma << '\n';
    out << "clique_number " << r.clique << '\n';
    out << "two_omega " << r.two_omega << '\n';
    if (r.ramanujan) {
        out << "ramanujan_second_largest " << (r.ramanujan->ramanujan_second_largest ? "true" : "false") << '\n';
        out << "ramanujan_all_nontrivial " << (r.ramanujan->ramanujan_all_nontrivial ? "true" : "false") << '\n';
    }
    for (const auto& v : r.violations)
        out << "violation " << v << '\n';
}

} // namespace linespec
