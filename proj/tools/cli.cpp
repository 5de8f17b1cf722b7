#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"

#include "linespec/graph_io.hpp"
#include "linespec/horn.hpp"
#include "linespec/lr.hpp"
#include "linespec/report.hpp"
#include "linespec/sampling.hpp"
#include "linespec/spectra.hpp"

namespace linespec::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parsed spectrum argument: exact when every entry is an integer or p/q.
struct ValueList {
    std::vector<Rational> exact;
    std::vector<double> real;
    bool is_exact = true;
};

std::optional<Rational> parse_rational(const std::string& token)
{
    auto slash = token.find('/');
    auto parse_int = [](std::string_view s) -> std::optional<BigInt> {
        if (s.empty())
            return std::nullopt;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size() || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return std::nullopt;
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string::npos) {
        if (auto v = parse_int(token))
            return Rational(*v);
        return std::nullopt;
    }
    auto num = parse_int(std::string_view(token).substr(0, slash));
    auto den = parse_int(std::string_view(token).substr(slash + 1));
    if (!num || !den || *den == 0)
        return std::nullopt;
    return Rational(*num, *den);
}

ValueList parse_values(const std::string& text)
{
    ValueList out;
    if (text == "-")
        return out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (auto r = parse_rational(token)) {
            out.exact.push_back(*r);
            out.real.push_back(r->convert_to<double>());
            continue;
        }
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != token.size())
            throw std::invalid_argument("malformed value '" + token + "' in '" + text + "'");
        out.is_exact = false;
        out.real.push_back(v);
    }
    return out;
}

template <class T>
SpectrumVector<T> padded_vector(std::vector<T> values, std::size_t n)
{
    if (values.size() > n)
        throw std::invalid_argument("spectrum has more than n=" + std::to_string(n) + " entries");
    values.resize(n, T(0));
    return SpectrumVector<T>::sorted(std::move(values));
}

std::string rational_text(const Rational& r)
{
    std::ostringstream os;
    os << r;
    return os.str();
}

BipartiteGraph load_graph(const std::string& path)
{
    if (!fs::exists(path))
        throw IoError("cannot open " + path);
    try {
        return load_bipartite(path);
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f || !(f << content))
        throw IoError("cannot write " + path);
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_lr(Context& ctx, const std::string& a, const std::string& b, const std::string& g, bool positive)
{
    auto alpha = parse_partition(a);
    auto beta = parse_partition(b);
    auto gamma = parse_partition(g);
    if (positive)
        ctx.out << (lr_positive(alpha, beta, gamma) ? "true" : "false") << '\n';
    else
        ctx.out << lr_coefficient(alpha, beta, gamma) << '\n';
    return ok;
}

int cmd_horn_triples(Context& ctx, int n, int r, bool u_only)
{
    if (u_only) {
        for (const auto& t : generate_u(n, r))
            ctx.out << t << '\n';
    } else {
        for (const auto& t : generate_t(n, r))
            ctx.out << t << '\n';
    }
    return ok;
}

int cmd_horn_check(Context& ctx, const std::string& a, const std::string& b, const std::string& g, double tol,
                   int n_flag, bool numeric)
{
    auto va = parse_values(a);
    auto vb = parse_values(b);
    auto vg = parse_values(g);
    std::size_t n = n_flag > 0 ? static_cast<std::size_t>(n_flag)
                               : std::max({va.real.size(), vb.real.size(), vg.real.size()});
    if (n == 0)
        throw std::invalid_argument("spectra must have at least one entry");
    HornCheck check;
    if (!numeric && va.is_exact && vb.is_exact && vg.is_exact) {
        check = horn_check(padded_vector(va.exact, n), padded_vector(vb.exact, n), padded_vector(vg.exact, n));
    } else {
        check = horn_check(padded_vector(va.real, n), padded_vector(vb.real, n), padded_vector(vg.real, n), tol);
    }
    if (check.compatible()) {
        ctx.out << "compatible\n";
        return ok;
    }
    ctx.out << "incompatible\n";
    if (!check.trace_ok)
        ctx.out << "violated trace\n";
    else
        ctx.out << "violated " << *check.violated << '\n';
    return ok;
}

int cmd_horn_weyl(Context& ctx, const std::string& a, const std::string& b, int k, int n_flag, bool numeric)
{
    auto va = parse_values(a);
    auto vb = parse_values(b);
    std::size_t n = n_flag > 0 ? static_cast<std::size_t>(n_flag) : std::max(va.real.size(), vb.real.size());
    if (!numeric && va.is_exact && vb.is_exact) {
        auto w = weyl_bounds(padded_vector(va.exact, n), padded_vector(vb.exact, n), k);
        ctx.out << "lower " << (w.lower ? rational_text(*w.lower) : "absent") << '\n';
        ctx.out << "upper " << (w.upper ? rational_text(*w.upper) : "absent") << '\n';
    } else {
        auto w = weyl_bounds(padded_vector(va.real, n), padded_vector(vb.real, n), k);
        auto show = [](const std::optional<double>& v) {
            return v ? nlohmann::json(round_real(*v)).dump() : std::string("absent");
        };
        ctx.out << "lower " << show(w.lower) << "\nupper " << show(w.upper) << '\n';
    }
    return ok;
}

int cmd_horn_sample(Context& ctx, int n, int trials, double tol, std::uint64_t seed)
{
    auto s = sample_horn_necessity(n, trials, tol, seed);
    ctx.out << "n " << s.n << " trials " << s.trials << " inequalities " << s.inequalities_checked
            << " trace_violations " << s.trace_violations << " horn_violations " << s.horn_violations
            << " weyl_violations " << s.weyl_violations << '\n';
    for (const auto& ex : s.examples)
        ctx.out << "violation " << ex << '\n';
    return s.violations() == 0 ? ok : theorem_violation;
}

int cmd_graph_spectrum(Context& ctx, const std::string& file, bool numeric_only, const std::string& format)
{
    auto g = load_graph(file);
    auto graph = g.as_graph();
    nlohmann::json j;
    if (!numeric_only) {
        auto s = exact_spectrum(graph);
        j["char_poly"] = polynomial_json(s.char_poly);
        j["is_integral"] = s.integer_roots.has_value();
        j["spectrum"] = s.integer_roots ? spectrum_json(*s.integer_roots) : nlohmann::json(nullptr);
    }
    auto numeric = numeric_json(numeric_spectrum(graph));
    j["numeric_spectrum"] = numeric;
    if (format == "json") {
        ctx.out << dump(j);
        return ok;
    }
    if (!numeric_only) {
        auto s = exact_spectrum(graph);
        ctx.out << "char_poly " << to_string(s.char_poly) << '\n';
        ctx.out << "is_integral " << (s.integer_roots ? "true" : "false") << '\n';
        if (s.integer_roots) {
            ctx.out << "spectrum";
            for (auto [value, mult] : *s.integer_roots)
                ctx.out << ' ' << value << '^' << mult;
            ctx.out << '\n';
        }
    }
    ctx.out << "numeric_spectrum";
    for (const auto& v : numeric)
        ctx.out << ' ' << v.dump();
    ctx.out << '\n';
    return ok;
}

int cmd_graph_linegraph(Context& ctx, const std::string& file, const std::string& out_path)
{
    auto lg = line_graph(load_graph(file));
    auto text = dump(to_json(lg));
    if (out_path.empty())
        ctx.out << text;
    else
        write_file(out_path, text);
    return ok;
}

int cmd_graph_complement(Context& ctx, const std::string& file, const std::string& out_path)
{
    auto comp = bipartite_complement(load_graph(file));
    std::ostringstream text;
    if (out_path.ends_with(".json"))
        text << dump(to_json(comp));
    else
        write_bipartite_text(text, comp);
    if (out_path.empty())
        ctx.out << text.str();
    else
        write_file(out_path, text.str());
    return ok;
}

int cmd_enum_p(Context& ctx, const std::string& a, const std::string& b, bool no_cap)
{
    auto set = enumerate_p(parse_partition(a), parse_partition(b), !no_cap);
    for (const auto& g : set.members)
        ctx.out << g << '\n';
    return ok;
}

int cmd_analyze(Context& ctx, const std::string& file, const std::string& json_path, const std::string& format,
                bool p_set)
{
    auto report = analyze_line_graph(load_graph(file), AnalyzeOptions{p_set, nullptr});
    auto j = to_json(report);
    if (!json_path.empty())
        write_file(json_path, dump(j));
    if (format == "json")
        ctx.out << dump(j);
    else
        write_text(ctx.out, report);
    return report.ok() ? ok : theorem_violation;
}

int cmd_ramanujan(Context& ctx, const std::string& file, const std::string& format)
{
    auto g = load_graph(file);
    auto lg = line_graph(g);
    auto k = lg.graph.regular_degree();
    if (!k)
        throw std::invalid_argument("line graph of " + file + " is not regular");
    auto verdict = ramanujan_verdict(lg.graph, *k);
    auto j = to_json(verdict);
    std::optional<CaseClassification> cls;
    std::string skipped;
    try {
        cls = classify_regular_ramanujan_case(g);
    } catch (const PreconditionError& e) {
        skipped = e.what();
    }
    if (cls) {
        j["case"] = cls->label ? nlohmann::json(to_string(*cls->label)) : nlohmann::json(nullptr);
        j["s"] = cls->s;
        j["s_in_range"] = cls->s_in_range;
        j["violation"] = cls->violation;
    } else {
        j["case"] = nullptr;
        j["case_skipped"] = skipped;
    }
    if (format == "json") {
        ctx.out << dump(j);
    } else {
        write_text(ctx.out, verdict);
        if (cls) {
            ctx.out << "case " << (cls->label ? to_string(*cls->label) : "none") << "\ns " << cls->s << '\n';
            if (!cls->violation.empty())
                ctx.out << "violation " << cls->violation << '\n';
        } else {
            ctx.out << "case skipped: " << skipped << '\n';
        }
    }
    return cls && !cls->violation.empty() ? theorem_violation : ok;
}

struct CorpusEntry {
    std::string name;
    std::string line;
    enum { integral, non_integral, skipped } kind = skipped;
    bool violation = false;
};

int cmd_corpus_verify(Context& ctx, const std::string& dir, int jobs)
{
    if (!fs::is_directory(dir))
        throw IoError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::ranges::sort(files);

    std::vector<BipartiteGraph> graphs;
    for (const auto& f : files)
        graphs.push_back(load_graph(f.string()));

    std::vector<CorpusEntry> entries(graphs.size());
    CandidateCache cache;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            auto& entry = entries[i];
            entry.name = files[i].filename().string();
            std::ostringstream line;
            line << entry.name;
            try {
                auto r = analyze_line_graph(graphs[i], AnalyzeOptions{false, &cache});
                entry.kind = r.is_integral ? CorpusEntry::integral : CorpusEntry::non_integral;
                entry.violation = !r.ok();
                if (r.is_integral) {
                    line << " integral gamma=" << (r.gamma_matched ? to_string(*r.gamma_matched) : "?")
                         << " minus_two=" << r.minus_two_multiplicity << " diameter=" << r.diameter
                         << " max_k_gamma=" << (r.max_k_gamma ? std::to_string(*r.max_k_gamma) : "-")
                         << " two_omega=" << r.two_omega;
                } else {
                    line << " non-integral minus_two=" << r.minus_two_multiplicity << " diameter=" << r.diameter;
                }
                line << (r.ok() ? " ok" : " VIOLATION");
                for (const auto& v : r.violations)
                    line << " [" << v << "]";
            } catch (const std::invalid_argument& e) {
                entry.kind = CorpusEntry::skipped;
                line << " skipped (" << e.what() << ")";
            }
            entry.line = line.str();
        }
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::size_t integral = 0, non_integral = 0, skipped = 0, violations = 0;
    for (const auto& e : entries) {
        ctx.out << e.line << '\n';
        integral += e.kind == CorpusEntry::integral;
        non_integral += e.kind == CorpusEntry::non_integral;
        skipped += e.kind == CorpusEntry::skipped;
        violations += e.violation;
    }
    ctx.out << "graphs " << entries.size() << " integral " << integral << " non_integral " << non_integral
            << " skipped " << skipped << " violations " << violations << '\n';
    return violations == 0 ? ok : theorem_violation;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err};
    CLI::App app{"Horn inequalities, Littlewood-Richardson coefficients and line graph spectra", "linespec"};
    app.require_subcommand(1);
    std::function<int()> action;

    // lr
    std::string alpha, beta, gamma;
    bool count_flag = false, positive_flag = false;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^gamma_{alpha,beta}");
    lr->add_option("--alpha", alpha, "partition, e.g. 3 or 4,1,1 ('-' for empty)")->required();
    lr->add_option("--beta", beta)->required();
    lr->add_option("--gamma", gamma)->required();
    auto* count_opt = lr->add_flag("--count", count_flag, "print the coefficient (default)");
    lr->add_flag("--positive", positive_flag, "print true/false")->excludes(count_opt);
    lr->callback([&] { action = [&] { return cmd_lr(ctx, alpha, beta, gamma, positive_flag); }; });

    // horn
    auto* horn = app.add_subcommand("horn", "Horn triples and inequality checks");
    horn->require_subcommand(1);
    int n = 0, r = 0, k = 0, trials = 1000;
    bool u_only = false, numeric = false;
    double tol = default_tolerance;
    std::uint64_t seed = 0;

    auto* triples = horn->add_subcommand("triples", "list T^n_r (or U^n_r with --u-only)");
    triples->add_option("--n", n)->required();
    triples->add_option("--r", r)->required();
    triples->add_flag("--u-only", u_only);
    triples->callback([&] { action = [&] { return cmd_horn_triples(ctx, n, r, u_only); }; });

    auto* check = horn->add_subcommand("check", "test the trace condition and every Horn inequality");
    check->add_option("--alpha", alpha)->required();
    check->add_option("--beta", beta)->required();
    check->add_option("--gamma", gamma)->required();
    check->add_option("--tol", tol, "tolerance in numeric mode");
    check->add_option("--n", n, "pad all spectra with zeros to this length");
    check->add_flag("--numeric", numeric, "force floating point mode");
    check->callback([&] { action = [&] { return cmd_horn_check(ctx, alpha, beta, gamma, tol, n, numeric); }; });

    auto* weyl = horn->add_subcommand("weyl", "per-index Weyl window for gamma_k");
    weyl->add_option("--alpha", alpha)->required();
    weyl->add_option("--beta", beta)->required();
    weyl->add_option("--k", k)->required();
    weyl->add_option("--n", n);
    weyl->add_flag("--numeric", numeric);
    weyl->callback([&] { action = [&] { return cmd_horn_weyl(ctx, alpha, beta, k, n, numeric); }; });

    auto* sample = horn->add_subcommand("sample", "random symmetric necessity test");
    sample->add_option("--n", n)->required();
    sample->add_option("--trials", trials);
    sample->add_option("--tol", tol);
    sample->add_option("--seed", seed);
    sample->callback([&] { action = [&] { return cmd_horn_sample(ctx, n, trials, tol, seed); }; });

    // graph
    std::string file, out_path, format = "text";
    auto* graph = app.add_subcommand("graph", "bipartite graph utilities");
    graph->require_subcommand(1);
    bool exact_flag = false, numeric_flag = false;
    auto* spectrum = graph->add_subcommand("spectrum", "spectrum of the graph itself");
    spectrum->add_option("--file", file)->required();
    auto* exact_opt = spectrum->add_flag("--exact", exact_flag, "exact characteristic polynomial (default)");
    spectrum->add_flag("--numeric", numeric_flag, "floating point eigenvalues only")->excludes(exact_opt);
    spectrum->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    spectrum->callback([&] { action = [&] { return cmd_graph_spectrum(ctx, file, numeric_flag, format); }; });

    auto* linegraph = graph->add_subcommand("linegraph", "write the line graph as JSON");
    linegraph->add_option("--file", file)->required();
    linegraph->add_option("--out", out_path);
    linegraph->callback([&] { action = [&] { return cmd_graph_linegraph(ctx, file, out_path); }; });

    auto* complement = graph->add_subcommand("complement", "bipartite complement");
    complement->add_option("--file", file)->required();
    complement->add_option("--out", out_path);
    complement->callback([&] { action = [&] { return cmd_graph_complement(ctx, file, out_path); }; });

    // spectra
    auto* spectra = app.add_subcommand("spectra", "candidate spectra and line graph analysis");
    spectra->require_subcommand(1);
    bool no_cap = false, p_set_flag = false;
    std::string json_path;
    auto* enum_p = spectra->add_subcommand("enum-p", "list the candidate set P(alpha, beta)");
    enum_p->add_option("--alpha", alpha)->required();
    enum_p->add_option("--beta", beta)->required();
    enum_p->add_flag("--no-cap", no_cap, "search gamma_1 up to 2e instead of alpha_1 + beta_1");
    enum_p->callback([&] { action = [&] { return cmd_enum_p(ctx, alpha, beta, no_cap); }; });

    auto* analyze = spectra->add_subcommand("analyze", "check the spectrum of L(G)");
    analyze->add_option("--file", file)->required();
    analyze->add_option("--json", json_path, "also write the report to this path");
    analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--p-set", p_set_flag, "compute the candidate set even when L(G) is not integral");
    analyze->callback([&] { action = [&] { return cmd_analyze(ctx, file, json_path, format, p_set_flag); }; });

    auto* raman = spectra->add_subcommand("ramanujan", "Ramanujan verdict for the line graph");
    raman->add_option("--file", file)->required();
    raman->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    raman->callback([&] { action = [&] { return cmd_ramanujan(ctx, file, format); }; });

    // corpus
    auto* corpus = app.add_subcommand("corpus", "batch verification");
    corpus->require_subcommand(1);
    std::string dir;
    int jobs = 1;
    auto* verify = corpus->add_subcommand("verify", "analyze every graph file in a directory");
    verify->add_option("--dir", dir)->required();
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->callback([&] { action = [&] { return cmd_corpus_verify(ctx, dir, jobs); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        return action ? action() : usage_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace linespec::cli
