#include "dsym/cli.hpp"

#include "dsym/abb.hpp"
#include "dsym/divsym.hpp"
#include "dsym/posets.hpp"
#include "dsym/qsym.hpp"
#include "dsym/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace dsym {

namespace {

using nlohmann::json;

// One command's output: a headline value followed by named fields.
struct Report {
    std::string command;
    std::string value;
    std::vector<std::pair<std::string, json>> fields;
    bool verify_failed = false;

    void add(std::string key, json v) { fields.emplace_back(std::move(key), std::move(v)); }
};

std::string render_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += render_text(v[i]);
        }
        return s;
    }
    return v.dump();
}

void emit(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        json j = {{"command", r.command}, {"value", r.value}};
        for (const auto& [k, v] : r.fields) j[k] = v;
        out << j.dump() << '\n';
        return;
    }
    out << r.value << '\n';
    for (const auto& [k, v] : r.fields) out << k << ": " << render_text(v) << '\n';
}

json histogram_json(const std::vector<long long>& h) {
    json a = json::array();
    for (long long x : h) a.push_back(x);
    return a;
}

std::string histogram_text(const std::vector<long long>& h) { return render_text(histogram_json(h)); }

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Symmetric polynomial as a combination of monomial symmetric polynomials.
std::string monomial_symmetric_form(const Polynomial& f) {
    if (f.is_zero()) return "0";
    if (!is_symmetric(f)) return to_string(f);
    const int n = f.ambient();
    std::string s;
    for (const auto& t : f.terms()) {
        const auto e = t.mono.exponents(n);
        if (!std::is_sorted(e.rbegin(), e.rend())) continue;
        std::vector<int> lambda;
        for (int x : e)
            if (x > 0) lambda.push_back(x);
        Rational c = t.coeff;
        if (s.empty()) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        if (c != 1 || lambda.empty()) s += to_string(c) + (lambda.empty() ? "" : "*");
        if (!lambda.empty()) s += "m" + to_string(Composition(lambda));
    }
    return s;
}

Permutation parse_permutation(const std::string& text) {
    Permutation w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                std::size_t used = 0;
                w.push_back(std::stoi(part, &used));
                if (used != part.size()) throw ParseError("bad permutation entry '" + part + "'", 0);
            } catch (const std::logic_error&) {
                throw ParseError("bad permutation entry '" + part + "'", 0);
            }
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9') throw ParseError("permutation digits must be 1-9", i);
            w.push_back(text[i] - '0');
        }
    }
    try {
        validate_permutation(w);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0);
    }
    return w;
}

void histogram_report(Report& r, const std::vector<long long>& hist, int n, int m) {
    if (m > 0) {
        if (m > n) throw PreconditionError("need 1 <= m <= n");
        const auto d = static_cast<std::size_t>(m - 1);
        r.value = std::to_string(d < hist.size() ? hist[d] : 0);
        r.add("histogram", histogram_json(hist));
    } else {
        r.value = histogram_text(hist);
    }
    r.add("n", n);
}

// --verify: DS of the F-expansion at each m against the histogram.
void verify_histogram(Report& r, const QSymExpansion& e, const std::vector<long long>& hist, int n) {
    bool ok = true;
    for (int m = 1; m <= n; ++m) {
        const auto d = static_cast<std::size_t>(m - 1);
        const Rational want = d < hist.size() ? Rational(static_cast<long>(hist[d])) : Rational(0);
        if (ds_qsym(e, m, n) != want) ok = false;
        if (n <= 6 && ds_bruteforce(to_polynomial(e, m, n)).constant_value() != want) ok = false;
    }
    r.add("verify", ok ? "ok" : "mismatch");
    r.verify_failed = !ok;
}

struct Options {
    std::string format = "text";
    bool verify = false;

    int n = 0;
    int m = 0;
    std::string poly;
    std::string method = "auto";
    bool expand = false;
    std::string basis;
    std::string comp;
    std::string file;
    std::string lambda;
    std::string perm;
    std::vector<std::string> coords;
    int max_n = 5;
};

Report cmd_ds(const Options& o) {
    Report r{"ds", {}, {}, false};
    const auto t0 = std::chrono::steady_clock::now();
    const Polynomial f = parse_polynomial(o.poly, o.n);
    const DsMethod method = o.method == "fast" ? DsMethod::fast : o.method == "oracle" ? DsMethod::oracle : DsMethod::automatic;
    const DsResult res = divided_symmetrization(f, method);
    const double ms = elapsed_ms(t0);
    const auto& v = res.value;
    if (v.is_zero() || v.degree() == 0)
        r.value = to_string(v.constant_value());
    else
        r.value = o.expand ? to_string(v) : monomial_symmetric_form(v);
    r.add("method", res.method_used == DsMethod::fast ? "fast" : "oracle");
    r.add("time_ms", ms);
    if (o.verify) {
        bool ok;
        if (res.method_used == DsMethod::fast)
            ok = ds_bruteforce(f) == v;
        else if (!f.is_zero() && *f.degree() == o.n - 1)
            ok = Polynomial::constant(o.n, ds_scalar(f)) == v;
        else
            ok = ds_bruteforce_serial(f) == v;
        r.add("verify", ok ? "ok" : "mismatch");
        r.verify_failed = !ok;
    }
    return r;
}

Report cmd_qsym(const Options& o) {
    Report r{"qsym", {}, {}, false};
    const Basis basis = parse_basis(o.basis);
    const Composition alpha = parse_composition(o.comp);
    const int n = o.n, m = o.m;
    if (alpha.size() != n - 1)
        throw PreconditionError("|" + to_string(alpha) + "| = " + std::to_string(alpha.size()) + " differs from n-1 = " +
                                std::to_string(n - 1));
    if (m < 1 || m > n) throw PreconditionError("need 1 <= m <= n");
    const auto e = QSymExpansion::single(basis, alpha);
    Rational closed;
    if (basis == Basis::F)
        closed = ds_F_closed(alpha, m, n);
    else
        closed = m < alpha.length() ? Rational(0) : ds_M_closed(alpha, m, n);
    r.value = to_string(closed);
    r.add("alternating_sum", to_string(ds_qsym(e, m, n)));
    json phi = json::array();
    for (const auto& h : phi_eulerian(e, n).h) phi.push_back(to_string(h));
    r.add("phi_eulerian", phi);
    if (o.verify) {
        const Rational oracle = ds_bruteforce(to_polynomial(e, m, n)).constant_value();
        r.add("oracle", to_string(oracle));
        r.verify_failed = oracle != closed;
        r.add("verify", r.verify_failed ? "mismatch" : "ok");
    }
    return r;
}

Report cmd_poset(const Options& o) {
    Report r{"poset", {}, {}, false};
    const std::string text = read_file(o.file);
    bool edge_labeled = false;
    try {
        edge_labeled = json::parse(text).contains("labels");
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
    }
    std::vector<long long> hist;
    std::optional<QSymExpansion> e;
    int k;
    if (edge_labeled) {
        const auto p = edge_labeled_poset_from_json(text);
        k = p.rank();
        hist = word_descent_histogram(maximal_chain_words(p), k);
        if (o.verify) e = edge_labeled_expansion(p);
    } else {
        const auto p = labeled_poset_from_json(text);
        k = p.size();
        hist = descent_histogram(linear_extensions(p), k);
        if (o.verify) e = kpw_expansion(p);
    }
    const int n = o.n ? o.n : k + 1;
    if (n != k + 1)
        throw PreconditionError("poset has " + std::string(edge_labeled ? "rank " : "size ") + std::to_string(k) +
                                ", need n-1 = " + std::to_string(n - 1));
    histogram_report(r, hist, n, o.m);
    r.add("kind", edge_labeled ? "edge-labeled" : "labeled");
    if (e) verify_histogram(r, *e, hist, n);
    return r;
}

Report cmd_syt(const Options& o) {
    Report r{"syt", {}, {}, false};
    const Composition lambda = parse_composition(o.lambda);
    const auto p = young_diagram_poset(lambda);
    const auto hist = descent_histogram(linear_extensions(p), p.size());
    histogram_report(r, hist, p.size() + 1, o.m);
    if (o.verify) verify_histogram(r, kpw_expansion(p), hist, p.size() + 1);
    return r;
}

Report cmd_stanley(const Options& o) {
    Report r{"stanley", {}, {}, false};
    const Permutation w = parse_permutation(o.perm);
    const int len = inversions(w);
    const int n = o.n ? o.n : len + 1;
    if (len != n - 1)
        throw PreconditionError("w has length " + std::to_string(len) + ", need n-1 = " + std::to_string(n - 1));
    const auto interval = weak_order_interval(w);
    const auto words = maximal_chain_words(interval);
    const auto hist = word_descent_histogram(words, len);
    histogram_report(r, hist, n, o.m);
    r.add("reduced_words", static_cast<long>(words.size()));
    if (o.verify) verify_histogram(r, edge_labeled_expansion(interval), hist, n);
    return r;
}

Report cmd_decompose(const Options& o) {
    Report r{"decompose", {}, {}, false};
    const auto t0 = std::chrono::steady_clock::now();
    const Polynomial f = parse_polynomial(o.poly, o.n);
    const auto cache = get_kn_cache(o.n);
    const auto d = decompose(f, *cache);
    r.value = to_string(d.scalar);
    r.add("g", to_string(d.g));
    r.add("h", to_string(d.h));
    r.add("time_ms", elapsed_ms(t0));
    if (o.verify) {
        const Rational direct = ds_scalar(f);
        const bool ok = direct == d.scalar && is_in_kn(d.h, *cache);
        r.add("verify", ok ? "ok" : "mismatch");
        r.verify_failed = !ok;
    }
    return r;
}

Report cmd_volume(const Options& o) {
    Report r{"volume", {}, {}, false};
    std::vector<Rational> a;
    for (const auto& s : o.coords) a.push_back(parse_rational(s));
    const Rational v = volume_permutahedron(a);
    r.value = to_string(v);
    if (o.verify) {
        const int n = static_cast<int>(a.size());
        Polynomial linear(n);
        for (int i = 1; i <= n; ++i) linear += a[static_cast<std::size_t>(i - 1)] * Polynomial::variable(n, i);
        const Rational oracle = ds_bruteforce(pow(linear, n - 1)).constant_value() / Rational(factorial(n - 1));
        r.add("oracle", to_string(oracle));
        r.verify_failed = oracle != v;
        r.add("verify", r.verify_failed ? "mismatch" : "ok");
    }
    return r;
}

int cmd_selftest(const Options& o, std::ostream& out) {
    if (o.max_n < 2 || o.max_n > 10) throw PreconditionError("selftest: --max-n must lie in 2..10");
    const bool as_json = o.format == "json";
    json suites = json::array();
    bool ok = true;
    run_selftest(o.max_n, [&](const SuiteResult& s) {
        ok = ok && s.ok();
        if (as_json) {
            suites.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures},
                              {"first_failure", s.first_failure}});
            return;
        }
        out << s.name << ": " << s.checks << " checks";
        if (s.ok())
            out << " ok\n";
        else
            out << ", " << s.failures << " failed (first: " << s.first_failure << ")\n";
        out.flush();
    });
    if (as_json)
        out << json{{"command", "selftest"}, {"value", ok ? "OK" : "FAILED"}, {"max_n", o.max_n}, {"suites", suites}}.dump()
            << '\n';
    else
        out << (ok ? "OK" : "FAILED") << '\n';
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Divided symmetrization toolkit", "dsym"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verify", o.verify, "Cross-check against an independent route");

    auto* ds = app.add_subcommand("ds", "Divided symmetrization of a polynomial");
    ds->add_option("--n", o.n, "Number of variables")->required()->check(CLI::Range(1, kMaxVariables));
    ds->add_option("poly", o.poly, "Polynomial in x1..xn")->required();
    ds->add_option("--method", o.method, "auto, oracle or fast")->check(CLI::IsMember({"auto", "oracle", "fast"}));
    ds->add_flag("--expand", o.expand, "Print a polynomial result fully expanded");

    auto* qs = app.add_subcommand("qsym", "Closed-form value for M_alpha or F_alpha in m variables");
    qs->add_option("--basis", o.basis, "M or F")->required();
    qs->add_option("--comp", o.comp, "Composition, e.g. 2,1")->required();
    qs->add_option("--m", o.m, "Variables used")->required();
    qs->add_option("--n", o.n, "Ambient size")->required()->check(CLI::Range(1, kMaxVariables));

    auto* po = app.add_subcommand("poset", "Descent histogram of a labeled or edge-labeled poset");
    po->add_option("--file", o.file, "Poset JSON file")->required();
    po->add_option("--m", o.m, "Report the entry for this m");
    po->add_option("--n", o.n, "Ambient size (default: size + 1)");

    auto* sy = app.add_subcommand("syt", "Descent histogram of standard Young tableaux");
    sy->add_option("--lambda", o.lambda, "Partition, e.g. 2,1")->required();
    sy->add_option("--m", o.m, "Report the entry for this m");

    auto* st = app.add_subcommand("stanley", "Descent histogram of reduced words");
    st->add_option("--w", o.perm, "Permutation in one-line notation, e.g. 321 or 3,2,1")->required();
    st->add_option("--n", o.n, "Ambient size (default: length + 1)");
    st->add_option("--m", o.m, "Report the entry for this m");

    auto* de = app.add_subcommand("decompose", "Split f into Catalan part g and h in K_n");
    de->add_option("--n", o.n, "Number of variables")->required();
    de->add_option("poly", o.poly, "Polynomial of degree n-1")->required();

    auto* vo = app.add_subcommand("volume", "Volume of the permutahedron with the given vertex");
    vo->add_option("coords", o.coords, "Vertex coordinates")->required();

    auto* se = app.add_subcommand("selftest", "Run the consistency suites");
    se->add_option("--max-n", o.max_n, "Largest n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (se->parsed()) return cmd_selftest(o, out);
        Report r;
        if (ds->parsed())
            r = cmd_ds(o);
        else if (qs->parsed())
            r = cmd_qsym(o);
        else if (po->parsed())
            r = cmd_poset(o);
        else if (sy->parsed())
            r = cmd_syt(o);
        else if (st->parsed())
            r = cmd_stanley(o);
        else if (de->parsed())
            r = cmd_decompose(o);
        else
            r = cmd_volume(o);
        emit(r, o.format == "json", out);
        return r.verify_failed ? kExitFailure : kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace dsym
