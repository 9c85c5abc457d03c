#include "dsym/selftest.hpp"

#include "dsym/abb.hpp"
#include "dsym/divsym.hpp"
#include "dsym/posets.hpp"
#include "dsym/qsym.hpp"

#include <algorithm>
#include <random>

namespace dsym {

namespace {

constexpr int kBruteMax = 6;

class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }

    template <typename A, typename B>
    void equal(const A& got, const B& want, const std::string& what) {
        ++r_.checks;
        if (got == want) return;
        if (r_.failures++ == 0) r_.first_failure = what;
    }
    void check(bool ok, const std::string& what) { equal(ok, true, what); }

    SuiteResult done() { return r_; }

private:
    SuiteResult r_;
};

Polynomial random_homogeneous(int n, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Term> terms;
    for (const auto& c : weak_compositions(degree, n)) {
        if (rng() % 3 != 0) continue;
        terms.push_back({Monomial(std::span<const int>(c.parts)), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(n, std::move(terms));
}

Polynomial monomial_of(const WeakComposition& c) {
    return Polynomial::monomial(c.length(), std::span<const int>(c.parts), 1);
}

SuiteResult monomial_suite(int max_n) {
    Suite s("monomial");
    for (int n = 2; n <= std::min(max_n, kBruteMax); ++n)
        for (const auto& c : weak_compositions(n - 1, n))
            s.equal(ds_bruteforce(monomial_of(c)).constant_value(), Rational(ds_monomial(c)),
                    "x^" + to_string(c));
    return s.done();
}

SuiteResult qsym_m_suite(int max_n) {
    Suite s("qsym-M");
    for (int n = 2; n <= max_n; ++n)
        for (const auto& alpha : compositions(n - 1)) {
            const auto e = QSymExpansion::single(Basis::M, alpha);
            const auto phi = phi_eulerian(e, n);
            for (int m = alpha.length(); m <= n; ++m) {
                const Rational closed = ds_M_closed(alpha, m, n);
                const std::string what = "M" + to_string(alpha) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                s.equal(ds_qsym(e, m, n), closed, what);
                if (m < n) s.equal(phi.h[static_cast<std::size_t>(m)], closed, what + " phi");
                if (n <= kBruteMax - 1) s.equal(ds_bruteforce(monomial_qsym(alpha, m, n)).constant_value(), closed, what);
            }
        }
    return s.done();
}

SuiteResult qsym_f_suite(int max_n) {
    Suite s("qsym-F");
    for (int n = 2; n <= max_n; ++n)
        for (const auto& gamma : compositions(n - 1))
            for (int m = 1; m <= n; ++m) {
                const Rational want = m == gamma.length() ? 1 : 0;
                const std::string what = "F" + to_string(gamma) + " m=" + std::to_string(m);
                s.equal(ds_F_closed(gamma, m, n), want, what);
                s.equal(ds_qsym(QSymExpansion::single(Basis::F, gamma), m, n), want, what);
                if (n <= kBruteMax - 1) s.equal(ds_scalar(fundamental_qsym(gamma, m, n)), want, what);
            }
    return s.done();
}

SuiteResult decomposition_suite(int max_n) {
    Suite s("decompose");
    std::mt19937_64 rng(20240101);
    for (int n = 2; n <= std::min(max_n, kMaxKnN); ++n) {
        const auto cache = get_kn_cache(n);
        s.equal(cache->rank() + catalan_number(n - 1), binomial(2 * n - 2, n - 1), "rank n=" + std::to_string(n));
        for (int trial = 0; trial < 20; ++trial) {
            const Polynomial f = random_homogeneous(n, n - 1, rng);
            const auto d = decompose(f, *cache);
            const std::string what = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
            s.check(d.g + d.h == f, what + " sum");
            s.equal(d.scalar, ds_scalar(f), what + " scalar");
            if (n <= kBruteMax - 1) s.equal(ds_bruteforce(d.h), Polynomial(n), what + " h");
        }
    }
    return s.done();
}

SuiteResult normalize_suite(int max_n) {
    Suite s("normalize");
    for (int n = 1; n <= max_n; ++n)
        for (const auto& c : weak_compositions(n - 1, n)) {
            const auto out = normalize_moves(c);
            const auto ps = psums(out);
            s.check(std::all_of(ps.begin(), ps.end(), [](int p) { return p == 0 || p == -1; }), to_string(c));
            s.equal(s_set(out), s_set(c), to_string(c));
            if (n <= kBruteMax - 1)
                s.equal(ds_bruteforce(monomial_of(out)), ds_bruteforce(monomial_of(c)), to_string(c));
        }
    return s.done();
}

SuiteResult catalan_suite(int max_n) {
    Suite s("catalan");
    for (int n = 1; n <= std::max(max_n, 12); ++n) {
        const auto cats = catalan_compositions(n);
        s.equal(BigInt(static_cast<long>(cats.size())), catalan_number(n - 1), "count n=" + std::to_string(n));
        if (n > max_n) continue;
        const BigInt anti = n % 2 ? 1 : -1;
        for (const auto& c : cats) {
            s.equal(ds_monomial(c), BigInt(1), to_string(c));
            WeakComposition r{std::vector<int>(c.parts.rbegin(), c.parts.rend())};
            s.check(is_anti_catalan(r), to_string(r));
            s.equal(ds_monomial(r), anti, to_string(r));
        }
    }
    return s.done();
}

SuiteResult poset_suite(int max_n) {
    Suite s("posets");
    s.equal(syt_descent_histogram(Composition{2, 1}), std::vector<long long>{0, 2, 0}, "syt (2,1)");
    for (int n = 2; n <= std::min(max_n, 7); ++n)
        for (const auto& lambda : partitions(n - 1)) {
            const auto p = young_diagram_poset(lambda);
            const auto e = kpw_expansion(p);
            for (int m = 1; m <= n; ++m) {
                const std::string what = "P" + to_string(lambda) + " m=" + std::to_string(m);
                const Rational v = ds_kpw(p, m, n);
                s.equal(ds_qsym(e, m, n), v, what);
                if (n <= kBruteMax - 1) s.equal(ds_scalar(to_polynomial(e, m, n)), v, what);
            }
        }
    return s.done();
}

SuiteResult powersum_suite(int max_n) {
    Suite s("powersum");
    for (int n = 2; n <= max_n; ++n)
        for (const auto& lambda : partitions(n - 1))
            for (int m = 1; m <= n; ++m) {
                const std::string what = "p" + to_string(lambda) + " m=" + std::to_string(m);
                const Rational closed = ds_powersum(lambda, m, n);
                if (n <= kBruteMax - 1) s.equal(ds_bruteforce(power_sum(lambda, m, n)).constant_value(), closed, what);
                s.equal(ds_scalar(power_sum(lambda, m, n)), closed, what);
            }
    return s.done();
}

SuiteResult binomial_suite() {
    Suite s("binomial");
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m)
            for (int l = 1; l <= m; ++l) {
                BigInt lhs = 0;
                for (int i = 1; i <= m; ++i) {
                    const BigInt t = binomial(n - 1, i - 1) * binomial(m - i, l - 1);
                    lhs += (i - 1) % 2 ? BigInt(-t) : t;
                }
                const BigInt mag = binomial(n - 1 - l, m - l);
                s.equal(lhs, (m - l) % 2 ? BigInt(-mag) : mag,
                        "n=" + std::to_string(n) + " m=" + std::to_string(m) + " l=" + std::to_string(l));
            }
    return s.done();
}

SuiteResult volume_suite(int max_n) {
    Suite s("volume");
    s.equal(volume_permutahedron(std::vector<Rational>{2, 1, 0}), Rational(3), "(2,1,0)");
    // The regular permutahedron with vertex (n-1,...,0) has volume n^{n-2}.
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
        std::vector<Rational> a;
        for (int i = n - 1; i >= 0; --i) a.emplace_back(i);
        BigInt want;
        mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
        s.equal(volume_permutahedron(a), Rational(want), "regular n=" + std::to_string(n));
    }
    return s.done();
}

} // namespace

std::vector<SuiteResult> run_selftest(int max_n, const std::function<void(const SuiteResult&)>& on_done) {
    if (max_n < 2) throw PreconditionError("selftest: max-n must be at least 2");
    std::vector<std::function<SuiteResult()>> suites = {
        [&] { return binomial_suite(); },         [&] { return catalan_suite(max_n); },
        [&] { return monomial_suite(max_n); },    [&] { return normalize_suite(max_n); },
        [&] { return qsym_m_suite(max_n); },      [&] { return qsym_f_suite(max_n); },
        [&] { return powersum_suite(max_n); },    [&] { return poset_suite(max_n); },
        [&] { return decomposition_suite(max_n); }, [&] { return volume_suite(max_n); },
    };
    std::vector<SuiteResult> out;
    for (const auto& run : suites) {
        out.push_back(run());
        if (on_done) on_done(out.back());
    }
    return out;
}

} // namespace dsym
