#include "stableset/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <future>
#include <random>
#include <string>
#include <thread>

#include "stableset/errors.hpp"

namespace stableset {

namespace {

// Plain boolean matrices: the oracle deliberately avoids the bitset
// relation code it is meant to check.
using Matrix = std::vector<std::vector<bool>>;
using Mask = std::uint64_t;

Matrix to_matrix(const DecisionProblem& p) {
    const std::size_t n = p.size();
    Matrix m(n, std::vector<bool>(n, false));
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) m[x][y] = p.rel().test(x, y);
    }
    return m;
}

Matrix strict_part(const Matrix& r) {
    const std::size_t n = r.size();
    Matrix p(n, std::vector<bool>(n, false));
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) p[x][y] = r[x][y] && !r[y][x];
    }
    return p;
}

// Chains of length >= 1, found by a depth-first walk from every start.
Matrix chain_closure(const Matrix& r) {
    const std::size_t n = r.size();
    Matrix reach(n, std::vector<bool>(n, false));
    for (AltId start = 0; start < n; ++start) {
        std::vector<AltId> todo;
        for (AltId y = 0; y < n; ++y) {
            if (r[start][y] && !reach[start][y]) {
                reach[start][y] = true;
                todo.push_back(y);
            }
        }
        while (!todo.empty()) {
            const AltId z = todo.back();
            todo.pop_back();
            for (AltId y = 0; y < n; ++y) {
                if (r[z][y] && !reach[start][y]) {
                    reach[start][y] = true;
                    todo.push_back(y);
                }
            }
        }
    }
    return reach;
}

// Literal omega-tilde dominance: x ~ z, z P(R) w, w ~ y, where ~ is
// equipotence (equality or mutual reachability in the closure of P(R)).
Matrix literal_extended(const Matrix& strict, const Matrix& reach) {
    const std::size_t n = strict.size();
    const auto equipotent = [&](AltId a, AltId b) {
        return a == b || (reach[a][b] && reach[b][a]);
    };
    Matrix out(n, std::vector<bool>(n, false));
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            for (AltId z = 0; z < n && !out[x][y]; ++z) {
                if (!equipotent(x, z)) continue;
                for (AltId w = 0; w < n; ++w) {
                    if (strict[z][w] && equipotent(w, y)) {
                        out[x][y] = true;
                        break;
                    }
                }
            }
        }
    }
    return out;
}

bool in(Mask v, AltId x) { return (v >> x & 1u) != 0; }

// Internal: no q-edge between distinct members; external: each outsider
// is q-dominated by a member.
bool stable_under(const Matrix& q, Mask v, std::size_t n) {
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (x != y && in(v, x) && in(v, y) && q[x][y]) return false;
        }
    }
    for (AltId y = 0; y < n; ++y) {
        if (in(v, y)) continue;
        bool dominated = false;
        for (AltId x = 0; x < n && !dominated; ++x) dominated = in(v, x) && q[x][y];
        if (!dominated) return false;
    }
    return true;
}

bool socially_stable(const Matrix& strict, const Matrix& reach, Mask v, std::size_t n,
                     SociallyInterp interp) {
    Matrix q(n, std::vector<bool>(n, false));
    if (interp == SociallyInterp::RestrictClosure) {
        for (AltId x = 0; x < n; ++x) {
            for (AltId y = 0; y < n; ++y) q[x][y] = in(v, x) && in(v, y) && reach[x][y];
        }
    } else {
        Matrix restricted(n, std::vector<bool>(n, false));
        for (AltId x = 0; x < n; ++x) {
            for (AltId y = 0; y < n; ++y) {
                restricted[x][y] = in(v, x) && in(v, y) && strict[x][y];
            }
        }
        q = chain_closure(restricted);
    }
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (in(v, x) && in(v, y) && q[x][y] && !q[y][x]) return false;
        }
    }
    for (AltId y = 0; y < n; ++y) {
        if (in(v, y)) continue;
        bool dominated = false;
        for (AltId x = 0; x < n && !dominated; ++x) dominated = in(v, x) && strict[x][y];
        if (!dominated) return false;
    }
    return true;
}

bool m_stable(const Matrix& reach, Mask v, std::size_t n) {
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (in(v, x) && in(v, y) && reach[x][y] && !reach[y][x]) return false;
        }
    }
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (in(v, x) && !in(v, y) && reach[y][x]) return false;
        }
    }
    return true;
}

bool w_stable(const Matrix& reach, Mask v, std::size_t n) {
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (x != y && in(v, x) && in(v, y) && reach[x][y]) return false;
        }
    }
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (in(v, x) && !in(v, y) && reach[y][x] && !reach[x][y]) return false;
        }
    }
    return true;
}

std::size_t oracle_limit(const DecisionProblem& p, std::size_t max_n) {
    const std::size_t limit = resolve_max_n(max_n);
    if (p.size() > limit) throw OracleLimitExceeded(p.size(), limit);
    return limit;
}

std::vector<AltSet> sorted_difference(const std::vector<AltSet>& a, const std::vector<AltSet>& b) {
    std::vector<AltSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

constexpr std::array<double, 3> kDensities{0.2, 0.5, 0.8};

}  // namespace

std::string_view to_string(Concept kind) {
    switch (kind) {
        case Concept::Vnm: return "VNM";
        case Concept::Generalized: return "GENERALIZED";
        case Concept::Socially: return "SOCIALLY";
        case Concept::MStable: return "M_STABLE";
        case Concept::WStable: return "W_STABLE";
        case Concept::Extended: return "EXTENDED";
    }
    return "VNM";
}

Concept concept_from_string(std::string_view name) {
    const std::string tag = upper(name);
    if (tag == "VNM") return Concept::Vnm;
    if (tag == "GENERALIZED" || tag == "GSS") return Concept::Generalized;
    if (tag == "SOCIALLY" || tag == "SSS") return Concept::Socially;
    if (tag == "M_STABLE" || tag == "MSS") return Concept::MStable;
    if (tag == "W_STABLE" || tag == "WSS") return Concept::WStable;
    if (tag == "EXTENDED" || tag == "ESS") return Concept::Extended;
    throw Error("unknown solution concept '" + std::string(name) + "'");
}

std::vector<AltSet> enumerate_solutions(const DecisionProblem& p, Concept kind,
                                        SociallyInterp interp, std::size_t max_n) {
    oracle_limit(p, max_n);
    const std::size_t n = p.size();
    const Matrix strict = strict_part(to_matrix(p));
    const Matrix reach = chain_closure(strict);
    const Matrix extended = kind == Concept::Extended ? literal_extended(strict, reach) : Matrix{};

    std::vector<AltSet> out;
    const Mask last = (Mask{1} << n) - 1;
    for (Mask v = 1; v <= last; ++v) {
        bool passes = false;
        switch (kind) {
            case Concept::Vnm: passes = stable_under(strict, v, n); break;
            case Concept::Generalized: passes = stable_under(reach, v, n); break;
            case Concept::Socially: passes = socially_stable(strict, reach, v, n, interp); break;
            case Concept::MStable: passes = m_stable(reach, v, n); break;
            case Concept::WStable: passes = w_stable(reach, v, n); break;
            case Concept::Extended: passes = stable_under(extended, v, n); break;
        }
        if (passes) out.push_back(AltSet::from_mask(n, v));
    }
    return out;
}

AltSet gocha_bruteforce(const DecisionProblem& p, std::size_t max_n) {
    oracle_limit(p, max_n);
    const std::size_t n = p.size();
    const Matrix strict = strict_part(to_matrix(p));
    const Mask last = (Mask{1} << n) - 1;

    // D is undominated when no outsider strictly dominates a member.
    std::vector<Mask> undominated;
    for (Mask d = 1; d <= last; ++d) {
        bool ok = true;
        for (AltId x = 0; x < n && ok; ++x) {
            if (!in(d, x)) continue;
            for (AltId y = 0; y < n && ok; ++y) ok = in(d, y) || !strict[y][x];
        }
        if (ok) undominated.push_back(d);
    }
    Mask gocha = 0;
    for (Mask d : undominated) {
        const bool minimal = std::none_of(undominated.begin(), undominated.end(), [d](Mask e) {
            return e != d && (e & ~d) == 0;
        });
        if (minimal) gocha |= d;
    }
    return AltSet::from_mask(n, gocha);
}

DecisionProblem random_problem(std::size_t n, double density, std::uint64_t seed, bool tournament) {
    if (!(density >= 0.0 && density <= 1.0)) throw Error("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution coin(0.5);
    Rel r(n);
    for (AltId x = 0; x < n; ++x) {
        for (AltId y = 0; y < n; ++y) {
            if (x == y) continue;
            if (tournament) {
                if (x < y) coin(rng) ? r.set(x, y) : r.set(y, x);
            } else if (edge(rng)) {
                r.set(x, y);
            }
        }
    }
    return DecisionProblem(std::move(r));
}

std::vector<CorpusInstance> random_corpus(std::uint64_t seed, std::size_t digraphs,
                                          std::size_t max_digraph_n, std::size_t tournaments,
                                          std::size_t max_tournament_n) {
    std::vector<CorpusInstance> corpus;
    corpus.reserve(digraphs + tournaments);
    for (std::size_t i = 0; i < digraphs; ++i) {
        const std::uint64_t s = seed + i;
        const std::size_t n = 1 + static_cast<std::size_t>(s % max_digraph_n);
        const double density = kDensities[i % kDensities.size()];
        corpus.push_back({s, density, false, random_problem(n, density, s, false)});
    }
    for (std::size_t i = 0; i < tournaments; ++i) {
        const std::uint64_t s = seed + digraphs + i;
        const std::size_t n = 1 + static_cast<std::size_t>(s % max_tournament_n);
        corpus.push_back({s, 0.5, true, random_problem(n, 0.5, s, true)});
    }
    return corpus;
}

SolutionFamily constructive_family(const DecisionProblem& p, Concept kind,
                                   SociallyInterp interp, std::size_t max_n) {
    switch (kind) {
        case Concept::Vnm: return vnm_stable_sets(p, max_n);
        case Concept::Generalized: return generalized_stable_sets(p);
        case Concept::Socially: return socially_stable_sets(p, interp, max_n);
        case Concept::MStable: return m_stable_sets(p);
        case Concept::WStable: return w_stable_sets(p);
        case Concept::Extended: return extended_stable_sets(p);
    }
    return {};
}

VerificationReport cross_verify(const DecisionProblem& p, Concept kind, SociallyInterp interp,
                                std::size_t max_n) {
    const std::size_t limit = oracle_limit(p, max_n);
    VerificationReport report;
    report.kind = kind;
    if (kind == Concept::Socially) report.interp = interp;

    const auto expected = enumerate_solutions(p, kind, interp, limit);
    const auto produced = constructive_family(p, kind, interp, limit).sorted_members();
    report.oracle_count = expected.size();
    report.constructive_count = produced.size();
    report.oracle_only = sorted_difference(expected, produced);
    report.constructive_only = sorted_difference(produced, expected);
    return report;
}

TrialSummary run_trials(Concept kind, const OracleConfig& config, SociallyInterp interp) {
    if (config.max_n == 0) throw Error("max_n must be at least 1");
    const std::size_t limit = resolve_max_n(config.max_n);
    const std::size_t trials = config.instance_count;

    const auto run_one = [&](std::size_t i) -> std::optional<TrialFailure> {
        const std::uint64_t seed = config.seed + i;
        const std::size_t n = 1 + static_cast<std::size_t>(seed % limit);
        const bool tournament = i % 4 == 3;
        const double density = kDensities[i % kDensities.size()];
        const DecisionProblem p = random_problem(n, density, seed, tournament);
        VerificationReport report = cross_verify(p, kind, interp, limit);
        if (report.pass()) return std::nullopt;
        return TrialFailure{seed, n, p.rel().to_string(), std::move(report)};
    };

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
    std::vector<std::future<std::vector<std::pair<std::size_t, TrialFailure>>>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            std::vector<std::pair<std::size_t, TrialFailure>> local;
            for (std::size_t i = w; i < trials; i += workers) {
                if (auto failure = run_one(i)) local.emplace_back(i, std::move(*failure));
            }
            return local;
        }));
    }

    TrialSummary summary;
    summary.kind = kind;
    summary.trials = trials;
    std::vector<std::pair<std::size_t, TrialFailure>> failures;
    for (auto& job : jobs) {
        for (auto& f : job.get()) failures.push_back(std::move(f));
    }
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, f] : failures) summary.failures.push_back(std::move(f));
    summary.passed = trials - summary.failures.size();
    return summary;
}

}  // namespace stableset
