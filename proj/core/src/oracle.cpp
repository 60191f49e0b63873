#include "dcolor/oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

namespace dcolor {

ExactValue harmonic(std::uint64_t k) {
    mpq_class sum(0);
    for (std::uint64_t i = 1; i <= k; ++i) {
        sum += mpq_class(1, static_cast<unsigned long>(i));
    }
    return ExactValue(std::move(sum));
}

ExactValue expected_draws_to_collect(std::uint64_t palette_size, std::uint64_t k) {
    if (k < 1 || k > palette_size) {
        throw OracleError("coupon target k must satisfy 1 <= k <= D");
    }
    mpq_class sum(0);
    for (std::uint64_t i = 0; i < k; ++i) {
        sum += mpq_class(static_cast<unsigned long>(palette_size),
                         static_cast<unsigned long>(palette_size - i));
    }
    return ExactValue(std::move(sum));
}

namespace {

// Colours as 0..D-1 internally.
using Labels = std::vector<std::uint8_t>;

std::uint64_t checked_space(std::size_t n, Color palette_size, std::uint64_t limit) {
    if (palette_size > 255) {
        throw OracleError("oracle supports at most 255 colours");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > limit / palette_size) {
            throw OracleError("state space D^n exceeds the oracle guard of " + std::to_string(limit));
        }
        total *= palette_size;
    }
    return total;
}

std::uint64_t encode(const Labels& c, Color palette_size) {
    std::uint64_t key = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        key = key * palette_size + *it;
    }
    return key;
}

void decode(std::uint64_t key, Color palette_size, Labels& out) {
    for (auto& x : out) {
        x = static_cast<std::uint8_t>(key % palette_size);
        key /= palette_size;
    }
}

// Relabels colours by order of first appearance; returns the number of
// distinct colours.
std::size_t canonicalize(Labels& c, Color palette_size) {
    std::vector<std::uint8_t> map(palette_size, 0xFF);
    std::uint8_t next = 0;
    for (auto& x : c) {
        if (map[x] == 0xFF) {
            map[x] = next++;
        }
        x = map[x];
    }
    return next;
}

bool conflicted(const Graph& g, const Labels& c, Vertex v) {
    for (Vertex u : g.neighbors(v)) {
        if (c[u] == c[v]) {
            return true;
        }
    }
    return false;
}

bool proper(const Graph& g, const Labels& c) {
    for (Vertex v = 0; v < g.size(); ++v) {
        if (conflicted(g, c, v)) {
            return false;
        }
    }
    return true;
}

mpz_class falling_factorial(unsigned long d, std::size_t k) {
    mpz_class out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        out *= d - i;
    }
    return out;
}

struct WeightedStart {
    Labels colors;
    mpq_class weight;
};

// Canonical start colourings with their probabilities.
std::vector<WeightedStart> start_distribution(const Graph& g, Color palette_size,
                                              const StartPolicy& start, std::uint64_t guard) {
    const std::size_t n = g.size();
    const std::uint64_t total = checked_space(n, palette_size, guard);
    std::vector<WeightedStart> out;
    if (const auto* fixed = std::get_if<Coloring>(&start)) {
        if (fixed->size() != n || fixed->palette_size() != palette_size) {
            throw OracleError("start colouring does not match graph size and palette");
        }
        Labels c(n);
        for (Vertex v = 0; v < n; ++v) {
            c[v] = static_cast<std::uint8_t>((*fixed)[v] - 1);
        }
        canonicalize(c, palette_size);
        out.push_back({std::move(c), mpq_class(1)});
        return out;
    }
    // Restricted-growth strings with at most D blocks; each stands for
    // D!/(D-k)! colourings.
    Labels c(n, 0);
    const mpz_class denom(std::to_string(total));
    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            mpq_class w(falling_factorial(palette_size, used), denom);
            w.canonicalize();
            out.push_back({c, std::move(w)});
            return;
        }
        const std::size_t top = std::min<std::size_t>(used + 1, palette_size);
        for (std::size_t x = 0; x < top; ++x) {
            c[i] = static_cast<std::uint8_t>(x);
            self(self, i + 1, std::max(used, x + 1));
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Decentralized Coloring as an absorbing chain.

struct ChainState {
    std::uint64_t key;  // canonical colouring
    Vertex active;      // vertex being hammered by the mimic adversary; n = none
};

struct Transition {
    std::uint32_t target;
    std::uint64_t count;
};

struct Chain {
    std::vector<ChainState> states;
    std::vector<std::vector<Transition>> out;  // includes self loops
    std::vector<std::uint64_t> denominator;    // row probabilities are count/denominator
    std::unordered_map<std::uint64_t, std::uint32_t> index;
};

class ChainBuilder {
public:
    ChainBuilder(const Graph& g, Color palette_size, const DcOracleOrder& order)
        : g_(g), d_(palette_size), n_(g.size()) {
        if (const auto* mimic = std::get_if<MimicPersistent>(&order)) {
            mimic_ = true;
            lowest_ = mimic->mode == SelectionMode::LowestId;
        }
    }

    // Returns the state index, or -1 when the colouring is proper.
    long intern(Labels c, Vertex active) {
        if (proper(g_, c)) {
            return -1;
        }
        canonicalize(c, d_);
        if (active != n_ && !conflicted(g_, c, active)) {
            active = static_cast<Vertex>(n_);
        }
        const std::uint64_t key = encode(c, d_);
        const std::uint64_t id = key * (n_ + 1) + active;
        auto [it, inserted] = chain_.index.try_emplace(id, static_cast<std::uint32_t>(chain_.states.size()));
        if (inserted) {
            chain_.states.push_back({key, active});
            pending_.push_back(it->second);
        }
        return it->second;
    }

    Chain build() {
        Labels c(n_);
        Labels next(n_);
        while (!pending_.empty()) {
            const std::uint32_t s = pending_.back();
            pending_.pop_back();
            const ChainState state = chain_.states[s];
            decode(state.key, d_, c);

            std::vector<Vertex> choices;
            if (state.active != n_) {
                choices.push_back(state.active);
            } else {
                for (Vertex v = 0; v < n_; ++v) {
                    if (conflicted(g_, c, v)) {
                        choices.push_back(v);
                        if (lowest_) {
                            break;
                        }
                    }
                }
            }

            std::map<std::uint32_t, std::uint64_t> targets;
            for (Vertex v : choices) {
                for (Color x = 0; x < d_; ++x) {
                    next = c;
                    next[v] = static_cast<std::uint8_t>(x);
                    const long t = intern(next, mimic_ ? v : static_cast<Vertex>(n_));
                    if (t >= 0) {
                        ++targets[static_cast<std::uint32_t>(t)];
                    }
                }
            }
            if (chain_.out.size() < chain_.states.size()) {
                chain_.out.resize(chain_.states.size());
                chain_.denominator.resize(chain_.states.size());
            }
            auto& row = chain_.out[s];
            for (const auto& [t, cnt] : targets) {
                row.push_back({t, cnt});
            }
            chain_.denominator[s] = static_cast<std::uint64_t>(choices.size()) * d_;
        }
        chain_.out.resize(chain_.states.size());
        chain_.denominator.resize(chain_.states.size());
        return std::move(chain_);
    }

private:
    const Graph& g_;
    Color d_;
    std::size_t n_;
    bool mimic_ = false;
    bool lowest_ = false;
    Chain chain_;
    std::vector<std::uint32_t> pending_;
};

void require_absorbing(const Chain& chain) {
    const std::size_t m = chain.states.size();
    std::vector<std::vector<std::uint32_t>> reverse(m);
    std::vector<char> reaches(m, 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < m; ++s) {
        std::uint64_t inside = 0;
        for (const auto& t : chain.out[s]) {
            reverse[t.target].push_back(s);
            inside += t.count;
        }
        if (inside < chain.denominator[s]) {
            reaches[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        for (std::uint32_t p : reverse[s]) {
            if (!reaches[p]) {
                reaches[p] = 1;
                stack.push_back(p);
            }
        }
    }
    if (std::find(reaches.begin(), reaches.end(), 0) != reaches.end()) {
        throw OracleError("some reachable colouring can never become proper (palette too small?)");
    }
}

// (den * I - counts) x = den, row by row. Diagonal pivots are safe: the
// matrix is a nonsingular M-matrix and so are all its Schur complements.
std::vector<mpq_class> solve_exact(const Chain& chain) {
    const std::size_t m = chain.states.size();
    std::vector<std::map<std::uint32_t, mpq_class>> rows(m);
    std::vector<mpq_class> rhs(m);
    std::vector<std::set<std::uint32_t>> cols(m);
    for (std::uint32_t s = 0; s < m; ++s) {
        const auto den = static_cast<unsigned long>(chain.denominator[s]);
        rows[s][s] = den;
        for (const auto& t : chain.out[s]) {
            rows[s][t.target] -= static_cast<unsigned long>(t.count);
        }
        rhs[s] = den;
        for (const auto& [j, a] : rows[s]) {
            cols[j].insert(s);
        }
    }

    std::vector<char> done(m, 0);
    std::vector<std::uint32_t> sequence;
    sequence.reserve(m);
    for (std::size_t step = 0; step < m; ++step) {
        std::uint32_t pivot = 0;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::uint32_t j = 0; j < m; ++j) {
            if (done[j]) {
                continue;
            }
            const std::size_t cost = (rows[j].size() - 1) * (cols[j].size() - 1);
            if (cost < best) {
                best = cost;
                pivot = j;
                if (cost == 0) {
                    break;
                }
            }
        }
        done[pivot] = 1;
        sequence.push_back(pivot);
        const auto& prow = rows[pivot];
        const mpq_class diag = prow.at(pivot);
        for (const auto& [k, a] : prow) {
            cols[k].erase(pivot);
        }
        const std::vector<std::uint32_t> targets(cols[pivot].begin(), cols[pivot].end());
        for (std::uint32_t i : targets) {
            auto& row = rows[i];
            const mpq_class factor = row.at(pivot) / diag;
            for (const auto& [k, a] : prow) {
                if (k == pivot) {
                    continue;
                }
                auto [it, inserted] = row.try_emplace(k, 0);
                it->second -= factor * a;
                if (inserted) {
                    cols[k].insert(i);
                } else if (it->second == 0) {
                    row.erase(it);
                    cols[k].erase(i);
                }
            }
            row.erase(pivot);
            rhs[i] -= factor * rhs[pivot];
        }
        cols[pivot].clear();
    }

    std::vector<mpq_class> x(m);
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
        const std::uint32_t j = *it;
        mpq_class acc = rhs[j];
        for (const auto& [k, a] : rows[j]) {
            if (k != j) {
                acc -= a * x[k];
            }
        }
        x[j] = acc / rows[j].at(j);
    }
    return x;
}

struct FloatSolution {
    std::vector<mpq_class> values;
    double error_bound;
};

// Double-precision sparse LU, refined against long-double residuals. With
// N = (I - P)^-1 >= 0 and N 1 = E, the error e = E - x obeys
// |e| <= ||r|| (||x|| + ||e||), which gives the certificate below.
FloatSolution solve_certified(const Chain& chain, double budget) {
    const std::size_t m = chain.states.size();
    using Sparse = Eigen::SparseMatrix<double>;
    std::vector<Eigen::Triplet<double>> triplets;
    std::size_t widest = 1;
    for (std::uint32_t s = 0; s < m; ++s) {
        const auto den = static_cast<double>(chain.denominator[s]);
        triplets.emplace_back(s, s, 1.0);
        for (const auto& t : chain.out[s]) {
            triplets.emplace_back(s, t.target, -static_cast<double>(t.count) / den);
        }
        widest = std::max(widest, chain.out[s].size() + 1);
    }
    Sparse a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();
    Eigen::SparseLU<Sparse> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) {
        throw OracleError("sparse factorisation of the chain failed");
    }

    std::vector<long double> x(m, 0.0L);
    Eigen::VectorXd r = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m));
    double bound = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < 12; ++pass) {
        Eigen::VectorXd dx = lu.solve(r);
        for (std::size_t s = 0; s < m; ++s) {
            x[s] += static_cast<long double>(dx[static_cast<Eigen::Index>(s)]);
        }
        long double rmax = 0.0L;
        long double xmax = 0.0L;
        for (std::uint32_t s = 0; s < m; ++s) {
            const auto den = static_cast<long double>(chain.denominator[s]);
            long double px = 0.0L;
            for (const auto& t : chain.out[s]) {
                px += static_cast<long double>(t.count) * x[t.target];
            }
            const long double res = 1.0L - (x[s] - px / den);
            r[static_cast<Eigen::Index>(s)] = static_cast<double>(res);
            rmax = std::max(rmax, std::fabs(res));
            xmax = std::max(xmax, std::fabs(x[s]));
        }
        // Slack for rounding inside the residual evaluation itself.
        rmax += 4.0L * static_cast<long double>(widest) * std::numeric_limits<long double>::epsilon() *
                (1.0L + xmax);
        if (rmax < 0.5L) {
            bound = static_cast<double>(rmax * xmax / (1.0L - rmax));
            if (bound <= budget) {
                break;
            }
        }
    }
    if (!(bound <= budget)) {
        throw OracleError("certified solve could not reach the error budget");
    }
    FloatSolution out{std::vector<mpq_class>(m), bound};
    for (std::size_t s = 0; s < m; ++s) {
        const double hi = static_cast<double>(x[s]);
        const double lo = static_cast<double>(x[s] - hi);
        out.values[s] = mpq_class(hi) + mpq_class(lo);
    }
    return out;
}

}  // namespace

ExactValue exact_expected_recolorings_dc(const Graph& g, Color palette_size, const StartPolicy& start,
                                         const DcOracleOrder& order, const OracleLimits& limits,
                                         ChainReport* report) {
    const auto starts = start_distribution(g, palette_size, start, limits.max_colorings);
    ChainBuilder builder(g, palette_size, order);
    std::vector<long> initial;
    initial.reserve(starts.size());
    for (const auto& s : starts) {
        initial.push_back(builder.intern(s.colors, static_cast<Vertex>(g.size())));
    }
    const Chain chain = builder.build();
    require_absorbing(chain);

    std::vector<mpq_class> values;
    double bound = 0.0;
    const bool exact = chain.states.size() <= limits.exact_state_limit;
    if (exact) {
        values = solve_exact(chain);
    } else {
        auto solution = solve_certified(chain, limits.error_budget);
        values = std::move(solution.values);
        bound = solution.error_bound;
    }
    if (report != nullptr) {
        *report = ChainReport{chain.states.size(), exact, bound};
    }

    mpq_class expected(0);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (initial[i] >= 0) {
            expected += starts[i].weight * values[static_cast<std::size_t>(initial[i])];
        }
    }
    return ExactValue(std::move(expected), bound);
}

// ---------------------------------------------------------------------------
// Persistent process by order enumeration.

namespace {

class PersistentEnumerator {
public:
    PersistentEnumerator(const Graph& g, Color palette_size) : g_(g), d_(palette_size) {}

    // Expected remaining draws when the visit has reached position pos of order.
    mpq_class expected(Labels& c, const std::vector<Vertex>& order, std::size_t pos) const {
        for (std::size_t i = pos; i < order.size(); ++i) {
            const Vertex v = order[i];
            if (!conflicted(g_, c, v)) {
                continue;
            }
            std::vector<char> used(d_, 0);
            for (Vertex u : g_.neighbors(v)) {
                used[c[u]] = 1;
            }
            std::vector<std::uint8_t> free;
            for (Color x = 0; x < d_; ++x) {
                if (!used[x]) {
                    free.push_back(static_cast<std::uint8_t>(x));
                }
            }
            if (free.empty()) {
                throw OracleError("a selected vertex has no free colour; the persistent run never ends");
            }
            const auto f = static_cast<unsigned long>(free.size());
            mpq_class branches(0);
            const std::uint8_t saved = c[v];
            for (std::uint8_t x : free) {
                c[v] = x;
                branches += expected(c, order, i + 1);
            }
            c[v] = saved;
            mpq_class out(static_cast<unsigned long>(d_), f);
            out += branches / f;
            return out;
        }
        return 0;
    }

private:
    const Graph& g_;
    Color d_;
};

}  // namespace

ExactValue exact_expected_recolorings_persistent(const Graph& g, Color palette_size,
                                                 const StartPolicy& start,
                                                 const PersistentOracleOrder& order,
                                                 const OracleLimits& limits) {
    const std::size_t n = g.size();
    if (n > limits.max_persistent_vertices) {
        throw OracleError("persistent oracle supports at most " +
                          std::to_string(limits.max_persistent_vertices) + " vertices");
    }
    auto starts = start_distribution(g, palette_size, start, limits.max_colorings);

    std::vector<std::vector<Vertex>> orders;
    if (const auto* fixed = std::get_if<FixedPermutation>(&order)) {
        if (!is_permutation_of_vertices(fixed->order, n)) {
            throw OracleError("fixed order is not a permutation of 0..n-1");
        }
        orders.push_back(fixed->order);
    } else {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        do {
            orders.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const PersistentEnumerator enumerator(g, palette_size);
    mpq_class total(0);
    for (auto& s : starts) {
        mpq_class sum(0);
        for (const auto& perm : orders) {
            sum += enumerator.expected(s.colors, perm, 0);
        }
        total += s.weight * sum / static_cast<unsigned long>(orders.size());
    }
    return ExactValue(std::move(total));
}

// ---------------------------------------------------------------------------
// One-step drifts.

namespace {

void require_conflicted(const Graph& g, const Coloring& c, Vertex v) {
    if (c.size() != g.size()) {
        throw OracleError("colouring does not match graph size");
    }
    if (v >= g.size() || !is_conflicted(g, c, v)) {
        throw OracleError("drift is only defined at a conflicted vertex");
    }
}

}  // namespace

ExactValue exact_expected_phi_delta(const Graph& g, const Coloring& c, Vertex v) {
    require_conflicted(g, c, v);
    const auto before = static_cast<long>(monochromatic_component_count(g, c));
    Coloring next = c;
    long sum = 0;
    for (Color x = 1; x <= c.palette_size(); ++x) {
        next.set(v, x);
        sum += static_cast<long>(monochromatic_component_count(g, next)) - before;
    }
    return ExactValue(sum, c.palette_size());
}

ConflictDeltas exact_expected_conflict_deltas(const Graph& g, const Coloring& c, Vertex v) {
    require_conflicted(g, c, v);
    const std::array kinds{PotentialKind::MonochromaticComponents, PotentialKind::ConflictedVertices,
                           PotentialKind::ConflictedEdges};
    std::array<long, 3> before{};
    std::array<long, 3> sum{};
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        before[k] = static_cast<long>(potential(kinds[k], g, c));
    }
    Coloring next = c;
    for (Color x = 1; x <= c.palette_size(); ++x) {
        next.set(v, x);
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            sum[k] += static_cast<long>(potential(kinds[k], g, next)) - before[k];
        }
    }
    const Color d = c.palette_size();
    return ConflictDeltas{ExactValue(sum[0], d), ExactValue(sum[1], d), ExactValue(sum[2], d)};
}

bool verify_fig2_deltas(const Graph& g, const Coloring& c, Vertex v) {
    require_conflicted(g, c, v);
    if (c.palette_size() != 4) {
        return false;
    }
    const auto before = static_cast<long>(conflicted_vertices(g, c).size());
    Coloring next = c;
    std::vector<long> others;
    for (Color x = 1; x <= 4; ++x) {
        next.set(v, x);
        const long delta = static_cast<long>(conflicted_vertices(g, next).size()) - before;
        if (x == c[v]) {
            if (delta != 0) {
                return false;
            }
        } else {
            others.push_back(delta);
        }
    }
    std::sort(others.begin(), others.end());
    return others == std::vector<long>{-1, 1, 1};
}

}  // namespace dcolor
