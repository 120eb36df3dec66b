#include "gvm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace gvm {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneExists: return "none-exists";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

std::vector<Vertex> search_variable_order(const Graph& g) {
    std::vector<Vertex> order(g.order());
    std::vector<bool> support(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        order[v] = v;
        if (g.degree(v) < 2) continue;
        for (auto u : g.neighbors(v))
            if (g.degree(u) == 1) support[v] = true;
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (support[a] != support[b]) return static_cast<bool>(support[a]);
        return g.degree(a) > g.degree(b);
    });
    return order;
}

namespace {

constexpr std::uint64_t kMaxTableOrder = 1u << 12;
constexpr int kUnassigned = -1;

// Elements are encoded as their enumeration index; 0 is the identity.
struct Tables {
    int n = 0;
    std::vector<int> add;  // add[a * n + b]
    std::vector<int> neg;

    explicit Tables(const FiniteAbelianGroup& grp) {
        if (grp.order() > kMaxTableOrder)
            throw std::invalid_argument("oracle: group " + grp.spec() + " is too large for exhaustive search");
        n = static_cast<int>(grp.order());
        auto els = grp.elements();
        add.resize(static_cast<std::size_t>(n) * n);
        neg.resize(n);
        for (int a = 0; a < n; ++a) {
            neg[a] = static_cast<int>(grp.index_of(grp.neg(els[a])));
            for (int b = 0; b < n; ++b)
                add[static_cast<std::size_t>(a) * n + b] = static_cast<int>(grp.index_of(grp.add(els[a], els[b])));
        }
    }
    int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
    int minus(int a, int b) const { return plus(a, neg[b]); }
};

struct Shared {
    const Graph& g;
    const FiniteAbelianGroup& grp;
    const Tables& t;
    const SearchBudget& budget;
    std::vector<Vertex> order;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exceeded{false};
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    bool charge() {
        auto k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (k > budget.max_nodes) {
            exceeded = true;
            return false;
        }
        if (budget.max_seconds && (k & 0xFFF) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() > *budget.max_seconds) exceeded = true;
        }
        return !exceeded.load(std::memory_order_relaxed);
    }
};

class State {
public:
    State(Shared& sh, int mu) : sh_(sh), mu_(mu) {
        const auto n = sh.g.order();
        label_.assign(n, kUnassigned);
        rem_.resize(n);
        sum_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) rem_[v] = sh.g.degree(v);
    }

    int mu() const { return mu_; }
    const std::vector<int>& labels() const { return label_; }
    std::size_t trail_size() const { return trail_.size(); }

    /// Assigns and propagates; false on conflict (the caller undoes to a mark).
    bool assign(Vertex x, int a) {
        queue_.clear();
        queue_.emplace_back(x, a);
        return drain();
    }

    /// Initial checks for vertices whose neighborhoods are already decided.
    bool settle_initial() {
        queue_.clear();
        for (Vertex v = 0; v < sh_.g.order(); ++v)
            if (!check(v)) return false;
        return drain();
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto x = trail_.back();
            trail_.pop_back();
            const int a = label_[x];
            for (auto v : sh_.g.neighbors(x)) {
                ++rem_[v];
                sum_[v] = sh_.t.minus(sum_[v], a);
            }
            label_[x] = kUnassigned;
        }
    }

    std::optional<Vertex> next_branch() const {
        for (auto v : sh_.order)
            if (label_[v] == kUnassigned) return v;
        return std::nullopt;
    }

private:
    bool drain() {
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            auto [x, a] = queue_[qi];
            if (label_[x] != kUnassigned) {
                if (label_[x] != a) return false;
                continue;
            }
            if (!sh_.charge()) return false;
            label_[x] = a;
            trail_.push_back(x);
            for (auto v : sh_.g.neighbors(x)) {
                --rem_[v];
                sum_[v] = sh_.t.plus(sum_[v], a);
            }
            for (auto v : sh_.g.neighbors(x))
                if (!check(v)) return false;
        }
        return true;
    }

    bool check(Vertex v) {
        if (rem_[v] == 0) return sum_[v] == mu_;
        if (rem_[v] == 1 && sh_.budget.pruning) {
            const int need = sh_.t.minus(mu_, sum_[v]);
            if (need == 0) return false;
            for (auto u : sh_.g.neighbors(v))
                if (label_[u] == kUnassigned) {
                    queue_.emplace_back(u, need);
                    break;
                }
        }
        return true;
    }

    Shared& sh_;
    int mu_;
    std::vector<int> label_;
    std::vector<std::size_t> rem_;
    std::vector<int> sum_;
    std::vector<Vertex> trail_;
    std::vector<std::pair<Vertex, int>> queue_;
};

enum class Dfs { Found, Exhausted, Aborted };

Dfs dfs(Shared& sh, State& st, const std::atomic<std::size_t>* best, std::size_t task) {
    if (sh.exceeded || (best && best->load() < task)) return Dfs::Aborted;
    auto v = st.next_branch();
    if (!v) return Dfs::Found;
    for (int a = 1; a < sh.t.n; ++a) {
        auto mark = st.trail_size();
        if (st.assign(*v, a)) {
            auto r = dfs(sh, st, best, task);
            if (r != Dfs::Exhausted) return r;
        }
        st.undo(mark);
        if (sh.exceeded) return Dfs::Aborted;
    }
    return Dfs::Exhausted;
}

std::optional<State> prepare(Shared& sh, int mu, const std::vector<int>& fixed) {
    State st(sh, mu);
    for (Vertex v = 0; v < fixed.size(); ++v)
        if (fixed[v] != kUnassigned && !st.assign(v, fixed[v])) return std::nullopt;
    if (!st.settle_initial()) return std::nullopt;
    return st;
}

struct Encoded {
    std::vector<int> mus;
    std::vector<int> fixed;
};

Encoded encode_constraint(const Graph& g, const FiniteAbelianGroup& grp, const SearchConstraint& c) {
    Encoded e;
    auto enc = [&](const GroupElement& x, const char* what) {
        if (!grp.contains(x)) throw ContradictoryConstraint(std::string(what) + " is not an element of " + grp.spec());
        return static_cast<int>(grp.index_of(x));
    };
    if (c.mu)
        e.mus.push_back(enc(*c.mu, "required mu"));
    else
        for (int m = 0; m < static_cast<int>(grp.order()); ++m) e.mus.push_back(m);
    if (!c.fixed.empty()) {
        if (c.fixed.size() != g.order())
            throw ContradictoryConstraint("fixed labeling has " + std::to_string(c.fixed.size()) + " entries for " +
                                          std::to_string(g.order()) + " vertices");
        e.fixed.assign(g.order(), kUnassigned);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!c.fixed[v]) continue;
            e.fixed[v] = enc(*c.fixed[v], "fixed label");
            if (e.fixed[v] == 0) throw ContradictoryConstraint("fixed label of vertex " + std::to_string(v) + " is zero");
        }
    }
    return e;
}

SearchOutcome finish(const Graph& g, const FiniteAbelianGroup& grp, const std::vector<int>& labels,
                     std::uint64_t nodes) {
    Labeling<FiniteAbelianGroup> l{grp, {}};
    l.values.reserve(labels.size());
    for (auto a : labels) l.values.push_back(grp.at_index(static_cast<std::uint64_t>(a)));
    auto r = verify_magic(g, std::move(l));
    if (!is_magic(r)) throw std::logic_error("oracle produced a labeling that does not verify");
    return SearchOutcome{SearchStatus::Found, std::get<MagicCertificate<FiniteAbelianGroup>>(std::move(r)), nodes};
}

struct Task {
    int mu;
    std::optional<std::pair<Vertex, int>> first;
};

}  // namespace

SearchOutcome search_with_constraint(const Graph& g, const FiniteAbelianGroup& grp, const SearchConstraint& c,
                                     const SearchBudget& budget) {
    auto enc = encode_constraint(g, grp, c);
    if (g.order() == 0) return finish(g, grp, {}, 0);
    if (grp.order() < 2) return SearchOutcome{SearchStatus::NoneExists, std::nullopt, 0};
    Tables t(grp);
    Shared sh{g, grp, t, budget, search_variable_order(g)};

    // Setup conflicts for a required mu are reported as a contradiction only
    // when they come from fixed labels alone.
    if (c.mu && !enc.fixed.empty()) {
        SearchBudget unpruned = budget;
        unpruned.pruning = false;
        Shared probe{g, grp, t, unpruned, sh.order};
        State st(probe, enc.mus.front());
        for (Vertex v = 0; v < g.order(); ++v)
            if (enc.fixed[v] != kUnassigned && !st.assign(v, enc.fixed[v]))
                throw ContradictoryConstraint("fixed labels already violate the required mu");
    }

    std::vector<Task> tasks;
    for (int mu : enc.mus) {
        auto st = prepare(sh, mu, enc.fixed);
        if (sh.exceeded) return SearchOutcome{SearchStatus::BudgetExceeded, std::nullopt, sh.nodes};
        if (!st) continue;
        auto v = st->next_branch();
        if (!v) {
            tasks.push_back({mu, std::nullopt});
            continue;
        }
        for (int a = 1; a < t.n; ++a) tasks.push_back({mu, std::make_pair(*v, a)});
    }

    enum class TaskState : int { Pending, Exhausted, Found, Aborted };
    std::atomic<std::size_t> best{tasks.size()};
    std::vector<std::vector<int>> results(tasks.size());
    std::vector<TaskState> state(tasks.size(), TaskState::Pending);
    std::atomic<std::size_t> next{0};
    std::mutex lock;

    auto run_task = [&](std::size_t i) -> TaskState {
        auto st = prepare(sh, tasks[i].mu, enc.fixed);
        if (sh.exceeded) return TaskState::Aborted;
        if (!st) return TaskState::Exhausted;
        if (tasks[i].first && !st->assign(tasks[i].first->first, tasks[i].first->second))
            return sh.exceeded ? TaskState::Aborted : TaskState::Exhausted;
        switch (dfs(sh, *st, &best, i)) {
            case Dfs::Found: {
                std::lock_guard lk(lock);
                results[i] = st->labels();
                return TaskState::Found;
            }
            case Dfs::Exhausted: return TaskState::Exhausted;
            case Dfs::Aborted: return TaskState::Aborted;
        }
        return TaskState::Aborted;
    };

    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            TaskState r = (i > best.load() || sh.exceeded) ? TaskState::Aborted : run_task(i);
            std::lock_guard lk(lock);
            state[i] = r;
            if (r == TaskState::Found) {
                auto cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    const unsigned jobs = std::max(1u, budget.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // The lowest Found task wins only if every task ranked before it was
    // exhausted; otherwise the budget cut the answer short.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (state[i] == TaskState::Found) return finish(g, grp, results[i], sh.nodes);
        if (state[i] != TaskState::Exhausted) return SearchOutcome{SearchStatus::BudgetExceeded, std::nullopt, sh.nodes};
    }
    return SearchOutcome{SearchStatus::NoneExists, std::nullopt, sh.nodes};
}

SearchOutcome search_magic(const Graph& g, const FiniteAbelianGroup& grp, const SearchBudget& budget) {
    return search_with_constraint(g, grp, {}, budget);
}

SearchOutcome enumerate_plain(const Graph& g, const FiniteAbelianGroup& grp, const SearchConstraint& c,
                              const SearchBudget& budget) {
    auto enc = encode_constraint(g, grp, c);
    const auto n = g.order();
    if (n == 0) return finish(g, grp, {}, 0);
    if (grp.order() < 2) return SearchOutcome{SearchStatus::NoneExists, std::nullopt, 0};
    Tables t(grp);
    const auto order = search_variable_order(g);
    std::vector<bool> allowed_mu(t.n, false);
    for (int m : enc.mus) allowed_mu[m] = true;

    // labels indexed by position in `order`; odometer with the last position fastest
    std::vector<int> digit(n, 1);
    std::vector<int> labels(n);
    std::optional<std::pair<int, std::vector<int>>> best;
    std::uint64_t count = 0;
    for (;;) {
        if (++count > budget.max_nodes) return SearchOutcome{SearchStatus::BudgetExceeded, std::nullopt, count};
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            labels[order[i]] = digit[i];
            if (!enc.fixed.empty() && enc.fixed[order[i]] != kUnassigned && enc.fixed[order[i]] != digit[i]) ok = false;
        }
        if (ok) {
            auto w = [&](Vertex v) {
                int s = 0;
                for (auto u : g.neighbors(v)) s = t.plus(s, labels[u]);
                return s;
            };
            const int mu = w(0);
            for (Vertex v = 1; v < n && ok; ++v) ok = w(v) == mu;
            if (ok && allowed_mu[mu] && (!best || std::make_pair(mu, digit) < *best)) best = std::make_pair(mu, digit);
        }
        std::size_t k = n;
        while (k > 0 && ++digit[k - 1] == t.n) {
            digit[k - 1] = 1;
            --k;
        }
        if (k == 0) break;
    }
    if (!best) return SearchOutcome{SearchStatus::NoneExists, std::nullopt, count};
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[order[i]] = best->second[i];
    return finish(g, grp, out, count);
}

}  // namespace gvm
