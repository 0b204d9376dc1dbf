#include "harborth/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "harborth/numeric.hpp"

namespace harborth {

Symmetry resolve_symmetry(Symmetry mode, const Group& g, int k) {
    if (mode != Symmetry::auto_select) return mode;
    if (g.is_elementary_two() && k % 2 == 0) return Symmetry::linear_over_f2;
    return Symmetry::scalar_and_translation;
}

const char* to_string(Symmetry mode) {
    switch (mode) {
        case Symmetry::none: return "none";
        case Symmetry::scalar: return "scalar";
        case Symmetry::scalar_and_translation: return "scalar_and_translation";
        case Symmetry::linear_over_f2: return "linear_over_f2";
        case Symmetry::auto_select: return "auto";
    }
    return "?";
}

std::optional<Symmetry> symmetry_from_string(std::string_view name) {
    if (name == "none") return Symmetry::none;
    if (name == "scalar") return Symmetry::scalar;
    if (name == "scalar_and_translation") return Symmetry::scalar_and_translation;
    if (name == "linear_over_f2") return Symmetry::linear_over_f2;
    if (name == "auto") return Symmetry::auto_select;
    return std::nullopt;
}

namespace {

constexpr int kSplitDepth = 14;       // task frontier depth of the decision tree
constexpr std::size_t kMaxPerms = 4096;  // deterministic cutoff on pruning maps

struct SymmetryData {
    std::vector<std::vector<std::uint32_t>> perms;  // identity excluded
    int forced_prefix = 0;                          // leading elements fixed by the action
};

// Element-index permutations of the chosen admissible actions. A subset of the
// full action group is sound for pruning, so the count is capped.
SymmetryData build_symmetry(const Group& g, int k, Symmetry mode) {
    SymmetryData out;
    if (mode == Symmetry::none) return out;
    const std::int64_t order = g.order();

    std::set<std::vector<std::uint32_t>> uniq;
    auto add_perm = [&](std::vector<std::uint32_t> p) {
        for (std::int64_t x = 0; x < order; ++x) {
            if (p[x] != static_cast<std::uint32_t>(x)) {
                uniq.insert(std::move(p));
                return;
            }
        }
    };

    if (mode == Symmetry::linear_over_f2 && g.is_elementary_two()) {
        const int r = g.rank();
        std::vector<int> coord_perm(r);
        std::iota(coord_perm.begin(), coord_perm.end(), 0);
        do {
            std::vector<std::uint32_t> p(order);
            std::vector<std::int64_t> permuted(r);
            for (std::int64_t x = 0; x < order; ++x) {
                const auto coords = g.coords_of(static_cast<std::uint32_t>(x));
                for (int i = 0; i < r; ++i) permuted[i] = coords[coord_perm[i]];
                p[x] = g.index_of(permuted);
            }
            add_perm(std::move(p));
        } while (std::next_permutation(coord_perm.begin(), coord_perm.end()) &&
                 uniq.size() < kMaxPerms);
        // Translations act transitively and linear maps are transitive on the
        // nonzero elements, so for even k a maximum free set may be assumed to
        // contain {0, e}; the search fixes indices 0 and 1.
        out.forced_prefix = (k % 2 == 0 && order >= 2) ? 2 : 0;
    } else {
        const Symmetry eff =
            mode == Symmetry::linear_over_f2 ? Symmetry::scalar_and_translation : mode;
        std::vector<std::int64_t> units{1};
        for (std::int64_t m = 2; m < g.exponent(); ++m) {
            if (std::gcd(m, g.exponent()) == 1) units.push_back(m);
        }
        std::vector<std::uint32_t> torsion{0};
        if (eff == Symmetry::scalar_and_translation) {
            for (std::int64_t t = 1; t < order; ++t) {
                if (g.scalar_mul(k, static_cast<std::uint32_t>(t)) == 0) {
                    torsion.push_back(static_cast<std::uint32_t>(t));
                }
            }
        }
        for (std::int64_t m : units) {
            for (std::uint32_t t : torsion) {
                if (m == 1 && t == 0) continue;
                if (uniq.size() >= kMaxPerms) break;
                std::vector<std::uint32_t> p(order);
                for (std::int64_t x = 0; x < order; ++x) {
                    p[x] = g.add(g.scalar_mul(m, static_cast<std::uint32_t>(x)), t);
                }
                add_perm(std::move(p));
            }
        }
    }
    out.perms.assign(uniq.begin(), uniq.end());
    return out;
}

struct BestTracker {
    std::int64_t size = -1;
    std::vector<std::uint32_t> witness;
    bool real = false;  // witness corresponds to an actual find (not a pruning floor)

    bool offer(const std::vector<std::uint32_t>& cur) {
        if (static_cast<std::int64_t>(cur.size()) > size) {
            size = static_cast<std::int64_t>(cur.size());
            witness = cur;
            real = true;
            return true;
        }
        return false;
    }
};

struct Task {
    std::vector<std::uint32_t> included;  // full pushed prefix
    std::vector<std::uint32_t> live;
};

struct SharedConfig {
    const Group& group;
    int k;
    const SymmetryData& sym;
    std::optional<std::int64_t> target;  // decision mode when set
    std::int64_t cap;                    // proven upper bound on the free size
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    std::atomic<std::uint64_t>* nodes;
    std::atomic<bool>* aborted;
};

// One exploration context: a subsum table plus incremental symmetry masks.
// Tasks run isolated Walkers so results and node counts do not depend on the
// worker count.
class Walker {
   public:
    explicit Walker(const SharedConfig& cfg)
        : cfg_(cfg),
          table_(cfg.group, cfg.k),
          mask_words_(static_cast<int>((cfg.group.order() + 63) / 64)),
          cur_mask_(mask_words_, 0),
          perm_masks_(cfg.sym.perms.size() * mask_words_, 0),
          pools_(static_cast<std::size_t>(cfg.group.order()) + 2) {}

    ~Walker() { flush_nodes(); }

    void replay(const std::vector<std::uint32_t>& prefix) {
        for (std::uint32_t e : prefix) push_element(e);
    }

    std::vector<std::uint32_t> root_live() {
        std::vector<std::uint32_t> live;
        const std::uint32_t from =
            current_.empty() ? 0 : current_.back() + 1;
        for (std::int64_t x = from; x < cfg_.group.order(); ++x) {
            if (!table_.creates_zero_sum(static_cast<std::uint32_t>(x))) {
                live.push_back(static_cast<std::uint32_t>(x));
            }
        }
        return live;
    }

    // Leftmost path of the pruned tree: cheap deterministic lower bound.
    void greedy(const std::vector<std::uint32_t>& root, BestTracker& best) {
        std::vector<std::uint32_t> live = root;
        std::size_t from = 0;
        int pushes = 0;
        while (from < live.size() && !done_) {
            if (!tick()) break;
            const std::uint32_t c = live[from];
            push_element(c);
            if (sym_pruned()) {
                pop_element();
                ++from;
                continue;
            }
            ++pushes;
            if (best.offer(current_)) check_done(best);
            std::vector<std::uint32_t> next;
            for (std::size_t i = from + 1; i < live.size(); ++i) {
                if (!table_.creates_zero_sum(live[i])) next.push_back(live[i]);
            }
            live = std::move(next);
            from = 0;
        }
        while (pushes-- > 0) pop_element();
    }

    void dfs(const std::vector<std::uint32_t>& live, std::size_t from, int depth,
             std::vector<Task>* sink, BestTracker& best) {
        if (sink && depth == kSplitDepth) {
            sink->push_back(Task{table_.members(),
                                 std::vector<std::uint32_t>(live.begin() + from, live.end())});
            return;
        }
        if (!tick() || done_) return;
        const std::int64_t potential =
            static_cast<std::int64_t>(current_.size()) +
            static_cast<std::int64_t>(live.size() - from);
        if (cfg_.target ? potential < *cfg_.target : potential <= best.size) return;
        if (from == live.size()) return;

        const std::uint32_t c = live[from];
        push_element(c);
        if (!sym_pruned()) {
            if (best.offer(current_)) check_done(best);
            if (!done_) {
                auto& child = pools_[current_.size()];
                child.clear();
                for (std::size_t i = from + 1; i < live.size(); ++i) {
                    if (!table_.creates_zero_sum(live[i])) child.push_back(live[i]);
                }
                dfs(child, 0, depth + 1, sink, best);
            }
        }
        pop_element();
        if (done_) return;
        dfs(live, from + 1, depth + 1, sink, best);
    }

    bool completed() const { return completed_; }
    bool done() const { return done_; }

    void push_element(std::uint32_t c) {
        table_.push(c);
        current_.push_back(c);
        cur_mask_[c >> 6] |= std::uint64_t{1} << (c & 63);
        const auto& perms = cfg_.sym.perms;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            const std::uint32_t m = perms[p][c];
            perm_masks_[p * mask_words_ + (m >> 6)] |= std::uint64_t{1} << (m & 63);
        }
    }

    void flush_nodes() {
        cfg_.nodes->fetch_add(pending_nodes_, std::memory_order_relaxed);
        pending_nodes_ = 0;
    }

   private:
    void pop_element() {
        const std::uint32_t c = current_.back();
        table_.pop();
        current_.pop_back();
        cur_mask_[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
        const auto& perms = cfg_.sym.perms;
        for (std::size_t p = 0; p < perms.size(); ++p) {
            const std::uint32_t m = perms[p][c];
            perm_masks_[p * mask_words_ + (m >> 6)] &= ~(std::uint64_t{1} << (m & 63));
        }
    }

    // True iff some action maps the current set to a lexicographically smaller
    // one; that image was (or will be) explored on its own, so prune here.
    bool sym_pruned() const {
        const std::size_t nperms = cfg_.sym.perms.size();
        for (std::size_t p = 0; p < nperms; ++p) {
            const std::uint64_t* pm = perm_masks_.data() + p * mask_words_;
            for (int w = 0; w < mask_words_; ++w) {
                const std::uint64_t diff = pm[w] ^ cur_mask_[w];
                if (diff) {
                    if ((pm[w] >> std::countr_zero(diff)) & 1) return true;
                    break;
                }
            }
        }
        return false;
    }

    void check_done(const BestTracker& best) {
        if (cfg_.target) {
            if (best.size >= *cfg_.target) done_ = true;
        } else if (best.size >= cfg_.cap) {
            done_ = true;
        }
    }

    bool tick() {
        ++pending_nodes_;
        if ((pending_nodes_ & 1023) == 0) {
            const std::uint64_t total =
                cfg_.nodes->fetch_add(pending_nodes_, std::memory_order_relaxed) + pending_nodes_;
            pending_nodes_ = 0;
            if (total > cfg_.max_nodes ||
                std::chrono::steady_clock::now() > cfg_.deadline) {
                cfg_.aborted->store(true, std::memory_order_relaxed);
            }
        }
        if (cfg_.aborted->load(std::memory_order_relaxed)) {
            completed_ = false;
            return false;
        }
        return true;
    }

    const SharedConfig& cfg_;
    SubsumTable table_;
    int mask_words_;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint64_t> cur_mask_;
    std::vector<std::uint64_t> perm_masks_;
    std::vector<std::vector<std::uint32_t>> pools_;
    std::uint64_t pending_nodes_ = 0;
    bool done_ = false;
    bool completed_ = true;
};

struct EngineOutcome {
    std::int64_t best_size = 0;
    std::vector<std::uint32_t> witness;
    std::uint64_t nodes = 0;
    bool exhausted = true;
};

void merge_result(BestTracker& into, const BestTracker& from) {
    if (!from.real) return;
    if (from.size > into.size ||
        (from.size == into.size &&
         std::lexicographical_compare(from.witness.begin(), from.witness.end(),
                                      into.witness.begin(), into.witness.end()))) {
        into.size = from.size;
        into.witness = from.witness;
        into.real = true;
    }
}

void check_budget(const SearchBudget& budget) {
    if (budget.max_nodes == 0 || budget.max_seconds <= 0.0 || budget.workers < 1) {
        throw std::domain_error("search budget fields must be positive");
    }
}

EngineOutcome run_search(const Group& g, int k, const SearchBudget& budget,
                         std::optional<std::int64_t> target) {
    check_budget(budget);
    if (k < 1 || k > g.order()) {
        throw std::domain_error("k must satisfy 1 <= k <= |G|, got k=" + std::to_string(k) +
                                " for order " + std::to_string(g.order()));
    }
    const Symmetry mode = resolve_symmetry(budget.symmetry, g, k);
    const SymmetryData sym = build_symmetry(g, k, mode);

    std::int64_t cap = g.order();
    if (g.is_cyclic() && is_prime(g.order()) && k < g.order()) {
        // Any larger set has a k-zero-sum subset by the restricted-sumset bound.
        cap = std::min<std::int64_t>(
            cap, ceil_div(g.order() + static_cast<std::int64_t>(k) * k - 1, k) - 1);
    }

    EngineOutcome out;
    if (target && *target > cap) {
        out.best_size = -1;
        out.exhausted = true;
        return out;
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(budget.max_seconds));
    SharedConfig cfg{g, k, sym, target, cap, budget.max_nodes, deadline, &nodes, &aborted};

    std::vector<std::uint32_t> forced;
    if (sym.forced_prefix == 2) forced = {0, 1};

    BestTracker best;
    best.offer(std::vector<std::uint32_t>{});  // the empty set is free
    Walker w0(cfg);
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t e : forced) {
        w0.push_element(e);
        prefix.push_back(e);
        best.offer(prefix);
    }

    bool phase_completed = true;
    std::vector<Task> tasks;
    if (!(target && best.size >= *target) && best.size < cap) {
        const std::vector<std::uint32_t> root = w0.root_live();
        w0.greedy(root, best);
        if (!w0.done() && w0.completed()) {
            w0.dfs(root, 0, 0, &tasks, best);
        }
        phase_completed = w0.completed();
    }
    w0.flush_nodes();

    // In decision mode, tasks captured before a phase find cover regions that
    // complete earlier in lexicographic order, so they still run; the merge
    // then picks the lexicographically smallest find. In max mode a cap-stop
    // settles the value and the remaining tasks are moot.
    const bool run_tasks = !tasks.empty() && phase_completed && (target || !w0.done());
    bool tasks_completed = true;
    if (run_tasks) {
        const std::int64_t floor = target ? *target - 1 : best.size;
        std::vector<BestTracker> results(tasks.size());
        std::vector<std::uint8_t> task_done(tasks.size(), 0);
        std::atomic<std::size_t> next{0};
        auto worker_fn = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                Walker w(cfg);
                w.replay(tasks[i].included);
                BestTracker local;
                local.size = floor;
                w.dfs(tasks[i].live, 0, kSplitDepth, nullptr, local);
                w.flush_nodes();
                results[i] = std::move(local);
                task_done[i] = w.completed() ? 1 : 0;
            }
        };
        const int nworkers = std::min<int>(budget.workers, static_cast<int>(tasks.size()));
        if (nworkers <= 1) {
            worker_fn();
        } else {
            std::vector<std::thread> threads;
            threads.reserve(nworkers);
            for (int t = 0; t < nworkers; ++t) threads.emplace_back(worker_fn);
            for (auto& t : threads) t.join();
        }
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            merge_result(best, results[i]);
            tasks_completed = tasks_completed && task_done[i];
        }
    }

    out.best_size = best.size;
    out.witness = best.witness;
    out.nodes = nodes.load();
    out.exhausted = phase_completed && tasks_completed && !aborted.load();
    // Early stop against a proven cap or a satisfied decision target counts
    // as exhaustion: the value is certain even without a full traversal.
    if (target ? best.size >= *target : best.size >= cap) {
        out.exhausted = true;
    }
    return out;
}

ExactResult make_exact(const Group& g, int k, std::int64_t best,
                       std::vector<std::uint32_t> witness, std::uint64_t nodes, bool exhausted) {
    ElementSet w(g, std::move(witness));
    if (!is_k_zero_sum_free(w, k)) {
        throw std::logic_error("internal error: witness fails the zero-sum-free check");
    }
    return ExactResult{g, k, best, best + 1, std::move(w), nodes, exhausted};
}

}  // namespace

ExactResult max_zero_sum_free(const Group& g, int k, const SearchBudget& budget) {
    // Two passes: the value pass prunes ties aggressively, which can record a
    // maximum set out of lexicographic discovery order; the witness pass then
    // re-finds the canonical (lex-min) maximum set as a decision query.
    const EngineOutcome value = run_search(g, k, budget, std::nullopt);
    std::uint64_t nodes = value.nodes;
    std::vector<std::uint32_t> witness = value.witness;
    if (value.best_size > 0) {
        const EngineOutcome canon = run_search(g, k, budget, value.best_size);
        nodes += canon.nodes;
        if (canon.best_size >= value.best_size) {
            witness.assign(canon.witness.begin(), canon.witness.begin() + value.best_size);
        }
    }
    return make_exact(g, k, value.best_size, std::move(witness), nodes, value.exhausted);
}

DecisionResult exists_free_of_size(const Group& g, int k, std::int64_t t,
                                   const SearchBudget& budget) {
    if (t < 0 || t > g.order()) {
        throw std::domain_error("target size must lie in [0, |G|]");
    }
    if (k < 1 || k > g.order()) {
        throw std::domain_error("k must satisfy 1 <= k <= |G|");
    }
    if (t == 0) {
        return DecisionResult{DecisionStatus::found, ElementSet(g), 0};
    }
    const EngineOutcome out = run_search(g, k, budget, t);
    if (out.best_size >= t) {
        std::vector<std::uint32_t> w(out.witness.begin(), out.witness.begin() + t);
        ElementSet witness(g, std::move(w));
        if (!is_k_zero_sum_free(witness, k)) {
            throw std::logic_error("internal error: decision witness fails verification");
        }
        return DecisionResult{DecisionStatus::found, std::move(witness), out.nodes};
    }
    return DecisionResult{
        out.exhausted ? DecisionStatus::ruled_out : DecisionStatus::indeterminate, std::nullopt,
        out.nodes};
}

ExactResult brute_force_oracle(const Group& g, int k) {
    if (g.order() > 20) {
        throw std::domain_error("brute-force oracle refuses groups of order > 20");
    }
    if (k < 1 || k > g.order()) {
        throw std::domain_error("k must satisfy 1 <= k <= |G|");
    }
    const int order = static_cast<int>(g.order());
    std::vector<std::vector<std::uint32_t>> add_table(order, std::vector<std::uint32_t>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            add_table[a][b] = g.add(a, b);
        }
    }

    // reach[s][x]: some s-subset of the current choice sums to x.
    std::vector<std::vector<std::uint8_t>> reach(k + 1, std::vector<std::uint8_t>(order, 0));
    reach[0][0] = 1;
    std::vector<std::uint32_t> current, best_witness;
    std::int64_t best = -1;
    std::uint64_t nodes = 0;

    std::function<void(int)> enumerate = [&](int pos) {
        ++nodes;
        if (pos == order) {
            if (!reach[k][0] && static_cast<std::int64_t>(current.size()) > best) {
                best = static_cast<std::int64_t>(current.size());
                best_witness = current;
            }
            return;
        }
        const auto saved = reach;
        const int limit = std::min<int>(k, static_cast<int>(current.size()) + 1);
        for (int s = limit; s >= 1; --s) {
            for (int y = 0; y < order; ++y) {
                if (saved[s - 1][y]) reach[s][add_table[y][pos]] = 1;
            }
        }
        current.push_back(static_cast<std::uint32_t>(pos));
        enumerate(pos + 1);
        current.pop_back();
        reach = saved;
        enumerate(pos + 1);
    };
    enumerate(0);
    return make_exact(g, k, best, std::move(best_witness), nodes, true);
}

}  // namespace harborth
