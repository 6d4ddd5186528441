#include "dupcode/oracle.hpp"

#include <algorithm>
#include <map>

namespace dupcode {

bool ConfusabilityGraph::has_edge(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a >= adj.size()) return false;
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

namespace {

std::vector<Word> space_words(const ChannelParams& params, std::uint64_t n, std::uint64_t max_vertices) {
    // vertex count: sum over m of (q-1) q^(m-1)
    std::uint64_t total = 0;
    std::uint64_t per_length = params.q - 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        total += per_length;
        if (total > max_vertices)
            throw BudgetError("S_q(n) exceeds the vertex budget of " + std::to_string(max_vertices));
        if (per_length > max_vertices * 2)  // avoid overflow; already doomed
            throw BudgetError("S_q(n) exceeds the vertex budget");
        per_length *= params.q;
    }

    // lexicographic successor within a fixed length; first symbol stays >= 1
    auto advance = [&params](Word& w) {
        for (std::size_t i = w.size(); i-- > 0;) {
            if (w[i] + 1u < params.q) {
                ++w[i];
                std::fill(w.begin() + i + 1, w.end(), Symbol{0});
                return true;
            }
        }
        return false;
    };

    std::vector<Word> words;
    words.reserve(total);
    for (std::uint64_t m = 1; m <= n; ++m) {
        Word w(m, 0);
        w[0] = 1;
        do {
            words.push_back(w);
        } while (advance(w));
    }
    return words;
}

}  // namespace

ConfusabilityGraph build_graph(const ChannelParams& params, std::uint64_t n, Model model,
                               const GraphBudget& budget) {
    ConfusabilityGraph g{params, n, model, {}, {}, 0};
    g.vertices = space_words(params, n, budget.max_vertices);
    const std::uint32_t count = static_cast<std::uint32_t>(g.vertices.size());
    g.adj.assign(count, {});

    auto add_edge = [&](std::uint32_t a, std::uint32_t b) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
        ++g.edge_count;
    };

    if (model == Model::zero_insertion && !budget.brute_backend) {
        // confusable words share the subsequence of nonzero symbols
        std::map<std::vector<Symbol>, std::vector<std::uint32_t>> buckets;
        for (std::uint32_t v = 0; v < count; ++v) {
            std::vector<Symbol> skeleton;
            for (Symbol s : g.vertices[v])
                if (s != 0) skeleton.push_back(s);
            buckets[std::move(skeleton)].push_back(v);
        }
        for (const auto& [skeleton, members] : buckets) {
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (confusable(params, g.vertices[members[a]], g.vertices[members[b]], model))
                        add_edge(members[a], members[b]);
        }
    } else {
        std::vector<OutputSet> sets;
        sets.reserve(count);
        for (std::uint32_t v = 0; v < count; ++v)
            sets.push_back(output_set_brute(params, g.vertices[v], model));
        for (std::uint32_t a = 0; a < count; ++a) {
            for (std::uint32_t b = a + 1; b < count; ++b) {
                const auto& A = sets[a].words;
                const auto& B = sets[b].words;
                std::size_t i = 0, j = 0;
                bool hit = false;
                while (i < A.size() && j < B.size()) {
                    if (A[i] == B[j]) {
                        hit = true;
                        break;
                    }
                    if (canonical_less(A[i], B[j]))
                        ++i;
                    else
                        ++j;
                }
                if (hit) add_edge(a, b);
            }
        }
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

namespace {

// Dynamic bitset sized at construction.
class Bits {
   public:
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

   private:
    std::vector<std::uint64_t> words_;
};

// Exact maximum clique (Tomita-style coloring bound); used on the
// complement of a confusability component.
struct CliqueSolver {
    std::vector<Bits> adj;
    std::vector<int> best;
    std::vector<int> current;

    void color_sort(const std::vector<int>& P, std::vector<int>& ordered, std::vector<int>& colors) const {
        std::vector<std::vector<int>> classes;
        for (int v : P) {
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool conflict = false;
                for (int u : classes[k])
                    if (adj[v].test(static_cast<std::size_t>(u))) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
        }
        ordered.clear();
        colors.clear();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (int v : classes[k]) {
                ordered.push_back(v);
                colors.push_back(static_cast<int>(k) + 1);
            }
    }

    void expand(const std::vector<int>& P) {
        std::vector<int> ordered, colors;
        color_sort(P, ordered, colors);
        for (int idx = static_cast<int>(ordered.size()) - 1; idx >= 0; --idx) {
            if (current.size() + static_cast<std::size_t>(colors[idx]) <= best.size()) return;
            const int v = ordered[idx];
            current.push_back(v);
            std::vector<int> next;
            for (int k = 0; k < idx; ++k)
                if (adj[v].test(static_cast<std::size_t>(ordered[k]))) next.push_back(ordered[k]);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
        }
    }
};

}  // namespace

MisResult max_independent_set(const ConfusabilityGraph& graph, const MisBudget& budget) {
    const std::size_t count = graph.vertices.size();
    if (count > budget.max_vertices)
        throw BudgetError("graph exceeds the exact-MIS vertex budget of " + std::to_string(budget.max_vertices));

    std::vector<bool> seen(count, false);
    std::vector<std::uint32_t> picked;

    for (std::size_t start = 0; start < count; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> comp{static_cast<std::uint32_t>(start)};
        seen[start] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::uint32_t u : graph.adj[comp[head]])
                if (!seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());

        if (comp.size() == 1) {
            picked.push_back(comp[0]);
            continue;
        }

        // independent set in the component == clique in its complement
        const std::size_t m = comp.size();
        std::vector<std::size_t> local(count);
        for (std::size_t k = 0; k < m; ++k) local[comp[k]] = k;
        CliqueSolver solver;
        solver.adj.assign(m, Bits(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (a != b && !graph.has_edge(comp[a], comp[b])) solver.adj[a].set(b);

        std::vector<int> all(m);
        for (std::size_t k = 0; k < m; ++k) all[k] = static_cast<int>(k);
        solver.expand(all);
        for (int v : solver.best) picked.push_back(comp[static_cast<std::size_t>(v)]);
    }

    std::sort(picked.begin(), picked.end());
    MisResult result{picked.size(), {}};
    result.witness.reserve(picked.size());
    for (std::uint32_t v : picked) result.witness.push_back(graph.vertices[v]);
    return result;
}

ZeroErrorReport brute_zero_error_check(const ChannelParams& params, const std::vector<Word>& code,
                                       Model model, const EnumerationBudget& budget) {
    const bool skeleton_buckets =
        model == Model::zero_insertion &&
        std::all_of(code.begin(), code.end(), [](const Word& w) { return !w.empty() && w.front() != 0; });

    auto intersects = [](const OutputSet& A, const OutputSet& B) {
        std::size_t i = 0, j = 0;
        while (i < A.words.size() && j < B.words.size()) {
            if (A.words[i] == B.words[j]) return true;
            if (canonical_less(A.words[i], B.words[j]))
                ++i;
            else
                ++j;
        }
        return false;
    };

    if (skeleton_buckets) {
        if (params.r.is_unbounded())
            throw std::invalid_argument("zero-error check requires a finite repetition bound");
        const std::uint64_t r = params.r.value();
        // The channel acts on segments independently, so two same-skeleton
        // words share an output iff every segment pair shares a reachable
        // run. Walk the two run progressions {u + t*ell : t <= (u+1) r} in
        // lockstep rather than materializing the product sets.
        const auto progressions_meet = [&](std::uint64_t u, std::uint64_t v) {
            std::uint64_t a = u, b = v, ta = 0, tb = 0;
            const std::uint64_t amax = (u + 1) * r, bmax = (v + 1) * r;
            while (true) {
                if (a == b) return true;
                if (a < b) {
                    if (++ta > amax) return false;
                    a += params.ell;
                } else {
                    if (++tb > bmax) return false;
                    b += params.ell;
                }
            }
        };

        std::map<std::vector<Symbol>, std::vector<std::size_t>> buckets;
        for (std::size_t idx = 0; idx < code.size(); ++idx) {
            std::vector<Symbol> skeleton;
            for (Symbol s : code[idx])
                if (s != 0) skeleton.push_back(s);
            buckets[std::move(skeleton)].push_back(idx);
        }
        for (const auto& [skeleton, members] : buckets) {
            std::vector<RunForm> forms;
            forms.reserve(members.size());
            for (std::size_t idx : members) forms.push_back(to_run_form(code[idx]));
            for (std::size_t a = 0; a < members.size(); ++a) {
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    bool meet = true;
                    for (std::size_t k = 0; meet && k < forms[a].segments.size(); ++k)
                        meet = progressions_meet(forms[a].segments[k].zeros, forms[b].segments[k].zeros);
                    if (meet) return {false, std::make_pair(code[members[a]], code[members[b]])};
                }
            }
        }
        return {true, std::nullopt};
    }

    std::vector<OutputSet> sets;
    sets.reserve(code.size());
    for (const Word& w : code) sets.push_back(output_set(params, w, model, budget));
    const std::uint64_t growth = params.r.is_unbounded() ? 0 : 1 + params.r.value() * params.ell;
    for (std::size_t a = 0; a < code.size(); ++a) {
        for (std::size_t b = a + 1; b < code.size(); ++b) {
            // outputs live in [len, len * (1 + r*ell)]; disjoint ranges cannot meet
            const std::uint64_t la = code[a].size(), lb = code[b].size();
            if (growth && (la * growth < lb || lb * growth < la)) continue;
            if (intersects(sets[a], sets[b])) return {false, std::make_pair(code[a], code[b])};
        }
    }
    return {true, std::nullopt};
}

}  // namespace dupcode
