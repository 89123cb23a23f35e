#include "sudocsp/arc_consistency.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <string>
#include <utility>

namespace sudocsp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool any_domain_empty(const CspInstance& csp) {
    for (VariableId v = 0; v < csp.variable_count(); ++v) {
        if (csp.domains().empty(v)) return true;
    }
    return false;
}

// Shared skeleton of the two AC-2 variants. Variables are brought in one at
// a time; for each new variable i the arcs within {0..i} touching i are
// revised in waves: draining Q1 fills Q2 with arcs that must be rechecked,
// then Q2 becomes the next wave. When all_pairs is set, every index pair is
// queued whether constrained or not; unconstrained revisions are vacuous.
PropagationResult ac2_core(CspInstance& csp, bool all_pairs) {
    const auto start = Clock::now();
    PropagationStats stats;
    DomainStore& dom = csp.domains();
    const int n = csp.variable_count();

    auto finish = [&](bool consistent) {
        stats.wall_seconds = seconds_since(start);
        return PropagationResult{consistent, stats};
    };

    if (any_domain_empty(csp)) return finish(false);

    auto vacuous_revise = [&](VariableId from, VariableId to) {
        if (!csp.constrained(from, to)) return 0;
        return revise_count(csp, from, to);
    };

    std::deque<Arc> q1;
    std::deque<Arc> q2;
    for (int i = 0; i < n; ++i) {
        q1.clear();
        q2.clear();
        for (int j = 0; j < i; ++j) {
            if (all_pairs || csp.constrained(i, j)) {
                q1.push_back(Arc{i, j});
                q2.push_back(Arc{j, i});
                stats.queue_pushes += 2;
            }
        }
        while (!q1.empty()) {
            while (!q1.empty()) {
                Arc arc = q1.front();
                q1.pop_front();
                ++stats.revise_calls;
                int removed = vacuous_revise(arc.from, arc.to);
                if (removed == 0) continue;
                stats.values_removed += removed;
                if (dom.empty(arc.from)) return finish(false);
                // Re-queue every arc aimed at the shrunk variable among the
                // variables brought in so far, except the partner just used.
                for (int p = 0; p <= i; ++p) {
                    if (p == arc.to || p == arc.from) continue;
                    if (all_pairs || csp.constrained(p, arc.from)) {
                        q2.push_back(Arc{p, arc.from});
                        ++stats.queue_pushes;
                    }
                }
            }
            std::swap(q1, q2);
            q2.clear();
        }
    }
    return finish(true);
}

}  // namespace

PropagationResult ac1(CspInstance& csp) {
    const auto start = Clock::now();
    PropagationStats stats;
    DomainStore& dom = csp.domains();

    auto finish = [&](bool consistent) {
        stats.wall_seconds = seconds_since(start);
        return PropagationResult{consistent, stats};
    };

    if (any_domain_empty(csp)) return finish(false);

    // Full sweeps over the directed arc list until a sweep changes nothing.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Arc& arc : csp.arcs()) {
            ++stats.revise_calls;
            int removed = revise_count(csp, arc.from, arc.to);
            if (removed == 0) continue;
            stats.values_removed += removed;
            changed = true;
            if (dom.empty(arc.from)) return finish(false);
        }
    }
    return finish(true);
}

PropagationResult ac2(CspInstance& csp) {
    return ac2_core(csp, false);
}

PropagationResult ac2_all_pairs(CspInstance& csp) {
    return ac2_core(csp, true);
}

PropagationResult ac3(CspInstance& csp) {
    const auto start = Clock::now();
    PropagationStats stats;
    DomainStore& dom = csp.domains();

    auto finish = [&](bool consistent) {
        stats.wall_seconds = seconds_since(start);
        return PropagationResult{consistent, stats};
    };

    if (any_domain_empty(csp)) return finish(false);

    std::deque<Arc> queue(csp.arcs().begin(), csp.arcs().end());
    stats.queue_pushes += static_cast<long long>(queue.size());

    while (!queue.empty()) {
        Arc arc = queue.front();
        queue.pop_front();
        ++stats.revise_calls;
        int removed = revise_count(csp, arc.from, arc.to);
        if (removed == 0) continue;
        stats.values_removed += removed;
        if (dom.empty(arc.from)) return finish(false);
        for (const CspInstance::Edge& e : csp.edges(arc.from)) {
            if (e.to == arc.to) continue;
            queue.push_back(Arc{e.to, arc.from});
            ++stats.queue_pushes;
        }
    }
    return finish(true);
}

Ac4Tables build_ac4_tables(CspInstance& csp, PropagationStats& stats) {
    DomainStore& dom = csp.domains();
    const auto arcs = csp.arcs();
    const int n = csp.variable_count();
    const int range = csp.max_value();

    Ac4Tables tables;
    tables.supports.resize(static_cast<size_t>(n) * static_cast<size_t>(range));
    tables.counter.assign(arcs.size() * static_cast<size_t>(range), 0);

    auto flat = [range](VariableId v, int value) {
        return static_cast<size_t>(v) * static_cast<size_t>(range) +
               static_cast<size_t>(value - 1);
    };

    // Count supports per (from, value, to) and record the reverse dependency
    // lists. Values with no support are removed on the spot and queued.
    for (size_t k = 0; k < arcs.size(); ++k) {
        const Arc& arc = arcs[k];
        const Relation& rel = csp.relation(arc.from, arc.to);
        for (int a : values_in(dom.mask(arc.from))) {
            DomainMask sup = rel.support(a) & dom.mask(arc.to);
            tables.counter[k * static_cast<size_t>(range) + static_cast<size_t>(a - 1)] =
                mask_size(sup);
            for (int b : values_in(sup)) {
                tables.supports[flat(arc.to, b)].push_back(
                    Ac4Tables::SupportEntry{static_cast<int>(k), a});
            }
            if (sup == 0) {
                tables.queue.emplace_back(arc.from, a);
                ++stats.queue_pushes;
                dom.remove(arc.from, a);
                ++stats.values_removed;
                if (dom.empty(arc.from)) {
                    tables.wiped_out = true;
                    return tables;
                }
            }
        }
    }
    return tables;
}

PropagationResult ac4(CspInstance& csp) {
    const auto start = Clock::now();
    PropagationStats stats;
    DomainStore& dom = csp.domains();

    auto finish = [&](bool consistent) {
        stats.wall_seconds = seconds_since(start);
        return PropagationResult{consistent, stats};
    };

    if (any_domain_empty(csp)) return finish(false);

    const auto arcs = csp.arcs();
    const int range = csp.max_value();

    Ac4Tables tables = build_ac4_tables(csp, stats);
    if (tables.wiped_out) return finish(false);

    auto flat = [range](VariableId v, int value) {
        return static_cast<size_t>(v) * static_cast<size_t>(range) +
               static_cast<size_t>(value - 1);
    };

    // Deletion pass: each deleted (variable, value) pair decrements the
    // counters of the pairs it was supporting; counters reaching zero
    // trigger further deletions.
    std::deque<std::pair<VariableId, int>> queue(tables.queue.begin(),
                                                 tables.queue.end());
    while (!queue.empty()) {
        auto [xj, aj] = queue.front();
        queue.pop_front();
        for (const Ac4Tables::SupportEntry& entry : tables.supports[flat(xj, aj)]) {
            const Arc& arc = arcs[static_cast<size_t>(entry.arc_index)];
            if (!dom.contains(arc.from, entry.value)) continue;
            int& count = tables.counter[static_cast<size_t>(entry.arc_index) *
                                            static_cast<size_t>(range) +
                                        static_cast<size_t>(entry.value - 1)];
            if (--count == 0) {
                queue.emplace_back(arc.from, entry.value);
                ++stats.queue_pushes;
                dom.remove(arc.from, entry.value);
                ++stats.values_removed;
                if (dom.empty(arc.from)) return finish(false);
            }
        }
    }
    return finish(true);
}

PropagationResult enforce(CspInstance& csp, AcAlgorithm algorithm) {
    switch (algorithm) {
        case AcAlgorithm::Ac1:
            return ac1(csp);
        case AcAlgorithm::Ac2:
            return ac2(csp);
        case AcAlgorithm::Ac2AllPairs:
            return ac2_all_pairs(csp);
        case AcAlgorithm::Ac3:
            return ac3(csp);
        case AcAlgorithm::Ac4:
            return ac4(csp);
    }
    throw std::invalid_argument("enforce: unknown algorithm");
}

std::string_view to_string(AcAlgorithm algorithm) {
    switch (algorithm) {
        case AcAlgorithm::Ac1:
            return "AC-1";
        case AcAlgorithm::Ac2:
            return "AC-2";
        case AcAlgorithm::Ac2AllPairs:
            return "AC-2-allpairs";
        case AcAlgorithm::Ac3:
            return "AC-3";
        case AcAlgorithm::Ac4:
            return "AC-4";
    }
    return "?";
}

std::optional<AcAlgorithm> parse_algorithm(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c == '-' || c == '_') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (key.starts_with("ac")) key.erase(0, 2);
    if (key == "1") return AcAlgorithm::Ac1;
    if (key == "2") return AcAlgorithm::Ac2;
    if (key == "2paper" || key == "2allpairs" || key == "2all") return AcAlgorithm::Ac2AllPairs;
    if (key == "3") return AcAlgorithm::Ac3;
    if (key == "4") return AcAlgorithm::Ac4;
    return std::nullopt;
}

}  // namespace sudocsp
