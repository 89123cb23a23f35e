#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "sudocsp/csp.hpp"

namespace sudocsp {

// The four interchangeable enforcement algorithms. Ac2 queues only
// constrained pairs; Ac2AllPairs is the transcription that queues every
// index pair and relies on vacuous support for unconstrained ones (no
// constraint means every value is supported, so nothing is removed).
enum class AcAlgorithm { Ac1, Ac2, Ac2AllPairs, Ac3, Ac4 };

struct PropagationStats {
    long long revise_calls = 0;
    long long values_removed = 0;
    long long queue_pushes = 0;
    double wall_seconds = 0.0;

    PropagationStats& operator+=(const PropagationStats& other) {
        revise_calls += other.revise_calls;
        values_removed += other.values_removed;
        queue_pushes += other.queue_pushes;
        wall_seconds += other.wall_seconds;
        return *this;
    }
};

struct PropagationResult {
    bool consistent = false;
    PropagationStats stats;
};

// AC-4's bookkeeping. For a directed arc k = (x, y) and a value a of x,
// counter[k * max_value + (a-1)] holds how many values of domain(y) are
// compatible with a; supports[y * max_value + (b-1)] lists every (arc,
// value) pair whose counter that b contributes to. Building the tables
// already removes values with no support at all (they seed the queue),
// so the counter invariant holds for every value still in its domain.
struct Ac4Tables {
    struct SupportEntry {
        int arc_index;
        int value;
    };
    std::vector<std::vector<SupportEntry>> supports;
    std::vector<int> counter;
    std::vector<std::pair<VariableId, int>> queue;  // removed during the build
    bool wiped_out = false;
};

Ac4Tables build_ac4_tables(CspInstance& csp, PropagationStats& stats);

// Each of these reduces the instance's domains to the arc-consistent
// closure, or stops early with consistent=false once some domain empties.
// All four reach the same closure; they differ only in work performed.
PropagationResult ac1(CspInstance& csp);
PropagationResult ac2(CspInstance& csp);
PropagationResult ac2_all_pairs(CspInstance& csp);
PropagationResult ac3(CspInstance& csp);
PropagationResult ac4(CspInstance& csp);

PropagationResult enforce(CspInstance& csp, AcAlgorithm algorithm);

std::string_view to_string(AcAlgorithm algorithm);

// Accepts "1", "2", "2paper", "3", "4" and the ac-prefixed spellings
// ("ac1", "AC-4", "ac2paper", ...).
std::optional<AcAlgorithm> parse_algorithm(std::string_view name);

}  // namespace sudocsp
