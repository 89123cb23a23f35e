#include "sudocsp/solver.hpp"

#include <chrono>

namespace sudocsp {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<VariableId> pick_variable(const CspInstance& csp, Heuristic heuristic) {
    return heuristic == Heuristic::Mrv ? select_variable_mrv(csp)
                                       : select_first_unassigned(csp);
}

enum class Walk { Found, Exhausted, Limit };

// Shared depth-first core. on_solution is called with the domains all
// singleton; returning true stops the search, returning false treats the
// leaf as a dead end so enumeration continues.
template <typename OnSolution>
class Searcher {
public:
    Searcher(CspInstance& csp, const SearchConfig& config, CspSearchResult& result,
             OnSolution on_solution)
        : csp_(csp),
          config_(config),
          result_(result),
          on_solution_(on_solution),
          start_(Clock::now()) {}

    Walk run() {
        auto root = enforce(csp_, config_.algorithm);
        result_.propagation += root.stats;
        if (!root.consistent) return Walk::Exhausted;
        return descend();
    }

private:
    bool out_of_budget() const {
        if (config_.node_limit && result_.nodes >= *config_.node_limit) return true;
        if (config_.time_limit_seconds) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
            if (elapsed >= *config_.time_limit_seconds) return true;
        }
        return false;
    }

    Walk descend() {
        auto var = pick_variable(csp_, config_.heuristic);
        if (!var) {
            return on_solution_() ? Walk::Found : Walk::Exhausted;
        }
        DomainStore& dom = csp_.domains();
        for (int value : values_in(dom.mask(*var))) {
            if (out_of_budget()) return Walk::Limit;
            ++result_.nodes;
            auto token = dom.snapshot();
            dom.assign(*var, value);
            auto propagated = enforce(csp_, config_.algorithm);
            result_.propagation += propagated.stats;
            if (propagated.consistent) {
                Walk below = descend();
                if (below != Walk::Exhausted) {
                    dom.restore(token);
                    return below;
                }
            }
            dom.restore(token);
            ++result_.backtracks;
        }
        return Walk::Exhausted;
    }

    CspInstance& csp_;
    const SearchConfig& config_;
    CspSearchResult& result_;
    OnSolution on_solution_;
    Clock::time_point start_;
};

std::vector<int> read_assignment(const CspInstance& csp) {
    std::vector<int> values;
    values.reserve(static_cast<size_t>(csp.variable_count()));
    for (VariableId v = 0; v < csp.variable_count(); ++v) {
        values.push_back(csp.domains().sole_value(v));
    }
    return values;
}

}  // namespace

std::optional<VariableId> select_variable_mrv(const CspInstance& csp) {
    std::optional<VariableId> best;
    int best_size = kMaxValue + 1;
    for (VariableId v = 0; v < csp.variable_count(); ++v) {
        int size = csp.domains().size(v);
        if (size >= 2 && size < best_size) {
            best = v;
            best_size = size;
        }
    }
    return best;
}

std::optional<VariableId> select_first_unassigned(const CspInstance& csp) {
    for (VariableId v = 0; v < csp.variable_count(); ++v) {
        if (csp.domains().size(v) >= 2) return v;
    }
    return std::nullopt;
}

CspSearchResult search_csp(CspInstance& csp, const SearchConfig& config) {
    const auto start = Clock::now();
    CspSearchResult result;
    auto capture = [&] {
        result.assignment = read_assignment(csp);
        return true;
    };
    Walk walk = Searcher(csp, config, result, capture).run();
    switch (walk) {
        case Walk::Found:
            result.status = SearchStatus::Solved;
            break;
        case Walk::Exhausted:
            result.status = SearchStatus::Unsatisfiable;
            break;
        case Walk::Limit:
            result.status = SearchStatus::LimitExceeded;
            break;
    }
    result.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

long long count_csp_solutions(CspInstance& csp, long long cap, const SearchConfig& config) {
    CspSearchResult scratch;
    long long found = 0;
    auto tally = [&] {
        ++found;
        return found >= cap;  // keep enumerating until the cap is hit
    };
    Searcher(csp, config, scratch, tally).run();
    return found;
}

SearchResult solve(const SudokuGrid& grid, const SearchConfig& config) {
    const auto start = Clock::now();
    CspInstance csp = to_csp(grid);
    CspSearchResult inner = search_csp(csp, config);

    SearchResult result;
    result.status = inner.status;
    result.nodes = inner.nodes;
    result.backtracks = inner.backtracks;
    result.propagation = inner.propagation;
    if (inner.status == SearchStatus::Solved) {
        SudokuGrid solution;
        for (int i = 0; i < kGridCells; ++i) {
            solution.set_cell(i, inner.assignment[static_cast<size_t>(i)]);
        }
        result.solution = solution;
    }
    result.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

long long count_solutions(const SudokuGrid& grid, long long cap) {
    if (cap < 1) throw std::invalid_argument("count_solutions: cap must be >= 1");
    CspInstance csp = to_csp(grid);
    return count_csp_solutions(csp, cap);
}

}  // namespace sudocsp
