#pragma once

#include <optional>
#include <vector>

#include "sudocsp/arc_consistency.hpp"
#include "sudocsp/csp.hpp"
#include "sudocsp/sudoku.hpp"

namespace sudocsp {

enum class Heuristic { Mrv, FirstUnassigned };

struct SearchConfig {
    AcAlgorithm algorithm = AcAlgorithm::Ac3;
    Heuristic heuristic = Heuristic::Mrv;
    std::optional<long long> node_limit;      // assignments tried
    std::optional<double> time_limit_seconds;
};

enum class SearchStatus { Solved, Unsatisfiable, LimitExceeded };

struct CspSearchResult {
    SearchStatus status = SearchStatus::Unsatisfiable;
    std::vector<int> assignment;  // one value per variable when Solved
    long long nodes = 0;          // assignments tried
    long long backtracks = 0;     // failed assignments undone
    double wall_seconds = 0.0;
    PropagationStats propagation;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Unsatisfiable;
    std::optional<SudokuGrid> solution;
    long long nodes = 0;
    long long backtracks = 0;
    double wall_seconds = 0.0;
    PropagationStats propagation;
};

// MRV: among variables with two or more candidates, the one with the
// smallest domain (ties to the lowest index); nullopt when every domain is
// a singleton.
std::optional<VariableId> select_variable_mrv(const CspInstance& csp);

// Lowest-index variable with two or more candidates.
std::optional<VariableId> select_first_unassigned(const CspInstance& csp);

// Depth-first search with maintained arc consistency: propagate once at the
// root, then repeatedly pick a variable, assign each candidate value in
// ascending order, and re-propagate; wipeouts roll back to the snapshot
// taken before the assignment. On return the store holds its
// post-root-propagation state again (every snapshot has been restored).
CspSearchResult search_csp(CspInstance& csp, const SearchConfig& config = {});

// Number of distinct solutions, stopping once cap are found.
long long count_csp_solutions(CspInstance& csp, long long cap,
                              const SearchConfig& config = {});

// Sudoku front end: builds the CSP (InvalidPuzzle propagates out of to_csp)
// and runs search_csp. Solved results always pass is_solved.
SearchResult solve(const SudokuGrid& grid, const SearchConfig& config = {});

long long count_solutions(const SudokuGrid& grid, long long cap);

}  // namespace sudocsp
