#pragma once

#include <array>
#include <string>
#include <string_view>

#include "sudocsp/csp.hpp"

namespace sudocsp {

inline constexpr int kGridCells = 81;
inline constexpr int kGridSide = 9;

// 81 cells in row-major order (row * 9 + col); 0 means blank.
struct SudokuGrid {
    std::array<std::uint8_t, kGridCells> cells{};

    int cell(int index) const { return cells[static_cast<size_t>(index)]; }
    int cell(int row, int col) const { return cell(row * kGridSide + col); }
    void set_cell(int index, int value) {
        cells[static_cast<size_t>(index)] = static_cast<std::uint8_t>(value);
    }
    bool blank(int index) const { return cell(index) == 0; }

    int clue_count() const;

    bool operator==(const SudokuGrid&) const = default;
};

enum class UnitKind { Row, Column, Box };

struct UnitIndex {
    UnitKind kind;
    int ordinal;                   // 0..8 within its kind
    std::array<int, 9> members;    // cell indices
};

// The 27 units: rows 0-8, columns 0-8, boxes 0-8 (box ordinal is
// box_row * 3 + box_col). Every cell appears in exactly one unit of each kind.
const std::array<UnitIndex, 27>& sudoku_units();

// Parses a puzzle from text. After stripping whitespace the input must be
// exactly 81 characters over {1-9, 0, '.'}; '0' and '.' both mean blank.
// Throws FormatError naming the offending length or character position.
SudokuGrid parse_grid(std::string_view text);

// Nine lines of nine characters, blanks rendered as '.'.
std::string serialize_grid(const SudokuGrid& grid);

// Single-line form: 81 characters, blanks as '.'.
std::string grid_to_line(const SudokuGrid& grid);

// True when the nonzero cells repeat no value inside any row, column or box.
bool is_valid_puzzle(const SudokuGrid& grid);

// True iff there are no blanks and all 27 units hold 1..9 exactly once.
bool is_solved(const SudokuGrid& grid);

// Builds the binary CSP: 81 variables over values 1..9, a not-equal
// constraint for every pair of distinct cells sharing a unit (one
// constraint per pair even when they share both a line and a box), and
// singleton domains for clue cells. Throws InvalidPuzzle on duplicate clues.
CspInstance to_csp(const SudokuGrid& grid);

// Reads a grid back out of an all-singleton domain store.
SudokuGrid grid_from_singletons(const CspInstance& csp);

}  // namespace sudocsp
