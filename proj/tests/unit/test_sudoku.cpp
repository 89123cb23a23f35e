#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sudocsp/errors.hpp"
#include "sudocsp/sudoku.hpp"

using namespace sudocsp;

namespace {

constexpr const char* kReferencePuzzle =
    "530070000600195000098000060800060003400803001700020006060000280000419005000080079";

SudokuGrid random_grid(std::mt19937_64& rng) {
    SudokuGrid grid;
    for (int i = 0; i < 81; ++i) {
        grid.set_cell(i, static_cast<int>(rng() % 10));
    }
    return grid;
}

}  // namespace

TEST_CASE("parse_grid reads the reference puzzle") {
    SudokuGrid grid = parse_grid(kReferencePuzzle);
    CHECK(grid.cell(0) == 5);
    CHECK(grid.cell(1) == 3);
    CHECK(grid.cell(2) == 0);
    CHECK(grid.cell(4) == 7);
    CHECK(grid.cell(80) == 9);
    CHECK(grid.clue_count() == 30);
}

TEST_CASE("parse_grid accepts dots, zeros and embedded whitespace") {
    SudokuGrid dots = parse_grid(std::string(81, '.'));
    CHECK(dots == SudokuGrid{});
    std::string spaced;
    for (int i = 0; i < 81; ++i) {
        spaced += (i % 2 == 0) ? "0" : ".";
        if (i % 9 == 8) spaced += "\n";
    }
    CHECK(parse_grid(spaced) == SudokuGrid{});
}

TEST_CASE("parse_grid reports bad lengths with the offending count") {
    try {
        parse_grid(std::string(80, '.'));
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("80") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_grid(std::string(82, '.')), FormatError);
}

TEST_CASE("parse_grid reports bad characters with their position") {
    std::string text(81, '.');
    text[17] = 'x';
    try {
        parse_grid(text);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        std::string message = e.what();
        CHECK(message.find("'x'") != std::string::npos);
        CHECK(message.find("17") != std::string::npos);
    }
}

TEST_CASE("serialize_grid emits nine lines, blanks as dots") {
    std::string blank = serialize_grid(SudokuGrid{});
    CHECK(blank == std::string(
        ".........\n.........\n.........\n.........\n.........\n"
        ".........\n.........\n.........\n.........\n"));
    std::string reference = serialize_grid(parse_grid(kReferencePuzzle));
    CHECK(reference.substr(0, 10) == "53..7....\n");
}

TEST_CASE("parse and serialize round-trip on random grids") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        SudokuGrid grid = random_grid(rng);
        CHECK(parse_grid(serialize_grid(grid)) == grid);
        CHECK(parse_grid(grid_to_line(grid)) == grid);
    }
}

TEST_CASE("the 27 units cover each cell exactly once per kind") {
    const auto& units = sudoku_units();
    CHECK(units.size() == 27);
    std::array<int, 81> row_hits{}, col_hits{}, box_hits{};
    for (const UnitIndex& unit : units) {
        std::set<int> distinct(unit.members.begin(), unit.members.end());
        CHECK(distinct.size() == 9);
        for (int cell : unit.members) {
            switch (unit.kind) {
                case UnitKind::Row: ++row_hits[static_cast<size_t>(cell)]; break;
                case UnitKind::Column: ++col_hits[static_cast<size_t>(cell)]; break;
                case UnitKind::Box: ++box_hits[static_cast<size_t>(cell)]; break;
            }
        }
    }
    for (int i = 0; i < 81; ++i) {
        CHECK(row_hits[static_cast<size_t>(i)] == 1);
        CHECK(col_hits[static_cast<size_t>(i)] == 1);
        CHECK(box_hits[static_cast<size_t>(i)] == 1);
    }
}

TEST_CASE("to_csp of the blank grid has full domains and 1620 arcs") {
    CspInstance csp = to_csp(SudokuGrid{});
    CHECK(csp.arcs().size() == 1620);  // 810 unordered pairs
    for (int v = 0; v < 81; ++v) CHECK(csp.domains().mask(v) == full_domain(9));
}

TEST_CASE("to_csp gives clues singleton domains and keeps blanks full") {
    CspInstance csp = to_csp(parse_grid(kReferencePuzzle));
    CHECK(csp.domains().mask(0) == value_bit(5));
    CHECK(csp.domains().mask(2) == full_domain(9));

    SudokuGrid reference = parse_grid(kReferencePuzzle);
    for (int i = 0; i < 81; ++i) {
        if (reference.blank(i)) {
            CHECK(csp.domains().size(i) == 9);
        } else {
            CHECK(csp.domains().sole_value(i) == reference.cell(i));
        }
    }
}

TEST_CASE("to_csp rejects duplicate clues") {
    SudokuGrid grid;
    grid.set_cell(0, 5);
    grid.set_cell(3, 5);  // same row
    CHECK_FALSE(is_valid_puzzle(grid));
    CHECK_THROWS_AS(to_csp(grid), InvalidPuzzle);

    SudokuGrid box_dup;
    box_dup.set_cell(0, 7);
    box_dup.set_cell(10, 7);  // same box, different row and column
    CHECK_THROWS_AS(to_csp(box_dup), InvalidPuzzle);
}

TEST_CASE("is_solved accepts only complete legal grids") {
    SudokuGrid reference = parse_grid(kReferencePuzzle);
    CHECK_FALSE(is_solved(reference));

    auto solved = oracles::brute_force_solve(reference);
    REQUIRE(solved.has_value());
    CHECK(is_solved(*solved));

    SudokuGrid swapped = *solved;
    swapped.set_cell(0, solved->cell(1));
    swapped.set_cell(1, solved->cell(0));
    CHECK_FALSE(is_solved(swapped));
}

TEST_CASE("grid_from_singletons reads a solved store back") {
    auto solved = oracles::brute_force_solve(parse_grid(kReferencePuzzle));
    REQUIRE(solved.has_value());
    CspInstance csp = to_csp(*solved);
    CHECK(grid_from_singletons(csp) == *solved);
}
