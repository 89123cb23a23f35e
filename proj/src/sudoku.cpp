#include "sudocsp/sudoku.hpp"

#include <cctype>

#include "sudocsp/errors.hpp"

namespace sudocsp {

namespace {

const char* unit_kind_name(UnitKind kind) {
    switch (kind) {
        case UnitKind::Row:
            return "row";
        case UnitKind::Column:
            return "column";
        case UnitKind::Box:
            return "box";
    }
    return "?";
}

std::array<UnitIndex, 27> build_units() {
    std::array<UnitIndex, 27> units{};
    int u = 0;
    for (int r = 0; r < 9; ++r) {
        UnitIndex& unit = units[static_cast<size_t>(u++)];
        unit.kind = UnitKind::Row;
        unit.ordinal = r;
        for (int c = 0; c < 9; ++c) unit.members[static_cast<size_t>(c)] = r * 9 + c;
    }
    for (int c = 0; c < 9; ++c) {
        UnitIndex& unit = units[static_cast<size_t>(u++)];
        unit.kind = UnitKind::Column;
        unit.ordinal = c;
        for (int r = 0; r < 9; ++r) unit.members[static_cast<size_t>(r)] = r * 9 + c;
    }
    for (int b = 0; b < 9; ++b) {
        UnitIndex& unit = units[static_cast<size_t>(u++)];
        unit.kind = UnitKind::Box;
        unit.ordinal = b;
        int top = (b / 3) * 27 + (b % 3) * 3;
        for (int k = 0; k < 9; ++k) {
            unit.members[static_cast<size_t>(k)] = top + (k / 3) * 9 + (k % 3);
        }
    }
    return units;
}

bool share_unit(int a, int b) {
    int ra = a / 9, ca = a % 9;
    int rb = b / 9, cb = b % 9;
    if (ra == rb || ca == cb) return true;
    return (ra / 3 == rb / 3) && (ca / 3 == cb / 3);
}

}  // namespace

int SudokuGrid::clue_count() const {
    int n = 0;
    for (int i = 0; i < kGridCells; ++i) {
        if (!blank(i)) ++n;
    }
    return n;
}

const std::array<UnitIndex, 27>& sudoku_units() {
    static const std::array<UnitIndex, 27> units = build_units();
    return units;
}

SudokuGrid parse_grid(std::string_view text) {
    SudokuGrid grid;
    int filled = 0;
    for (size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (filled == kGridCells) {
            // Count the rest so the error can report the real length.
            int extra = 1;
            for (size_t rest = pos + 1; rest < text.size(); ++rest) {
                if (!std::isspace(static_cast<unsigned char>(text[rest]))) ++extra;
            }
            throw FormatError("puzzle text has " + std::to_string(kGridCells + extra) +
                              " characters, expected 81");
        }
        if (c == '.' || c == '0') {
            grid.set_cell(filled++, 0);
        } else if (c >= '1' && c <= '9') {
            grid.set_cell(filled++, c - '0');
        } else {
            throw FormatError(std::string("invalid character '") + c +
                              "' at position " + std::to_string(pos));
        }
    }
    if (filled != kGridCells) {
        throw FormatError("puzzle text has " + std::to_string(filled) +
                          " characters, expected 81");
    }
    return grid;
}

std::string serialize_grid(const SudokuGrid& grid) {
    std::string out;
    out.reserve(kGridCells + kGridSide);
    for (int r = 0; r < kGridSide; ++r) {
        for (int c = 0; c < kGridSide; ++c) {
            int v = grid.cell(r, c);
            out.push_back(v == 0 ? '.' : static_cast<char>('0' + v));
        }
        out.push_back('\n');
    }
    return out;
}

std::string grid_to_line(const SudokuGrid& grid) {
    std::string out;
    out.reserve(kGridCells);
    for (int i = 0; i < kGridCells; ++i) {
        int v = grid.cell(i);
        out.push_back(v == 0 ? '.' : static_cast<char>('0' + v));
    }
    return out;
}

bool is_valid_puzzle(const SudokuGrid& grid) {
    for (const UnitIndex& unit : sudoku_units()) {
        DomainMask seen = 0;
        for (int cell : unit.members) {
            int v = grid.cell(cell);
            if (v == 0) continue;
            if (mask_contains(seen, v)) return false;
            seen |= value_bit(v);
        }
    }
    return true;
}

bool is_solved(const SudokuGrid& grid) {
    for (const UnitIndex& unit : sudoku_units()) {
        DomainMask seen = 0;
        for (int cell : unit.members) {
            int v = grid.cell(cell);
            if (v == 0) return false;
            seen |= value_bit(v);
        }
        if (seen != full_domain(9)) return false;
    }
    return true;
}

CspInstance to_csp(const SudokuGrid& grid) {
    for (const UnitIndex& unit : sudoku_units()) {
        DomainMask seen = 0;
        for (int cell : unit.members) {
            int v = grid.cell(cell);
            if (v == 0) continue;
            if (mask_contains(seen, v)) {
                throw InvalidPuzzle("duplicate clue " + std::to_string(v) + " in " +
                                    unit_kind_name(unit.kind) + " " +
                                    std::to_string(unit.ordinal));
            }
            seen |= value_bit(v);
        }
    }

    CspInstance csp(kGridCells, 9);
    const Relation not_equal = Relation::not_equal(9);
    for (int a = 0; a < kGridCells; ++a) {
        for (int b = a + 1; b < kGridCells; ++b) {
            if (share_unit(a, b)) csp.add_constraint(a, b, not_equal);
        }
    }
    for (int i = 0; i < kGridCells; ++i) {
        if (!grid.blank(i)) csp.domains().assign(i, grid.cell(i));
    }
    return csp;
}

SudokuGrid grid_from_singletons(const CspInstance& csp) {
    SudokuGrid grid;
    for (int i = 0; i < kGridCells; ++i) {
        grid.set_cell(i, csp.domains().sole_value(i));
    }
    return grid;
}

}  // namespace sudocsp
