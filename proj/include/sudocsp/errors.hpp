#pragma once

#include <stdexcept>

namespace sudocsp {

// Input data that does not match its declared format (puzzle text, PNM, IDX).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A grid that parses but breaks the puzzle rules (duplicate clue in a unit).
struct InvalidPuzzle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sudocsp
