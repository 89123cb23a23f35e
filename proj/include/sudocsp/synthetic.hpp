#pragma once

#include <cstdint>
#include <random>

#include "sudocsp/knn.hpp"
#include "sudocsp/sudoku.hpp"

namespace sudocsp {

inline constexpr int kGlyphSize = 16;

// Built-in 16x16 bitmap of a digit 1..9.
BinaryImage digit_glyph(int digit);

// Flips each pixel independently with the given probability. probability 0
// never flips, probability 1 flips every pixel; decisions are driven only
// by raw engine draws so results are identical across platforms.
void apply_flip_noise(BinaryImage& img, double probability, std::mt19937_64& rng);

// count_per_digit noisy renderings of every digit 1..9, encoded at
// cell_size x cell_size. Deterministic for a fixed seed.
LabeledDataset generate_synthetic(int count_per_digit, double noise, std::uint64_t seed,
                                  Encoding encoding, int cell_size = kGlyphSize);

struct RenderOptions {
    int cell_size = 22;    // grid image side is 9 * cell_size
    int glyph_offset = 3;  // glyph box inset inside its cell
    bool grid_lines = true;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

// Draws a puzzle as a raster: one glyph per clue cell, optional one-pixel
// grid lines on cell boundaries, then flip noise over the whole image.
BinaryImage render_grid(const SudokuGrid& grid, const RenderOptions& options = {});

}  // namespace sudocsp
