#include "sudocsp/synthetic.hpp"

#include <stdexcept>
#include <string>

namespace sudocsp {

namespace {

// The embedded font, one 16x16 bitmap per digit ('#' = ink). Strokes are
// two or three pixels wide so that moderate flip noise leaves the shapes
// recognizable.
// clang-format off
const char* const kFont[9][16] = {
    {  // 1
        "................",
        "......####......",
        ".....#####......",
        "....######......",
        "...##.####......",
        "......####......",
        "......####......",
        "......####......",
        "......####......",
        "......####......",
        "......####......",
        "......####......",
        "...###########..",
        "...###########..",
        "................",
        "................",
    },
    {  // 2
        "................",
        "...#########....",
        "...##########...",
        "..........###...",
        "...........##...",
        "..........###...",
        "........####....",
        ".......####.....",
        "......####......",
        ".....####.......",
        "....####........",
        "...####.........",
        "...###########..",
        "...###########..",
        "................",
        "................",
    },
    {  // 3
        "................",
        ".....########...",
        "....#########...",
        "...........###..",
        "............##..",
        "...........###..",
        "......#######...",
        "......########..",
        "............##..",
        ".............##.",
        ".............##.",
        "............##..",
        "....#########...",
        "....########....",
        "................",
        "................",
    },
    {  // 4
        "................",
        "..##......##....",
        "..##......##....",
        "..##......##....",
        "..##......##....",
        "..##......##....",
        "..############..",
        "..############..",
        "..........##....",
        "..........##....",
        "..........##....",
        "..........##....",
        "..........##....",
        "..........##....",
        "................",
        "................",
    },
    {  // 5
        "................",
        "...###########..",
        "...###########..",
        "...##...........",
        "...##...........",
        "...##...........",
        "...##...........",
        "...##########...",
        "............##..",
        ".............##.",
        ".............##.",
        "............##..",
        "...#########....",
        "...########.....",
        "................",
        "................",
    },
    {  // 6
        "................",
        ".........####...",
        "........####....",
        ".......###......",
        "......###.......",
        ".....###........",
        "....##########..",
        "...############.",
        "...##........##.",
        "...##........##.",
        "...##........##.",
        "...##........##.",
        "...############.",
        "....##########..",
        "................",
        "................",
    },
    {  // 7
        "................",
        "..#############.",
        "..#############.",
        "............##..",
        "...........###..",
        "..........###...",
        ".........###....",
        ".........##.....",
        "........###.....",
        "........##......",
        ".......###......",
        ".......##.......",
        "......###.......",
        "......##........",
        "................",
        "................",
    },
    {  // 8
        "................",
        "......#######...",
        ".....#########..",
        ".....##.....##..",
        ".....##.....##..",
        "......#######...",
        "......#######...",
        ".....##.....##..",
        "....##.......##.",
        "....##.......##.",
        "....##.......##.",
        ".....##.....##..",
        "......#######...",
        "......######....",
        "................",
        "................",
    },
    {  // 9
        "................",
        "..#########.....",
        "..##########....",
        "..##......###...",
        "..##.......##...",
        "..##......###...",
        "..##########....",
        "..#########.....",
        "......###.......",
        ".....###........",
        ".....##.........",
        "....###.........",
        "....##..........",
        "...###..........",
        "................",
        "................",
    },
};
// clang-format on

}  // namespace

BinaryImage digit_glyph(int digit) {
    if (digit < 1 || digit > 9) {
        throw std::invalid_argument("digit_glyph: digit " + std::to_string(digit) +
                                    " outside 1..9");
    }
    BinaryImage glyph(kGlyphSize, kGlyphSize);
    for (int y = 0; y < kGlyphSize; ++y) {
        const char* row = kFont[digit - 1][y];
        for (int x = 0; x < kGlyphSize && row[x] != '\0'; ++x) {
            glyph.set(x, y, row[x] == '#');
        }
    }
    return glyph;
}

void apply_flip_noise(BinaryImage& img, double probability, std::mt19937_64& rng) {
    if (probability < 0.0 || probability > 1.0) {
        throw std::invalid_argument("apply_flip_noise: probability must lie in [0, 1]");
    }
    // Compare the top 53 bits of each draw against p * 2^53; exact at both
    // endpoints and identical on every platform.
    const double threshold = probability * 9007199254740992.0;  // 2^53
    for (std::uint8_t& bit : img.bits) {
        if (static_cast<double>(rng() >> 11) < threshold) bit ^= 1;
    }
}

LabeledDataset generate_synthetic(int count_per_digit, double noise, std::uint64_t seed,
                                  Encoding encoding, int cell_size) {
    if (count_per_digit < 1) {
        throw std::invalid_argument("generate_synthetic: count_per_digit must be >= 1");
    }
    std::mt19937_64 rng(seed);
    LabeledDataset dataset(encoding);
    for (int digit = 1; digit <= 9; ++digit) {
        BinaryImage base = resize_nearest(digit_glyph(digit), cell_size, cell_size);
        for (int i = 0; i < count_per_digit; ++i) {
            BinaryImage sample = base;
            apply_flip_noise(sample, noise, rng);
            dataset.add(encode(sample, encoding, cell_size, cell_size), digit);
        }
    }
    return dataset;
}

BinaryImage render_grid(const SudokuGrid& grid, const RenderOptions& options) {
    if (options.glyph_offset < 0 ||
        options.glyph_offset + kGlyphSize > options.cell_size) {
        throw std::invalid_argument("render_grid: glyph box does not fit the cell");
    }
    const int side = 9 * options.cell_size;
    BinaryImage img(side, side);

    if (options.grid_lines) {
        for (int y = 0; y < side; ++y) {
            for (int x = 0; x < side; ++x) {
                if (x % options.cell_size == 0 || y % options.cell_size == 0 ||
                    x == side - 1 || y == side - 1) {
                    img.set(x, y, true);
                }
            }
        }
    }

    for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
            int value = grid.cell(r, c);
            if (value == 0) continue;
            BinaryImage glyph = digit_glyph(value);
            int left = c * options.cell_size + options.glyph_offset;
            int top = r * options.cell_size + options.glyph_offset;
            for (int y = 0; y < kGlyphSize; ++y) {
                for (int x = 0; x < kGlyphSize; ++x) {
                    if (glyph.foreground(x, y)) img.set(left + x, top + y, true);
                }
            }
        }
    }

    if (options.noise > 0.0) {
        std::mt19937_64 rng(options.seed);
        apply_flip_noise(img, options.noise, rng);
    }
    return img;
}

}  // namespace sudocsp
