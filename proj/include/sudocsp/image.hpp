#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sudocsp {

// Row-major grayscale raster, intensities 0..255, origin top-left.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), samples(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {}

    std::uint8_t at(int x, int y) const {
        return samples[static_cast<size_t>(y) * static_cast<size_t>(width) +
                       static_cast<size_t>(x)];
    }
    void set(int x, int y, std::uint8_t v) {
        samples[static_cast<size_t>(y) * static_cast<size_t>(width) +
                static_cast<size_t>(x)] = v;
    }
};

// Row-major bitmap; true (1) is foreground ink, false (0) is background.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryImage() = default;
    BinaryImage(int w, int h, bool fill = false)
        : width(w),
          height(h),
          bits(static_cast<size_t>(w) * static_cast<size_t>(h), fill ? 1 : 0) {}

    bool foreground(int x, int y) const {
        return bits[static_cast<size_t>(y) * static_cast<size_t>(width) +
                    static_cast<size_t>(x)] != 0;
    }
    void set(int x, int y, bool fg) {
        bits[static_cast<size_t>(y) * static_cast<size_t>(width) +
             static_cast<size_t>(x)] = fg ? 1 : 0;
    }
    long long foreground_count() const;
    double foreground_fraction() const;

    bool operator==(const BinaryImage&) const = default;
};

// 3x3 neighborhood mask with the origin at the center; the origin cell is
// always set.
class StructuringElement {
public:
    static StructuringElement full3x3();
    static StructuringElement from_mask(const std::array<std::uint8_t, 9>& mask);

    bool at(int dx, int dy) const {  // dx, dy in -1..1
        return mask_[static_cast<size_t>((dy + 1) * 3 + (dx + 1))] != 0;
    }

private:
    StructuringElement() = default;
    std::array<std::uint8_t, 9> mask_{};
};

enum class Encoding { Basic, Inverted, Morphological, PixelCount };

struct FeatureVector {
    Encoding encoding = Encoding::Basic;
    std::vector<double> values;
};

std::string_view to_string(Encoding encoding);

// Accepts "basic", "inverted", "morph"/"morphological", "pcf"/"pixelcount".
std::optional<Encoding> parse_encoding(std::string_view name);

// Foreground iff intensity < threshold (dark ink on a light background).
BinaryImage binarize(const GrayImage& img, int threshold);

// Pixel survives erosion iff every set se offset lands on foreground;
// out-of-bounds neighbors count as background.
BinaryImage erode(const BinaryImage& img, const StructuringElement& se);

// Pixel turns on iff any set se offset lands on foreground.
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

// Dilation minus erosion: the outline of every foreground shape.
BinaryImage morphological_gradient(const BinaryImage& img, const StructuringElement& se);

BinaryImage complement(const BinaryImage& img);

// Nearest-neighbor resample; identity when sizes already match.
BinaryImage resize_nearest(const BinaryImage& img, int new_width, int new_height);

// Per-row foreground counts followed by per-column counts (height + width
// values).
FeatureVector pixel_count_profiles(const BinaryImage& img);

// Cuts a square image whose side is divisible by 9 into 81 row-major cells,
// cropping floor(margin_fraction * cell_side) pixels off each side to drop
// grid lines. Throws FormatError for other shapes.
std::vector<BinaryImage> split_grid(const BinaryImage& img, double margin_fraction);

// True when the cell's foreground fraction is strictly below ink_threshold.
bool is_blank_cell(const BinaryImage& cell, double ink_threshold);

// Encodes a cell of exactly width x height pixels; throws
// std::invalid_argument naming expected vs actual dimensions otherwise.
FeatureVector encode(const BinaryImage& cell, Encoding encoding, int width, int height);

}  // namespace sudocsp
