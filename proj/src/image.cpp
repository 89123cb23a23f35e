#include "sudocsp/image.hpp"

#include <stdexcept>
#include <string>

#include "sudocsp/errors.hpp"

namespace sudocsp {

long long BinaryImage::foreground_count() const {
    long long n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
}

double BinaryImage::foreground_fraction() const {
    if (bits.empty()) return 0.0;
    return static_cast<double>(foreground_count()) / static_cast<double>(bits.size());
}

StructuringElement StructuringElement::full3x3() {
    StructuringElement se;
    se.mask_.fill(1);
    return se;
}

StructuringElement StructuringElement::from_mask(const std::array<std::uint8_t, 9>& mask) {
    if (mask[4] == 0) {
        throw std::invalid_argument("structuring element must contain its origin");
    }
    StructuringElement se;
    se.mask_ = mask;
    return se;
}

std::string_view to_string(Encoding encoding) {
    switch (encoding) {
        case Encoding::Basic:
            return "basic";
        case Encoding::Inverted:
            return "inverted";
        case Encoding::Morphological:
            return "morphological";
        case Encoding::PixelCount:
            return "pixel-count";
    }
    return "?";
}

std::optional<Encoding> parse_encoding(std::string_view name) {
    if (name == "basic") return Encoding::Basic;
    if (name == "inverted") return Encoding::Inverted;
    if (name == "morph" || name == "morphological") return Encoding::Morphological;
    if (name == "pcf" || name == "pixelcount" || name == "pixel-count") {
        return Encoding::PixelCount;
    }
    return std::nullopt;
}

BinaryImage binarize(const GrayImage& img, int threshold) {
    BinaryImage out(img.width, img.height);
    for (size_t i = 0; i < img.samples.size(); ++i) {
        out.bits[i] = img.samples[i] < threshold ? 1 : 0;
    }
    return out;
}

namespace {

template <bool RequireAll>
BinaryImage apply_se(const BinaryImage& img, const StructuringElement& se) {
    BinaryImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            bool hit = RequireAll;
            for (int dy = -1; dy <= 1 && hit == RequireAll; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (!se.at(dx, dy)) continue;
                    int nx = x + dx;
                    int ny = y + dy;
                    bool fg = nx >= 0 && nx < img.width && ny >= 0 && ny < img.height &&
                              img.foreground(nx, ny);
                    if (RequireAll && !fg) {
                        hit = false;
                        break;
                    }
                    if (!RequireAll && fg) {
                        hit = true;
                        break;
                    }
                }
            }
            out.set(x, y, hit);
        }
    }
    return out;
}

}  // namespace

BinaryImage erode(const BinaryImage& img, const StructuringElement& se) {
    return apply_se<true>(img, se);
}

BinaryImage dilate(const BinaryImage& img, const StructuringElement& se) {
    return apply_se<false>(img, se);
}

BinaryImage morphological_gradient(const BinaryImage& img, const StructuringElement& se) {
    BinaryImage grown = dilate(img, se);
    BinaryImage shrunk = erode(img, se);
    BinaryImage out(img.width, img.height);
    for (size_t i = 0; i < out.bits.size(); ++i) {
        out.bits[i] = (grown.bits[i] != 0 && shrunk.bits[i] == 0) ? 1 : 0;
    }
    return out;
}

BinaryImage complement(const BinaryImage& img) {
    BinaryImage out(img.width, img.height);
    for (size_t i = 0; i < out.bits.size(); ++i) {
        out.bits[i] = img.bits[i] != 0 ? 0 : 1;
    }
    return out;
}

BinaryImage resize_nearest(const BinaryImage& img, int new_width, int new_height) {
    if (new_width < 1 || new_height < 1 || img.width < 1 || img.height < 1) {
        throw std::invalid_argument("resize_nearest: sizes must be positive");
    }
    if (new_width == img.width && new_height == img.height) return img;
    BinaryImage out(new_width, new_height);
    for (int y = 0; y < new_height; ++y) {
        int sy = static_cast<int>(static_cast<long long>(y) * img.height / new_height);
        for (int x = 0; x < new_width; ++x) {
            int sx = static_cast<int>(static_cast<long long>(x) * img.width / new_width);
            out.set(x, y, img.foreground(sx, sy));
        }
    }
    return out;
}

FeatureVector pixel_count_profiles(const BinaryImage& img) {
    FeatureVector fv;
    fv.encoding = Encoding::PixelCount;
    fv.values.reserve(static_cast<size_t>(img.height + img.width));
    for (int y = 0; y < img.height; ++y) {
        int count = 0;
        for (int x = 0; x < img.width; ++x) count += img.foreground(x, y) ? 1 : 0;
        fv.values.push_back(count);
    }
    for (int x = 0; x < img.width; ++x) {
        int count = 0;
        for (int y = 0; y < img.height; ++y) count += img.foreground(x, y) ? 1 : 0;
        fv.values.push_back(count);
    }
    return fv;
}

std::vector<BinaryImage> split_grid(const BinaryImage& img, double margin_fraction) {
    if (margin_fraction < 0.0 || margin_fraction >= 0.4) {
        throw std::invalid_argument("split_grid: margin_fraction must lie in [0, 0.4)");
    }
    if (img.width != img.height || img.width % 9 != 0 || img.width == 0) {
        throw FormatError("split_grid: expected a square image with side divisible by 9, got " +
                          std::to_string(img.width) + "x" + std::to_string(img.height));
    }
    const int cell = img.width / 9;
    const int crop = static_cast<int>(margin_fraction * cell);
    const int inner = cell - 2 * crop;

    std::vector<BinaryImage> cells;
    cells.reserve(81);
    for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
            BinaryImage piece(inner, inner);
            for (int y = 0; y < inner; ++y) {
                for (int x = 0; x < inner; ++x) {
                    piece.set(x, y, img.foreground(c * cell + crop + x, r * cell + crop + y));
                }
            }
            cells.push_back(std::move(piece));
        }
    }
    return cells;
}

bool is_blank_cell(const BinaryImage& cell, double ink_threshold) {
    if (ink_threshold < 0.0 || ink_threshold > 1.0) {
        throw std::invalid_argument("is_blank_cell: ink_threshold must lie in [0, 1]");
    }
    return cell.foreground_fraction() < ink_threshold;
}

FeatureVector encode(const BinaryImage& cell, Encoding encoding, int width, int height) {
    if (cell.width != width || cell.height != height) {
        throw std::invalid_argument("encode: expected a " + std::to_string(width) + "x" +
                                    std::to_string(height) + " cell, got " +
                                    std::to_string(cell.width) + "x" +
                                    std::to_string(cell.height));
    }
    FeatureVector fv;
    fv.encoding = encoding;
    switch (encoding) {
        case Encoding::Basic:
        case Encoding::Inverted: {
            bool invert = encoding == Encoding::Inverted;
            fv.values.reserve(cell.bits.size());
            for (std::uint8_t b : cell.bits) {
                fv.values.push_back((b != 0) != invert ? 1.0 : 0.0);
            }
            break;
        }
        case Encoding::Morphological: {
            BinaryImage gradient =
                morphological_gradient(cell, StructuringElement::full3x3());
            fv.values.reserve(gradient.bits.size());
            for (std::uint8_t b : gradient.bits) fv.values.push_back(b != 0 ? 1.0 : 0.0);
            break;
        }
        case Encoding::PixelCount:
            fv = pixel_count_profiles(cell);
            break;
    }
    return fv;
}

}  // namespace sudocsp
