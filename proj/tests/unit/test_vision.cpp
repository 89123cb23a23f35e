#include <doctest.h>

#include <random>
#include <string>

#include "sudocsp/errors.hpp"
#include "sudocsp/image.hpp"

using namespace sudocsp;

namespace {

BinaryImage random_image(std::mt19937_64& rng, int max_side = 32) {
    int w = 1 + static_cast<int>(rng() % max_side);
    int h = 1 + static_cast<int>(rng() % max_side);
    BinaryImage img(w, h);
    for (auto& bit : img.bits) bit = rng() % 2;
    return img;
}

bool subset(const BinaryImage& inner, const BinaryImage& outer) {
    for (size_t i = 0; i < inner.bits.size(); ++i) {
        if (inner.bits[i] != 0 && outer.bits[i] == 0) return false;
    }
    return true;
}

const StructuringElement kFull = StructuringElement::full3x3();

}  // namespace

TEST_CASE("binarize uses a strict less-than threshold") {
    GrayImage black(3, 3, 0);
    CHECK(binarize(black, 128).foreground_count() == 9);

    GrayImage white(3, 3, 255);
    CHECK(binarize(white, 128).foreground_count() == 0);

    GrayImage boundary(1, 1, 128);
    CHECK(binarize(boundary, 128).foreground_count() == 0);
    CHECK(binarize(GrayImage(1, 1, 127), 128).foreground_count() == 1);
}

TEST_CASE("erosion with the full kernel keeps only interior pixels") {
    BinaryImage full(3, 3, true);
    BinaryImage eroded = erode(full, kFull);
    CHECK(eroded.foreground_count() == 1);
    CHECK(eroded.foreground(1, 1));

    BinaryImage lone(5, 5);
    lone.set(2, 2, true);
    CHECK(erode(lone, kFull).foreground_count() == 0);

    BinaryImage empty(4, 4);
    CHECK(erode(empty, kFull) == empty);
}

TEST_CASE("dilation grows a lone pixel into a block") {
    BinaryImage lone(5, 5);
    lone.set(2, 2, true);
    BinaryImage grown = dilate(lone, kFull);
    CHECK(grown.foreground_count() == 9);
    for (int y = 1; y <= 3; ++y) {
        for (int x = 1; x <= 3; ++x) CHECK(grown.foreground(x, y));
    }

    BinaryImage empty(4, 4);
    CHECK(dilate(empty, kFull) == empty);
    BinaryImage full(4, 4, true);
    CHECK(dilate(full, kFull) == full);
}

TEST_CASE("gradient of a centered block is the block ring") {
    BinaryImage img(5, 5);
    for (int y = 1; y <= 3; ++y) {
        for (int x = 1; x <= 3; ++x) img.set(x, y, true);
    }
    BinaryImage gradient = morphological_gradient(img, kFull);
    CHECK(gradient.foreground_count() == 24);  // everything except the center
    CHECK_FALSE(gradient.foreground(2, 2));

    BinaryImage empty(6, 6);
    CHECK(morphological_gradient(empty, kFull) == empty);
}

TEST_CASE("gradient covers every boundary pixel of every component") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        BinaryImage img = random_image(rng, 16);
        BinaryImage gradient = morphological_gradient(img, kFull);
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                if (!img.foreground(x, y)) continue;
                bool boundary = false;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = x + dx, ny = y + dy;
                        bool bg = nx < 0 || ny < 0 || nx >= img.width ||
                                  ny >= img.height || !img.foreground(nx, ny);
                        if (bg) boundary = true;
                    }
                }
                if (boundary) CHECK(gradient.foreground(x, y));
            }
        }
    }
}

TEST_CASE("morphology properties hold on random images") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 300; ++round) {
        BinaryImage img = random_image(rng);
        BinaryImage eroded = erode(img, kFull);
        BinaryImage dilated = dilate(img, kFull);
        BinaryImage gradient = morphological_gradient(img, kFull);

        CHECK(subset(eroded, img));
        CHECK(subset(img, dilated));
        for (size_t i = 0; i < img.bits.size(); ++i) {
            bool overlap = gradient.bits[i] != 0 && eroded.bits[i] != 0;
            CHECK_FALSE(overlap);
        }
        // duality with the symmetric kernel: eroding the complement
        // complements the dilation. Out-of-bounds pixels read as background
        // on both sides, which complement cannot flip, so the outermost
        // pixel ring is exempt.
        BinaryImage dual = erode(complement(img), kFull);
        for (int y = 1; y + 1 < img.height; ++y) {
            for (int x = 1; x + 1 < img.width; ++x) {
                CHECK(dual.foreground(x, y) == !dilated.foreground(x, y));
            }
        }
    }
}

TEST_CASE("profiles count rows first, then columns") {
    BinaryImage diagonal(3, 3);
    for (int i = 0; i < 3; ++i) diagonal.set(i, i, true);
    FeatureVector profile = pixel_count_profiles(diagonal);
    CHECK(profile.encoding == Encoding::PixelCount);
    CHECK(profile.values == std::vector<double>{1, 1, 1, 1, 1, 1});

    FeatureVector empty = pixel_count_profiles(BinaryImage(4, 4));
    CHECK(empty.values == std::vector<double>(8, 0.0));

    BinaryImage tall(2, 3);
    tall.set(0, 0, true);
    tall.set(1, 0, true);
    tall.set(0, 2, true);
    FeatureVector fv = pixel_count_profiles(tall);
    CHECK(fv.values == std::vector<double>{2, 0, 1, 2, 1});
}

TEST_CASE("profile sums agree with the foreground count") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        BinaryImage img = random_image(rng);
        FeatureVector fv = pixel_count_profiles(img);
        double rows = 0, cols = 0;
        for (int y = 0; y < img.height; ++y) rows += fv.values[static_cast<size_t>(y)];
        for (int x = 0; x < img.width; ++x) {
            cols += fv.values[static_cast<size_t>(img.height + x)];
        }
        CHECK(rows == static_cast<double>(img.foreground_count()));
        CHECK(cols == static_cast<double>(img.foreground_count()));
    }
}

TEST_CASE("split_grid crops margins and validates dimensions") {
    BinaryImage img(90, 90);
    auto cells = split_grid(img, 0.15);
    CHECK(cells.size() == 81);
    for (const auto& cell : cells) {
        CHECK(cell.width == 8);
        CHECK(cell.height == 8);
    }

    CHECK_THROWS_AS(split_grid(BinaryImage(91, 91), 0.15), FormatError);
    CHECK_THROWS_AS(split_grid(BinaryImage(90, 81), 0.15), FormatError);
    CHECK_THROWS_AS(split_grid(img, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(split_grid(img, 0.4), std::invalid_argument);
}

TEST_CASE("split_grid with zero margin partitions the image exactly") {
    std::mt19937_64 rng(51);
    BinaryImage img(45, 45);
    for (auto& bit : img.bits) bit = rng() % 2;

    auto cells = split_grid(img, 0.0);
    BinaryImage rebuilt(45, 45);
    for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
            const BinaryImage& cell = cells[static_cast<size_t>(r * 9 + c)];
            CHECK(cell.width == 5);
            for (int y = 0; y < 5; ++y) {
                for (int x = 0; x < 5; ++x) {
                    rebuilt.set(c * 5 + x, r * 5 + y, cell.foreground(x, y));
                }
            }
        }
    }
    CHECK(rebuilt == img);
}

TEST_CASE("blank detection uses a strict threshold on ink fraction") {
    BinaryImage empty(10, 10);
    CHECK(is_blank_cell(empty, 0.02));

    BinaryImage full(10, 10, true);
    CHECK_FALSE(is_blank_cell(full, 0.02));

    BinaryImage two_percent(10, 10);
    two_percent.set(0, 0, true);
    two_percent.set(5, 5, true);
    CHECK_FALSE(is_blank_cell(two_percent, 0.02));  // exactly at threshold
    CHECK(is_blank_cell(two_percent, 0.021));

    CHECK_THROWS_AS(is_blank_cell(empty, 1.5), std::invalid_argument);
}

TEST_CASE("encodings produce the documented vectors") {
    BinaryImage cell(3, 3);
    cell.set(1, 1, true);

    FeatureVector basic = encode(cell, Encoding::Basic, 3, 3);
    CHECK(basic.values == std::vector<double>{0, 0, 0, 0, 1, 0, 0, 0, 0});

    FeatureVector inverted = encode(cell, Encoding::Inverted, 3, 3);
    CHECK(inverted.values == std::vector<double>{1, 1, 1, 1, 0, 1, 1, 1, 1});

    // inverting twice lands back on the basic encoding
    FeatureVector twice = encode(complement(cell), Encoding::Inverted, 3, 3);
    CHECK(twice.values == basic.values);

    FeatureVector zero = encode(BinaryImage(3, 3), Encoding::Basic, 3, 3);
    CHECK(zero.values == std::vector<double>(9, 0.0));

    BinaryImage diagonal(3, 3);
    for (int i = 0; i < 3; ++i) diagonal.set(i, i, true);
    FeatureVector pcf = encode(diagonal, Encoding::PixelCount, 3, 3);
    CHECK(pcf.values == std::vector<double>{1, 1, 1, 1, 1, 1});

    FeatureVector morph = encode(cell, Encoding::Morphological, 3, 3);
    CHECK(morph.values == std::vector<double>{1, 1, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("encode names expected and actual dimensions on mismatch") {
    try {
        encode(BinaryImage(4, 4), Encoding::Basic, 16, 16);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string message = e.what();
        CHECK(message.find("16x16") != std::string::npos);
        CHECK(message.find("4x4") != std::string::npos);
    }
}

TEST_CASE("nearest-neighbor resize is identity at equal sizes") {
    std::mt19937_64 rng(61);
    BinaryImage img = random_image(rng);
    CHECK(resize_nearest(img, img.width, img.height) == img);

    BinaryImage half = resize_nearest(BinaryImage(8, 8, true), 4, 4);
    CHECK(half.foreground_count() == 16);
    CHECK_THROWS_AS(resize_nearest(img, 0, 4), std::invalid_argument);
}

TEST_CASE("structuring elements require their origin") {
    std::array<std::uint8_t, 9> no_center{1, 1, 1, 1, 0, 1, 1, 1, 1};
    CHECK_THROWS_AS(StructuringElement::from_mask(no_center), std::invalid_argument);

    std::array<std::uint8_t, 9> cross{0, 1, 0, 1, 1, 1, 0, 1, 0};
    StructuringElement se = StructuringElement::from_mask(cross);
    CHECK(se.at(0, 0));
    CHECK_FALSE(se.at(-1, -1));

    // cross erosion keeps pixels whose 4-neighborhood is solid
    BinaryImage block(3, 3, true);
    CHECK(erode(block, se).foreground_count() == 1);
}
