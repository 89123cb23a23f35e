#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "sudocsp/knn.hpp"

namespace sudocsp {

// IDX is the big-endian container used by the MNIST distribution:
// images  = magic 0x00000803, count, rows, cols, count*rows*cols bytes
// labels  = magic 0x00000801, count, count label bytes
struct IdxOptions {
    Encoding encoding = Encoding::Morphological;
    int cell_size = 16;           // images are resized to cell_size^2
    int binarize_threshold = 128;
    bool invert = false;          // set for ink-bright sources such as MNIST
    bool drop_zero_labels = true; // Sudoku has no zero glyph
};

LabeledDataset load_idx(const std::string& images_path, const std::string& labels_path,
                        const IdxOptions& options = {});

LabeledDataset parse_idx(std::span<const std::uint8_t> images,
                         std::span<const std::uint8_t> labels,
                         const IdxOptions& options = {});

}  // namespace sudocsp
