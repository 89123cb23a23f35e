#pragma once

#include <string>

#include "sudocsp/image.hpp"
#include "sudocsp/knn.hpp"

namespace sudocsp {

struct RecognizeOptions {
    double margin_fraction = 0.15;
    double ink_threshold = 0.02;
    int cell_size = 16;  // classifier input side; must match the model
};

// Splits a grid raster into 81 cells and reads each one: cells under the
// ink threshold become '.', the rest are resized, encoded with the model's
// training encoding and classified. Returns the 81-character puzzle line.
std::string recognize_grid(const BinaryImage& img, const KnnModel& model,
                           const RecognizeOptions& options = {});

}  // namespace sudocsp
