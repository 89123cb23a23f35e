#include "sudocsp/recognize.hpp"

namespace sudocsp {

std::string recognize_grid(const BinaryImage& img, const KnnModel& model,
                           const RecognizeOptions& options) {
    std::vector<BinaryImage> cells = split_grid(img, options.margin_fraction);
    const Encoding encoding = model.dataset().encoding();

    std::string line;
    line.reserve(cells.size());
    for (const BinaryImage& cell : cells) {
        if (is_blank_cell(cell, options.ink_threshold)) {
            line.push_back('.');
            continue;
        }
        BinaryImage resized = resize_nearest(cell, options.cell_size, options.cell_size);
        FeatureVector feature =
            encode(resized, encoding, options.cell_size, options.cell_size);
        line.push_back(static_cast<char>('0' + model.predict(feature).label));
    }
    return line;
}

}  // namespace sudocsp
