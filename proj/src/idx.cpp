#include "sudocsp/idx.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "sudocsp/errors.hpp"

namespace sudocsp {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;
constexpr std::uint32_t kLabelsMagic = 0x00000801;

std::uint32_t read_u32(std::span<const std::uint8_t> data, size_t offset,
                       const char* what) {
    if (offset + 4 > data.size()) {
        throw FormatError(std::string("IDX file truncated reading ") + what);
    }
    return (std::uint32_t(data[offset]) << 24) | (std::uint32_t(data[offset + 1]) << 16) |
           (std::uint32_t(data[offset + 2]) << 8) | std::uint32_t(data[offset + 3]);
}

std::string hex_magic(std::uint32_t magic) {
    std::ostringstream out;
    out << "0x" << std::hex << std::setw(8) << std::setfill('0') << magic;
    return out.str();
}

std::vector<std::uint8_t> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open IDX file: " + path);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

}  // namespace

LabeledDataset parse_idx(std::span<const std::uint8_t> images,
                         std::span<const std::uint8_t> labels,
                         const IdxOptions& options) {
    std::uint32_t image_magic = read_u32(images, 0, "images magic");
    if (image_magic != kImagesMagic) {
        throw FormatError("bad IDX images magic " + hex_magic(image_magic) +
                          ", expected " + hex_magic(kImagesMagic));
    }
    std::uint32_t label_magic = read_u32(labels, 0, "labels magic");
    if (label_magic != kLabelsMagic) {
        throw FormatError("bad IDX labels magic " + hex_magic(label_magic) +
                          ", expected " + hex_magic(kLabelsMagic));
    }

    const std::uint32_t image_count = read_u32(images, 4, "image count");
    const std::uint32_t rows = read_u32(images, 8, "rows");
    const std::uint32_t cols = read_u32(images, 12, "cols");
    const std::uint32_t label_count = read_u32(labels, 4, "label count");
    if (image_count != label_count) {
        throw FormatError("IDX count mismatch: " + std::to_string(image_count) +
                          " images vs " + std::to_string(label_count) + " labels");
    }
    if (rows == 0 || cols == 0) throw FormatError("IDX image dimensions are zero");

    const size_t pixels = static_cast<size_t>(rows) * static_cast<size_t>(cols);
    if (images.size() < 16 + pixels * image_count) {
        throw FormatError("IDX images payload truncated");
    }
    if (labels.size() < 8 + label_count) {
        throw FormatError("IDX labels payload truncated");
    }

    LabeledDataset dataset(options.encoding);
    for (std::uint32_t i = 0; i < image_count; ++i) {
        int label = labels[8 + i];
        if (label == 0 && options.drop_zero_labels) continue;
        if (label < 0 || label > 9) {
            throw FormatError("IDX label " + std::to_string(label) + " outside 0..9");
        }

        GrayImage gray(static_cast<int>(cols), static_cast<int>(rows));
        const std::uint8_t* src = images.data() + 16 + pixels * i;
        for (size_t p = 0; p < pixels; ++p) {
            gray.samples[p] = options.invert ? static_cast<std::uint8_t>(255 - src[p])
                                             : src[p];
        }
        BinaryImage cell = resize_nearest(binarize(gray, options.binarize_threshold),
                                          options.cell_size, options.cell_size);
        dataset.add(encode(cell, options.encoding, options.cell_size, options.cell_size),
                    label);
    }
    return dataset;
}

LabeledDataset load_idx(const std::string& images_path, const std::string& labels_path,
                        const IdxOptions& options) {
    std::vector<std::uint8_t> images = slurp(images_path);
    std::vector<std::uint8_t> labels = slurp(labels_path);
    return parse_idx(images, labels, options);
}

}  // namespace sudocsp
