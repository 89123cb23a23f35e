#include "sudocsp/netpbm.hpp"

#include <cctype>
#include <fstream>

#include "sudocsp/errors.hpp"

namespace sudocsp {

namespace {

class Lexer {
public:
    explicit Lexer(std::span<const std::uint8_t> data) : data_(data) {}

    // Skips whitespace and '#' comments, then reads a nonnegative integer.
    int next_int(const char* what) {
        skip_separators();
        if (pos_ >= data_.size() || !std::isdigit(data_[pos_])) {
            throw FormatError(std::string("expected ") + what + " in PNM header");
        }
        long value = 0;
        while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
            value = value * 10 + (data_[pos_++] - '0');
            if (value > 1 << 30) throw FormatError("PNM header value out of range");
        }
        return static_cast<int>(value);
    }

    // One P1 raster digit; whitespace and comments may separate digits.
    int next_bit() {
        skip_separators();
        if (pos_ >= data_.size()) throw FormatError("P1 raster ended early");
        char c = static_cast<char>(data_[pos_++]);
        if (c != '0' && c != '1') {
            throw FormatError(std::string("invalid P1 raster character '") + c + "'");
        }
        return c - '0';
    }

    // Consumes the single whitespace byte that separates header and raster.
    void start_raster() {
        if (pos_ >= data_.size() || !std::isspace(data_[pos_])) {
            throw FormatError("missing whitespace before PNM raster");
        }
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }

private:
    void skip_separators() {
        while (pos_ < data_.size()) {
            if (std::isspace(data_[pos_])) {
                ++pos_;
            } else if (data_[pos_] == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> data_;
    size_t pos_ = 0;
};

GrayImage parse_p1(Lexer& lex, int width, int height) {
    GrayImage img(width, height);
    for (size_t i = 0; i < img.samples.size(); ++i) {
        img.samples[i] = lex.next_bit() == 1 ? 0 : 255;
    }
    return img;
}

GrayImage parse_p2(Lexer& lex, int width, int height, int maxval) {
    GrayImage img(width, height);
    for (size_t i = 0; i < img.samples.size(); ++i) {
        int v = lex.next_int("sample");
        if (v > maxval) throw FormatError("PGM sample exceeds maxval");
        img.samples[i] = static_cast<std::uint8_t>(v);
    }
    return img;
}

GrayImage parse_p4(Lexer& lex, int width, int height) {
    lex.start_raster();
    auto raster = lex.rest();
    const size_t row_bytes = (static_cast<size_t>(width) + 7) / 8;
    if (raster.size() < row_bytes * static_cast<size_t>(height)) {
        throw FormatError("P4 raster truncated");
    }
    GrayImage img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            std::uint8_t byte = raster[static_cast<size_t>(y) * row_bytes +
                                       static_cast<size_t>(x) / 8];
            bool black = (byte >> (7 - x % 8)) & 1;
            img.set(x, y, black ? 0 : 255);
        }
    }
    return img;
}

GrayImage parse_p5(Lexer& lex, int width, int height, int maxval) {
    lex.start_raster();
    auto raster = lex.rest();
    const size_t need = static_cast<size_t>(width) * static_cast<size_t>(height);
    if (raster.size() < need) throw FormatError("P5 raster truncated");
    GrayImage img(width, height);
    for (size_t i = 0; i < need; ++i) {
        if (raster[i] > maxval) throw FormatError("PGM sample exceeds maxval");
        img.samples[i] = raster[i];
    }
    return img;
}

}  // namespace

GrayImage parse_pnm(std::span<const std::uint8_t> data) {
    if (data.size() < 2 || data[0] != 'P') {
        throw FormatError("not a PNM file (missing P magic)");
    }
    const char kind = static_cast<char>(data[1]);
    if (kind != '1' && kind != '2' && kind != '4' && kind != '5') {
        throw FormatError(std::string("unsupported PNM magic P") + kind +
                          " (expected P1, P2, P4 or P5)");
    }

    Lexer lex(data.subspan(2));
    int width = lex.next_int("width");
    int height = lex.next_int("height");
    if (width < 1 || height < 1) throw FormatError("PNM dimensions must be positive");

    if (kind == '1') return parse_p1(lex, width, height);
    if (kind == '4') return parse_p4(lex, width, height);

    int maxval = lex.next_int("maxval");
    if (maxval < 1 || maxval > 255) {
        throw FormatError("PGM maxval " + std::to_string(maxval) +
                          " unsupported (need 1..255)");
    }
    return kind == '2' ? parse_p2(lex, width, height, maxval)
                       : parse_p5(lex, width, height, maxval);
}

GrayImage load_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open image file: " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    return parse_pnm(data);
}

BinaryImage load_binary_pnm(const std::string& path, int threshold) {
    return binarize(load_pnm(path), threshold);
}

void write_pgm(const std::string& path, const GrayImage& img, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write image file: " + path);
    out << (binary ? "P5" : "P2") << "\n"
        << img.width << " " << img.height << "\n255\n";
    if (binary) {
        out.write(reinterpret_cast<const char*>(img.samples.data()),
                  static_cast<std::streamsize>(img.samples.size()));
    } else {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                out << int(img.at(x, y)) << (x + 1 == img.width ? "\n" : " ");
            }
        }
    }
}

void write_pbm(const std::string& path, const BinaryImage& img, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write image file: " + path);
    out << (binary ? "P4" : "P1") << "\n" << img.width << " " << img.height << "\n";
    if (binary) {
        const size_t row_bytes = (static_cast<size_t>(img.width) + 7) / 8;
        std::vector<std::uint8_t> row(row_bytes);
        for (int y = 0; y < img.height; ++y) {
            std::fill(row.begin(), row.end(), 0);
            for (int x = 0; x < img.width; ++x) {
                if (img.foreground(x, y)) {
                    row[static_cast<size_t>(x) / 8] |=
                        static_cast<std::uint8_t>(0x80 >> (x % 8));
                }
            }
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row.size()));
        }
    } else {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                out << (img.foreground(x, y) ? '1' : '0')
                    << (x + 1 == img.width ? "\n" : " ");
            }
        }
    }
}

GrayImage to_gray(const BinaryImage& img) {
    GrayImage out(img.width, img.height);
    for (size_t i = 0; i < img.bits.size(); ++i) {
        out.samples[i] = img.bits[i] != 0 ? 0 : 255;
    }
    return out;
}

}  // namespace sudocsp
