#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "sudocsp/image.hpp"

namespace sudocsp {

// Parses PBM (P1 ASCII, P4 binary) and PGM (P2 ASCII, P5 binary) rasters
// with maxval up to 255. PBM pixels arrive as 0 (black ink) or 255 (white)
// intensities so both formats binarize the same way. '#' comments are
// honored anywhere in the header. Other magic numbers raise FormatError.
GrayImage parse_pnm(std::span<const std::uint8_t> data);

GrayImage load_pnm(const std::string& path);

// load_pnm followed by binarize.
BinaryImage load_binary_pnm(const std::string& path, int threshold = 128);

// P5 (binary=true) or P2 writer, maxval 255.
void write_pgm(const std::string& path, const GrayImage& img, bool binary = true);

// P4 (binary=true) or P1 writer; foreground maps to PBM black (1).
void write_pbm(const std::string& path, const BinaryImage& img, bool binary = true);

// Binary image as a grayscale raster: foreground 0 (ink), background 255.
GrayImage to_gray(const BinaryImage& img);

}  // namespace sudocsp
