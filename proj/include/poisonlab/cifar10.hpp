#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poisonlab/dataset.hpp"

namespace poisonlab {

// Record layout of the canonical binary distribution: 1 label byte followed
// by 1024 R + 1024 G + 1024 B intensities, row-major within each plane.
constexpr std::size_t kCifarRecordBytes = 1 + kImagePixels;  // 3073

const std::vector<std::string>& cifar10_class_names();

// Parses a batch byte stream into raw (0..255) image examples. Indices are
// assigned sequentially starting at `first_index`.
ImageDataset parse_cifar10_batch(std::span<const std::uint8_t> bytes,
                                 const std::vector<std::string>& class_names,
                                 int first_index = 0);

// Inverse of parse for raw datasets; every pixel must be an integer in 0..255.
std::vector<std::uint8_t> serialize_cifar10_batch(const ImageDataset& ds);

enum class NormalizeMode { unit_interval, standardize };

// unit_interval: x/255 exactly. standardize: per-channel (x/255 - mu)/sigma
// with mu/sigma computed over `fit_on` positions (all examples when empty);
// a zero-variance channel gets sigma := 1 and a warning.
ImageDataset normalize_images(const ImageDataset& ds, NormalizeMode mode,
                              const std::vector<std::size_t>& fit_on = {},
                              Warnings* warnings = nullptr);

}  // namespace poisonlab
