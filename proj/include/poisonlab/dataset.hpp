#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "poisonlab/common.hpp"

namespace poisonlab {

constexpr int kImageSide = 32;
constexpr int kImageChannels = 3;
constexpr int kImagePixels = kImageSide * kImageSide * kImageChannels;  // 3072

// One image with its label and a stable id that survives every transformation.
// Pixels are channel-planar (R plane, G plane, B plane, row-major within a
// plane), raw 0..255 after parsing and [0,1] after normalization.
struct ImageExample {
    int index = 0;
    std::vector<float> pixels;  // always kImagePixels entries
    int label = 0;
};

struct ImageDataset {
    std::vector<ImageExample> examples;
    std::vector<std::string> class_names;  // size == num_classes

    int num_classes() const { return static_cast<int>(class_names.size()); }
    std::size_t size() const { return examples.size(); }

    // Flattened N x 3072 double matrix, one row per example.
    Eigen::MatrixXd to_matrix() const;
    std::vector<int> labels() const;

    ImageDataset subset(const std::vector<std::size_t>& positions) const;
    void validate() const;  // label range, pixel count, index uniqueness
};

enum class ColumnKind { numeric, categorical };

struct TabularColumn {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
};

using Cell = std::variant<double, std::string>;

// Raw tabular rows plus binary fraud labels (1 = fraud).
struct TabularDataset {
    std::vector<TabularColumn> schema;
    std::vector<std::vector<Cell>> rows;
    std::vector<int> labels;
    std::vector<int> indices;
    std::vector<std::string> class_names{"non_fraud", "fraud"};

    int num_classes() const { return static_cast<int>(class_names.size()); }
    std::size_t size() const { return rows.size(); }

    TabularDataset subset(const std::vector<std::size_t>& positions) const;
    void validate() const;
};

struct DatasetSplit {
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    std::uint64_t seed = 0;
    Warnings warnings;
};

}  // namespace poisonlab
