#include "poisonlab/dataset.hpp"

#include <unordered_set>

namespace poisonlab {

Eigen::MatrixXd ImageDataset::to_matrix() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(examples.size()), kImagePixels);
    for (std::size_t i = 0; i < examples.size(); ++i) {
        const auto& px = examples[i].pixels;
        for (int j = 0; j < kImagePixels; ++j) {
            m(static_cast<Eigen::Index>(i), j) = static_cast<double>(px[static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

std::vector<int> ImageDataset::labels() const {
    std::vector<int> out(examples.size());
    for (std::size_t i = 0; i < examples.size(); ++i) out[i] = examples[i].label;
    return out;
}

ImageDataset ImageDataset::subset(const std::vector<std::size_t>& positions) const {
    ImageDataset out;
    out.class_names = class_names;
    out.examples.reserve(positions.size());
    for (std::size_t p : positions) {
        if (p >= examples.size()) throw ArgumentError("subset: position out of range");
        out.examples.push_back(examples[p]);
    }
    return out;
}

void ImageDataset::validate() const {
    std::unordered_set<int> seen;
    seen.reserve(examples.size());
    for (const auto& ex : examples) {
        if (ex.label < 0 || ex.label >= num_classes())
            throw FormatError("image example label out of range: " + std::to_string(ex.label));
        if (static_cast<int>(ex.pixels.size()) != kImagePixels)
            throw FormatError("image example does not have 3072 pixels");
        if (!seen.insert(ex.index).second)
            throw FormatError("duplicate example index: " + std::to_string(ex.index));
    }
}

TabularDataset TabularDataset::subset(const std::vector<std::size_t>& positions) const {
    TabularDataset out;
    out.schema = schema;
    out.class_names = class_names;
    out.rows.reserve(positions.size());
    out.labels.reserve(positions.size());
    out.indices.reserve(positions.size());
    for (std::size_t p : positions) {
        if (p >= rows.size()) throw ArgumentError("subset: position out of range");
        out.rows.push_back(rows[p]);
        out.labels.push_back(labels[p]);
        out.indices.push_back(indices[p]);
    }
    return out;
}

void TabularDataset::validate() const {
    if (rows.size() != labels.size() || rows.size() != indices.size())
        throw FormatError("tabular dataset: rows/labels/indices size mismatch");
    std::unordered_set<int> seen;
    seen.reserve(indices.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != schema.size())
            throw FormatError("tabular row " + std::to_string(i) + " does not match schema length");
        if (labels[i] != 0 && labels[i] != 1)
            throw FormatError("tabular label must be 0 or 1");
        if (!seen.insert(indices[i]).second)
            throw FormatError("duplicate row index: " + std::to_string(indices[i]));
    }
}

}  // namespace poisonlab
