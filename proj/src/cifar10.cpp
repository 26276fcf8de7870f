#include "poisonlab/cifar10.hpp"

#include <cmath>

namespace poisonlab {

const std::vector<std::string>& cifar10_class_names() {
    static const std::vector<std::string> names = {
        "airplane", "automobile", "bird", "cat", "deer",
        "dog", "frog", "horse", "ship", "truck"};
    return names;
}

ImageDataset parse_cifar10_batch(std::span<const std::uint8_t> bytes,
                                 const std::vector<std::string>& class_names,
                                 int first_index) {
    if (bytes.size() % kCifarRecordBytes != 0) {
        std::size_t offset = bytes.size() - bytes.size() % kCifarRecordBytes;
        throw FormatError("truncated CIFAR-10 stream: trailing partial record at byte offset " +
                          std::to_string(offset));
    }
    const int k = static_cast<int>(class_names.size());
    ImageDataset ds;
    ds.class_names = class_names;
    const std::size_t n = bytes.size() / kCifarRecordBytes;
    ds.examples.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::uint8_t* rec = bytes.data() + r * kCifarRecordBytes;
        int label = static_cast<int>(rec[0]);
        if (label >= k) {
            throw FormatError("corrupt CIFAR-10 record " + std::to_string(r) +
                              ": label byte " + std::to_string(label) +
                              " >= " + std::to_string(k));
        }
        ImageExample ex;
        ex.index = first_index + static_cast<int>(r);
        ex.label = label;
        ex.pixels.resize(kImagePixels);
        for (int j = 0; j < kImagePixels; ++j) {
            ex.pixels[static_cast<std::size_t>(j)] = static_cast<float>(rec[1 + j]);
        }
        ds.examples.push_back(std::move(ex));
    }
    return ds;
}

std::vector<std::uint8_t> serialize_cifar10_batch(const ImageDataset& ds) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(ds.examples.size() * kCifarRecordBytes);
    for (const auto& ex : ds.examples) {
        if (static_cast<int>(ex.pixels.size()) != kImagePixels)
            throw FormatError("serialize: image does not have 3072 pixels");
        bytes.push_back(static_cast<std::uint8_t>(ex.label));
        for (float v : ex.pixels) {
            float r = std::round(v);
            if (r != v || r < 0.0f || r > 255.0f)
                throw FormatError("serialize: pixel value is not a raw 0..255 intensity");
            bytes.push_back(static_cast<std::uint8_t>(r));
        }
    }
    return bytes;
}

ImageDataset normalize_images(const ImageDataset& ds, NormalizeMode mode,
                              const std::vector<std::size_t>& fit_on,
                              Warnings* warnings) {
    ImageDataset out = ds;
    constexpr int plane = kImageSide * kImageSide;

    if (mode == NormalizeMode::unit_interval) {
        for (auto& ex : out.examples) {
            for (auto& v : ex.pixels) v /= 255.0f;
        }
        return out;
    }

    // Per-channel mean/std over the fitting split of x/255 values, two-pass.
    std::vector<std::size_t> fit = fit_on;
    if (fit.empty()) {
        fit.resize(ds.examples.size());
        for (std::size_t i = 0; i < fit.size(); ++i) fit[i] = i;
    }
    double mean[kImageChannels] = {0, 0, 0};
    double stddev[kImageChannels] = {1, 1, 1};
    const double count = static_cast<double>(fit.size()) * plane;
    if (count > 0) {
        for (int c = 0; c < kImageChannels; ++c) {
            double sum = 0.0;
            for (std::size_t p : fit) {
                const auto& px = ds.examples[p].pixels;
                for (int j = 0; j < plane; ++j)
                    sum += static_cast<double>(px[static_cast<std::size_t>(c * plane + j)]) / 255.0;
            }
            mean[c] = sum / count;
            double sq = 0.0;
            for (std::size_t p : fit) {
                const auto& px = ds.examples[p].pixels;
                for (int j = 0; j < plane; ++j) {
                    double d = static_cast<double>(px[static_cast<std::size_t>(c * plane + j)]) / 255.0 - mean[c];
                    sq += d * d;
                }
            }
            stddev[c] = std::sqrt(sq / count);
            if (stddev[c] == 0.0) {
                stddev[c] = 1.0;
                if (warnings)
                    warnings->push_back("degenerate channel " + std::to_string(c) +
                                        ": zero variance, sigma substituted with 1");
            }
        }
    }
    for (auto& ex : out.examples) {
        for (int c = 0; c < kImageChannels; ++c) {
            for (int j = 0; j < plane; ++j) {
                auto& v = ex.pixels[static_cast<std::size_t>(c * plane + j)];
                v = static_cast<float>((static_cast<double>(v) / 255.0 - mean[c]) / stddev[c]);
            }
        }
    }
    return out;
}

}  // namespace poisonlab
