#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace poisonlab {

// Invalid arguments, malformed configs, precondition violations. CLI exit 1.
class ArgumentError : public std::runtime_error {
public:
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input bytes (truncated batch, corrupt record, bad CSV). CLI exit 1.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime failures during training (divergence etc.). CLI exit 2.
class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures. CLI exit 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-fatal conditions (degenerate channels, unseen levels, ...) collected
// alongside results instead of being printed.
using Warnings = std::vector<std::string>;

// Stable sub-stream ids for deriving per-stage seeds from a run seed.
enum class SeedStream : std::uint64_t {
    split = 1,
    validation = 2,
    poison = 3,
    learner = 4,
    defense = 5,
    augment = 6,
    bootstrap = 7,
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

inline std::uint64_t derive_seed(std::uint64_t base, SeedStream stream) {
    return derive_seed(base, static_cast<std::uint64_t>(stream));
}

}  // namespace poisonlab
