#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sortkit {

/// A size outside the range a sorter or network table supports.
class UnsupportedSize : public std::invalid_argument {
public:
    UnsupportedSize(std::size_t n, const std::string& what_range)
        : std::invalid_argument("unsupported size " + std::to_string(n) + " (" + what_range + ")"),
          size_(n) {}

    std::size_t size() const noexcept { return size_; }

private:
    std::size_t size_;
};

class TooLargeForExhaustive : public std::invalid_argument {
public:
    explicit TooLargeForExhaustive(std::size_t n)
        : std::invalid_argument("network with " + std::to_string(n) +
                                " channels is too large for exhaustive zero-one verification (max 24)") {}
};

/// Invalid sorter labels, option values, or loop parameters.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sorter produced unsorted output or lost/changed items.
class CorrectnessFailure : public std::runtime_error {
public:
    CorrectnessFailure(std::string sorter, std::size_t array_size, std::uint64_t seed, const std::string& detail)
        : std::runtime_error("correctness failure: sorter '" + sorter + "' size " + std::to_string(array_size) +
                             " seed " + std::to_string(seed) + ": " + detail),
          sorter_(std::move(sorter)),
          array_size_(array_size),
          seed_(seed) {}

    const std::string& sorter() const noexcept { return sorter_; }
    std::size_t array_size() const noexcept { return array_size_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::string sorter_;
    std::size_t array_size_;
    std::uint64_t seed_;
};

/// A (sorter, size) grid with holes; lists every missing cell.
class IncompleteGrid : public std::runtime_error {
public:
    using Cell = std::pair<std::string, std::size_t>;

    explicit IncompleteGrid(std::vector<Cell> missing)
        : std::runtime_error(describe(missing)), missing_(std::move(missing)) {}

    const std::vector<Cell>& missing() const noexcept { return missing_; }

private:
    static std::string describe(const std::vector<Cell>& missing) {
        std::string s = "incomplete result grid, missing:";
        for (const auto& [sorter, size] : missing) {
            s += " (" + sorter + ", " + std::to_string(size) + ")";
        }
        return s;
    }

    std::vector<Cell> missing_;
};

class EmptySample : public std::invalid_argument {
public:
    EmptySample() : std::invalid_argument("statistics requested for an empty sample") {}
};

}  // namespace sortkit
