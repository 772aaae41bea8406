#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zerosum {

//parameter, syntax, and hypothesis errors; CLI exit code 2
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

//budget or memory cap reached before a conclusive answer; CLI exit code 3
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
    ResourceError(const std::string& msg, uint64_t lo, uint64_t hi)
        : std::runtime_error(msg), lower(lo), upper(hi), has_bracket(true) {}
    uint64_t lower = 0;
    uint64_t upper = 0;
    bool has_bracket = false;
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zerosum
