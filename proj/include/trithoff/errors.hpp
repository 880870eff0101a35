#pragma once

#include <stdexcept>
#include <string>

namespace trithoff {

// A Step-2 rewrite would reference positions past the right end of the word;
// the caller should retry with more trailing zeros.
struct InsufficientTrailingZeros : std::runtime_error {
    InsufficientTrailingZeros() : std::runtime_error("rewrite needs more trailing zeros") {}
};

// Argument's canonical representation does not end in 1.
struct NotFirstColumn : std::runtime_error {
    explicit NotFirstColumn(const std::string& what) : std::runtime_error(what) {}
};

// Interval refinement hit the configured precision cap without separating signs.
struct PrecisionCeiling : std::runtime_error {
    PrecisionCeiling() : std::runtime_error("precision ceiling reached without sign separation") {}
};

struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct FileNotFound : std::runtime_error {
    explicit FileNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct NetworkError : std::runtime_error {
    explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trithoff
