#pragma once

#include <stdexcept>
#include <string>

namespace compactcubic {

/// Error categories surfaced by the library.  CLI maps io/parse to exit
/// code 1 and everything else (precondition violations) to exit code 2.
enum class errc {
    non_monotone,
    too_few_nodes,
    degenerate_interval,
    index_out_of_range,
    invalid_argument,
    zero_width,
    out_of_domain,
    side_unavailable,
    singular_pivot,
    reducible,
    non_uniform_unsupported,
    insufficient_sweep,
    unknown_function,
    io_error,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace compactcubic
