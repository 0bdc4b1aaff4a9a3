#pragma once

#include <stdexcept>
#include <string>

namespace homog {

enum class errc {
    index_out_of_range,
    empty_matrix,
    format_error,
    invalid_size,
    invalid_params,
    precondition_failed,
    degenerate_size,
    pattern_not_covered,
    pattern_acyclic,
    retries_exhausted,
    size_limit_exceeded,
    indivisible_size,
    not_totally_balanced,
    not_chordal_bipartite,
    nice_tuple_not_found,
    no_qualifying_matrix,
    ordering_not_found,
    invalid_suite,
};

const char* errc_name(errc k);

class error : public std::runtime_error {
public:
    error(errc k, const std::string& msg)
        : std::runtime_error(std::string(errc_name(k)) + ": " + msg), kind_(k) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void raise(errc k, const std::string& msg) { throw error(k, msg); }

} // namespace homog
