#pragma once
#include <stdexcept>
#include <string>

namespace tanglekit {

// all library errors derive from error so callers can catch one base
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_state_error : error { using error::error; };
struct bad_length_error : error { using error::error; };
struct bad_subset_error : error { using error::error; };
struct bad_permutation_error : error { using error::error; };
struct dimension_error : error { using error::error; };

// text loader problems carry the offending 1-based line number (0 = whole file)
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct io_error : error { using error::error; };

struct degenerate_c_error : error { using error::error; };
struct negative_bound_error : error { using error::error; };

struct degenerate_state_error : error { using error::error; };
struct degenerate_denominator_error : error { using error::error; };

struct bad_row_error : error { using error::error; };
struct identity_violated_error : error { using error::error; };

struct rank_too_large_error : error { using error::error; };
struct unknown_state_error : error { using error::error; };

} // namespace tanglekit
