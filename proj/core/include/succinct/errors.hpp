#pragma once

#include <stdexcept>
#include <string>

namespace succinct {

// Index or symbol outside the valid domain of a query.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// select asked for an occurrence that does not exist.
struct not_found_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction input violates a precondition (unsorted keys, bad symbol, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Quantity undefined for the given input (e.g. entropy of an empty sequence).
struct undefined_input_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A kernel was called outside its documented contract.
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed, truncated, or unsupported serialized data.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A file could not be opened, read, or written.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace succinct
