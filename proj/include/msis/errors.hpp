#pragma once

#include <stdexcept>
#include <string>

namespace msis {

/// Base class of every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments or inconsistent in-memory data (CLI exit code 3).
struct validation_error : error {
    using error::error;
};

/// Malformed or unsupported bytes coming from the outside (CLI exit code 2).
struct format_error : error {
    using error::error;
};

/// Underlying file or stream failure (CLI exit code 2).
struct io_error : error {
    using error::error;
};

struct length_mismatch : validation_error {
    using validation_error::validation_error;
};
struct invalid_plane : validation_error {
    using validation_error::validation_error;
};
struct empty_stream : validation_error {
    using validation_error::validation_error;
};
struct side_mismatch : validation_error {
    using validation_error::validation_error;
};
struct not_square : validation_error {
    using validation_error::validation_error;
};
struct dimension_mismatch : validation_error {
    using validation_error::validation_error;
};
struct empty_input : validation_error {
    using validation_error::validation_error;
};

struct malformed_container : format_error {
    using format_error::format_error;
};
// Container header fields that contradict the share payload.
struct dimension_inconsistency : format_error {
    using format_error::format_error;
};
struct bad_magic : format_error {
    using format_error::format_error;
};
struct unsupported_version : format_error {
    using format_error::format_error;
};
struct header_invariant_violation : format_error {
    using format_error::format_error;
};
struct truncated_payload : format_error {
    using format_error::format_error;
};
struct unsupported_format : format_error {
    using format_error::format_error;
};
struct malformed_file : format_error {
    using format_error::format_error;
};

struct sink_failure : io_error {
    using io_error::io_error;
};

} // namespace msis
