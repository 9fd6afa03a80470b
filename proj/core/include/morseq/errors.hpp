#ifndef MORSEQ_ERRORS_HPP
#define MORSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morseq {

/// Raised when an elementary or set-level move is requested whose
/// precondition does not hold; the message names the violated condition.
class move_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on malformed input files.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a weight function is not monotone under face inclusion.
/// The message names the offending face pair.
class stack_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace morseq

#endif // MORSEQ_ERRORS_HPP
