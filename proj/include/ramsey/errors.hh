#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Invalid arguments: bad class parameters, vertex out of range, degree mismatch.
    class ParameterError : public Error
    {
    public:
        using Error::Error;
    };

    /// A requested object is too large to enumerate (group element cap, 64-vertex engine limit).
    class SizeError : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed graph6 bytes; carries the offending byte offset.
    class FormatError : public Error
    {
    public:
        FormatError(const std::string & what, std::size_t offset) :
            Error(what + " (byte " + std::to_string(offset) + ")"),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// Malformed DIMACS, solver output, or cache records.
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    /// The outside world is not as expected: missing solver executable, unwritable directory.
    class EnvironmentError : public Error
    {
    public:
        using Error::Error;
    };

    /// An input violates an operation's stated precondition, e.g. a coloring that is not circulant.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    /// The oracle rejected a model that the solver claimed satisfies the encoding.
    class ConsistencyError : public Error
    {
    public:
        using Error::Error;
    };
}
