#ifndef SUBISO_ERRORS_HH
#define SUBISO_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace subiso
{
    class ParseError : public std::runtime_error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const noexcept -> int
            {
                return _line;
            }
    };

    /// A well-formed request that does not describe a valid instance
    /// (dimension mismatch, pattern larger than input, non-bijective map...).
    class InvalidInstance : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A configured resource cap (oracle size, pivot count) was hit. Never
    /// reported as a verdict.
    class LimitExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
