#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gspec {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConnectivityError : std::invalid_argument {
    ConnectivityError(std::size_t u, std::size_t v)
        : std::invalid_argument("graph is disconnected: no path between vertices " + std::to_string(u) +
                                " and " + std::to_string(v)),
          from(u), to(v)
    {
    }
    std::size_t from;
    std::size_t to;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " (byte offset " + std::to_string(offset) + ")"), byte_offset(offset)
    {
    }
    std::size_t byte_offset;
};

struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace gspec
