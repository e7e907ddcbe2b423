#pragma once

#include <stdexcept>
#include <string>

namespace roundsleek {

struct DomainMismatch : std::invalid_argument {
    explicit DomainMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyRegion : std::invalid_argument {
    explicit EmptyRegion(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingDiameter : std::invalid_argument {
    explicit MissingDiameter(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownTransform : std::invalid_argument {
    explicit UnknownTransform(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct NotLinear : std::invalid_argument {
    explicit NotLinear(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownName : std::invalid_argument {
    explicit UnknownName(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedDimension : std::invalid_argument {
    explicit UnsupportedDimension(const std::string& what) : std::invalid_argument(what) {}
};

// Carries the JSON path of the offending node, e.g. "$.factors[2].r".
struct ParseError : std::runtime_error {
    std::string path;
    ParseError(std::string path_, const std::string& what)
        : std::runtime_error(path_ + ": " + what), path(std::move(path_)) {}
};

} // namespace roundsleek
