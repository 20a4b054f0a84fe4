#pragma once

#include <stdexcept>
#include <string>

namespace dfs {

// Base class for every error thrown by the library. The CLI maps these
// to distinct exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// A Cholesky pivot was <= 0 or non-finite; the caller should raise the
// ridge parameter alpha.
class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& what) : Error(what) {}
};

class DegenerateClass : public Error {
public:
    explicit DegenerateClass(const std::string& what) : Error(what) {}
};

class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& what) : Error(what) {}
};

class SingularWithinScatter : public Error {
public:
    explicit SingularWithinScatter(const std::string& what) : Error(what) {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& what) : Error(what) {}
};

class ZeroVariance : public Error {
public:
    explicit ZeroVariance(const std::string& what) : Error(what) {}
};

class ConstantFeature : public Error {
public:
    ConstantFeature(std::size_t feature, const std::string& what)
        : Error(what), feature_index(feature) {}
    std::size_t feature_index;
};

class InvalidSpec : public Error {
public:
    explicit InvalidSpec(const std::string& what) : Error(what) {}
};

class InvalidK : public Error {
public:
    explicit InvalidK(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

class MissingLabelColumn : public Error {
public:
    explicit MissingLabelColumn(const std::string& what) : Error(what) {}
};

class NonNumericValue : public Error {
public:
    NonNumericValue(std::size_t line, std::size_t column, const std::string& what)
        : Error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

class NonAscendingIndex : public Error {
public:
    explicit NonAscendingIndex(const std::string& what) : Error(what) {}
};

}  // namespace dfs
