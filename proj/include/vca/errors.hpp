#ifndef VCA_ERRORS_HPP
#define VCA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace vca {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidVertexId : Error {
    using Error::Error;
};

/// Thrown when 2-coloring fails; carries one odd cycle (1-based ids).
struct NotBipartite : Error {
    std::vector<int> odd_cycle;
    NotBipartite(const std::string& msg, std::vector<int> cycle)
        : Error(msg), odd_cycle(std::move(cycle)) {}
};

struct NoEdges : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NotACover : Error {
    using Error::Error;
};

struct NotBasic : Error {
    using Error::Error;
};

struct NotATree : Error {
    using Error::Error;
};

struct NotAnEdge : Error {
    using Error::Error;
};

struct DecompositionNotFound : Error {
    using Error::Error;
};

struct NotUnmixed : Error {
    using Error::Error;
};

// A closure/distributivity failure on an unmixed graph would contradict the
// theory behind the lattice construction; it is reported loudly, never
// silently tolerated.
struct ClosureViolation : Error {
    using Error::Error;
};

struct DrawingNotEligible : Error {
    using Error::Error;
};

struct NotDescending : Error {
    using Error::Error;
};

struct PositionOutOfRange : Error {
    using Error::Error;
};

struct NoFaces : Error {
    using Error::Error;
};

struct Budget : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct Unstable : Error {
    using Error::Error;
};

}  // namespace vca

#endif
