#pragma once

#include <stdexcept>
#include <string>

namespace secant {

/// A sampled parameter point maps to the zero vector, so it does not
/// define a point of projective space.  Callers resample; the engine
/// gives up after a bounded number of retries.
struct DegeneratePointError : std::runtime_error {
    explicit DegeneratePointError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested secant variety already fills its ambient space, so the
/// closed-form degree is not defined.
struct FillsSignal : std::runtime_error {
    explicit FillsSignal(const std::string& what) : std::runtime_error(what) {}
};

/// A projection rule produced a degenerate image (no scroll structure left).
struct DegenerateProjectionError : std::runtime_error {
    explicit DegenerateProjectionError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal projection requested on a variety that is already a hypersurface
/// or fills its span.
struct InsufficientCodimensionError : std::runtime_error {
    explicit InsufficientCodimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed invariant contradicts a stored classification table entry.
/// This is always a bug somewhere: either in the engine or in the table.
struct TableMismatchError : std::logic_error {
    explicit TableMismatchError(const std::string& what) : std::logic_error(what) {}
};

/// D^2 + D.K came out odd, so the adjunction genus is not an integer.
struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

/// Rank larger than the Terracini upper bound: impossible unless the
/// engine itself is broken.
struct InternalEngineError : std::logic_error {
    explicit InternalEngineError(const std::string& what) : std::logic_error(what) {}
};

} // namespace secant
