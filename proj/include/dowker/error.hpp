#pragma once

#include <stdexcept>
#include <string>

namespace dowker {

/// Malformed input: unknown labels, parse failures, violated preconditions.
class InputError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// A configured size budget would be exceeded. Never a silent truncation.
class ResourceError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. a boundary that does not square
/// to zero, or a map that leaves its target).
class IntegrityError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

}  // namespace dowker
