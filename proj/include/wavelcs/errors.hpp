#pragma once

#include <stdexcept>

namespace wavelcs {

/// Requested tables would exceed the configured memory budget.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration: worker count, block size, or kernel choice.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File or format problem while loading or writing sequences.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Serial and parallel runs disagreed. Always a correctness bug; the
/// benchmark harness aborts the whole run when it sees one.
class EquivalenceError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wavelcs
