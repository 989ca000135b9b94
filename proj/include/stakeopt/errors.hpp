#pragma once

#include <stdexcept>

namespace stakeopt {

// Raised when an operation is asked to run outside the parameter regime it
// supports (e.g. t = 0 for bold play, or p > t for the conjecture search).
class regime_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a hard size cap (enumeration width, DP support
// size, exhaustive-search dimension).
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stakeopt
