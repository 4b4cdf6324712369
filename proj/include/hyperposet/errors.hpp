#pragma once

#include <stdexcept>
#include <string>

namespace hyperposet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input data: vertices out of range, duplicate hyperedges, malformed JSON.
struct ValidationError : Error {
    using Error::Error;
};

// Enumeration search space exceeds the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// Operation called outside its stated domain (undefined flip, cyclic
// orientation where an acyclic one is required, incomparable pair, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace hyperposet
