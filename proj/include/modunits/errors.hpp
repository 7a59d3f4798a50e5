#pragma once

#include <stdexcept>
#include <string>

namespace modunits {

// Input lies outside the hypotheses under which a computation is meaningful
// (for example p < 5 for the prime-power results). The CLI maps this to exit 2.
class ScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace modunits
