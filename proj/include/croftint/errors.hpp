#ifndef CROFTINT_ERRORS_HPP
#define CROFTINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace croftint {

struct PoleAtPoint : std::domain_error {
  explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

struct DimensionTooLarge : std::domain_error {
  explicit DimensionTooLarge(const std::string& what) : std::domain_error(what) {}
};

struct NotReducible : std::domain_error {
  explicit NotReducible(const std::string& what) : std::domain_error(what) {}
};

struct BetaPole : std::domain_error {
  explicit BetaPole(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateInput : std::invalid_argument {
  explicit DegenerateInput(const std::string& what) : std::invalid_argument(what) {}
};

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct InadmissibleCase : std::invalid_argument {
  explicit InadmissibleCase(const std::string& what) : std::invalid_argument(what) {}
};

struct NumericallyAmbiguous : std::runtime_error {
  explicit NumericallyAmbiguous(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace croftint

#endif
