#pragma once

#include <stdexcept>
#include <string>

namespace prodsurf {

// A parallel map was evaluated exactly at a focal distance, where it fails
// to be an immersion.
class DegenerateImmersionError : public std::domain_error {
  public:
    DegenerateImmersionError(const std::string& what, double s)
        : std::domain_error(what), s_(s) {}
    double focal_s() const { return s_; }

  private:
    double s_;
};

// A displacement left the valid interval of a factor's parallel family.
// `offending` is the displacement that crossed the boundary; `factor` is
// 1 or 2 when raised on behalf of a product construction, 0 otherwise.
class FocalBoundaryError : public std::domain_error {
  public:
    FocalBoundaryError(const std::string& what, double offending, int factor = 0)
        : std::domain_error(what), offending_(offending), factor_(factor) {}
    double offending_s() const { return offending_; }
    int factor() const { return factor_; }

  private:
    double offending_;
    int factor_;
};

// Requested an explicit parametrization outside the supported catalog.
class UnsupportedCatalogError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A finite-difference frame was too degenerate to solve against.
class IllConditionedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace prodsurf
