// Named end-to-end constructions with their expected numbers.
#ifndef HYPSURF_SUITE_HPP
#define HYPSURF_SUITE_HPP

#include <string>
#include <vector>

#include "hypsurf/io.hpp"

namespace hypsurf {

struct ExampleOptions {
  int genus = 3;    // tan only
  int handles = 1;  // tan only
  int scan_depth = 6;
  int max_cosets = kDefaultMaxCosets;
  ScanOptions scan;
};

struct ExampleCheck {
  std::string what;
  bool ok = false;
  std::string expected;
  std::string actual;
};

struct ExampleResult {
  std::string name;
  json data;
  std::vector<ExampleCheck> checks;

  bool ok() const;
};

const std::vector<std::string>& example_names();

/// Throws DomainError(ParseError) for an unknown name; construction errors
/// propagate.
ExampleResult run_example(const std::string& name, const ExampleOptions& opts = {});

json to_json(const ExampleResult& r);

}  // namespace hypsurf

#endif  // HYPSURF_SUITE_HPP
