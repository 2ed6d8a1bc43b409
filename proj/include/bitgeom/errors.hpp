#pragma once

#include <stdexcept>
#include <string>

namespace bitgeom {

// Invalid arguments or malformed inputs. The CLI maps these to exit code 2.
class argument_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally inconsistent data (disconnected graph, embedding that does not
// cover the vertex set, ...). Also exit code 2.
class structure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap would be exceeded. Carries the cap name and the flag that
// raises it. The CLI maps these to exit code 3.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::string cap_name, std::string raise_flag)
      : std::runtime_error(what), cap(std::move(cap_name)), flag(std::move(raise_flag)) {}

  std::string cap;
  std::string flag;
};

}  // namespace bitgeom
