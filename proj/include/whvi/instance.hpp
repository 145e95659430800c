#pragma once

#include "whvi/condition_checkers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace whvi {

/// Malformed instance file or field; the message carries the line or field path.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

struct Instance {
  std::string name;
  WeaklyHomogeneousMap map;
  Polyhedron set;
  std::optional<Vector> xref;
  CheckerConfig checker;
  SolveConfig solver;

  bool operator==(const Instance& o) const {
    return name == o.name && map == o.map && set == o.set && xref == o.xref &&
           checker == o.checker && solver == o.solver;
  }
};

/// Parses the JSON instance format. Unknown fields, shape errors and map or set invariant
/// violations raise ParseError with the offending field path.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Full JSON text including every configuration field, so parse(serialize(I)) == I.
std::string serialize_instance(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

/// Instances shipped with the library, keyed by name.
std::vector<std::string> builtin_instance_names();
Instance builtin_instance(const std::string& name);

}  // namespace whvi
