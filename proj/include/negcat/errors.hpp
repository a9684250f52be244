#pragma once

#include <stdexcept>
#include <string>

namespace negcat {

enum class errc {
  invalid_argument,
  model_convention,
  unsupported_quiver,
  unsupported_configuration,
  no_map,
  no_extension,
  multi_component,
  bound_exceeded,
  not_torsion_class,
  not_member,
  axiom_violation,
  model_error,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace negcat
