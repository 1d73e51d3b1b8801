#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

enum class Errc {
  not_prime,
  no_root_of_unity,
  hint_not_primitive,
  division_by_zero,
  ctx_mismatch,
  shape_mismatch,
  singular,
  not_nilpotent,
  bad_length,
  zero_parameter,
  range_error,
  wrong_family,
  not_irreducible_shape,
  no_eigenvalue_in_field,
  zero_offdiagonal,
  commutative_pair,
  not_a_solution,
  not_irreducible,
  budget_exceeded,
  unsupported_over_this_field,
  parse_error,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(to_string(c)) + ": " + msg), code_(c) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace qweyl
