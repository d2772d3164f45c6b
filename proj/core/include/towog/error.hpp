#ifndef TOWOG_ERROR_HPP
#define TOWOG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace towog {

enum class errc {
  self_loop,
  parallel_edge,
  bad_vertex_id,
  non_positive_weight,
  not_square,
  zero_vector,
  not_in_kernel,
  not_a_cycle,
  odd_length,
  not_balanced,
  not_pruned,
  not_principal,
  length_mismatch,
  parse_error,
  budget_exceeded,
  internal_assertion,
};

/// Library-wide exception. `code()` identifies the failed contract.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace towog

#endif
