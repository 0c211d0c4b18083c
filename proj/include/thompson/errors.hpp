#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

enum class Errc {
  incomplete_code,         // prefix code does not exhaust the space (Kraft sum != 1)
  not_prefix_free,         // a code word prefixes another, or a word repeats
  arity_mismatch,          // malformed table entry
  not_in_T,
  not_in_F,
  cap_exceeded,            // exact enumeration would exceed the configured cap
  source_target_mismatch,  // germs are not composable
  kind_mismatch,           // mixed dyadic / non-dyadic germ kinds
  dyadic_point,            // a zero-tail point where a non-dyadic one is required
  bad_input,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace thompson
