#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

enum class Errc {
  invalid_argument,
  domain,
  not_chordal,
  empty_class,
  not_filled,
  rejection_cap,
  parse,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chordal
