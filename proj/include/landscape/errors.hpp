#pragma once

#include <stdexcept>
#include <string>

namespace landscape {

enum class errc {
    invalid_argument,
    range_mismatch,
    missing_row,
    too_large,
    unreachable_target,
    dead_end,
    divergent,
    bad_target,
    io_failure,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace landscape
