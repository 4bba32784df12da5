#pragma once

#include <stdexcept>
#include <string>

namespace macias {

// Failure taxonomy shared by every module.  Each operation documents which
// codes it can raise; anything else escaping is a bug.
enum class errc {
  syntax,             // malformed element literal or ring spec string
  ring_mismatch,      // operands belong to different rings
  unsupported,        // operation not defined for this ring kind
  both_zero,          // gcd/extended gcd of (0, 0)
  zero_input,
  unit_or_zero,       // factorization of a unit or of zero
  infinite_set,       // the requested set is provably infinite
  method_unavailable, // closure method cannot run for this input
  improper_ideal,
  budget_exceeded,    // search/enumeration budget exhausted
  zero_in_punctured,  // 0 used as a point of the punctured space
  not_irreducible,
  empty_known_set,
  window_invalid,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace macias
