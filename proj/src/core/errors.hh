#ifndef TOPKSAT_CORE_ERRORS_HH
#define TOPKSAT_CORE_ERRORS_HH

#include <stdexcept>
#include <string>

namespace topksat {

enum class ErrorCode {
    Parse,     // malformed input text
    Invalid,   // argument violates a precondition
    Overflow,  // enumeration cap / oracle cap exceeded
    Timeout,   // budget exhausted without a usable result
    Verify,    // a solution or witness failed re-verification
    Io,        // file or process failure
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace topksat

#endif
