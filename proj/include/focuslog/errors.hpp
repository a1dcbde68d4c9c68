// errors.hpp - error codes and the exception type shared by all modules
#ifndef FOCUSLOG_ERRORS_HPP
#define FOCUSLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace focuslog {

enum class Err {
  UnknownWord,
  NoParse,
  FootClash,
  NotFocusable,
  NoFocus,
  FreeVarLeak,
  OrphanEntry,
  ReductionDepthExceeded,
  LexiconError,
  SexprError,
  Usage,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::UnknownWord: return "unknown-word";
    case Err::NoParse: return "no-parse";
    case Err::FootClash: return "foot-clash";
    case Err::NotFocusable: return "not-focusable";
    case Err::NoFocus: return "no-focus";
    case Err::FreeVarLeak: return "free-var-leak";
    case Err::OrphanEntry: return "orphan-entry";
    case Err::ReductionDepthExceeded: return "reduction-depth-exceeded";
    case Err::LexiconError: return "lexicon-error";
    case Err::SexprError: return "sexpr-error";
    case Err::Usage: return "usage";
    case Err::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace focuslog

#endif
