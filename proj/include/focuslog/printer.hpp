// printer.hpp - deterministic renderings of terms
#ifndef FOCUSLOG_PRINTER_HPP
#define FOCUSLOG_PRINTER_HPP

#include <string>

#include "focuslog/term.hpp"

namespace focuslog::logic {

enum class Format { Plain, Latex, Sexpr };

Format format_from_string(const std::string& s);

// plain uses the infix application dot, iota as "ιX:(R) B", and |S|=n;
// latex emits compilable math-mode markup; sexpr round-trips via parse_term.
std::string pretty(const Term& t, Format format);

}  // namespace focuslog::logic

#endif
