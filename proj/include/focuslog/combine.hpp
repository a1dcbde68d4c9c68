// combine.hpp - the head/dependent combination step
#ifndef FOCUSLOG_COMBINE_HPP
#define FOCUSLOG_COMBINE_HPP

#include <optional>

#include "focuslog/sign.hpp"

namespace focuslog::grammar {

// Consumes the head's front subcat slot with the dependent, when applicable.
// Returns nullopt on a mismatched slot (direction, category, features, focus
// requirement, saturation, operator clash). Throws Err::FootClash when both
// daughters carry focus, or both carry slash.
std::optional<Sign> combine(const Sign& head, const Sign& dep, Dir dir);

}  // namespace focuslog::grammar

#endif
