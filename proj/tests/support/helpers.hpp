#pragma once

#include <countfn/countfn.hpp>

#include <gtest/gtest.h>

#include <string_view>

namespace countfn::testing {

inline Word mw(std::string_view text, int rank = 2) { return parse_word(text, Alphabet::monoid(rank)); }
inline Word gw(std::string_view text, int rank = 2) { return parse_word(text, Alphabet::group(rank)); }

inline CountingFunction mf(std::string_view text, int rank = 2) { return parse_counting(text, Alphabet::monoid(rank)); }
inline CountingFunction gf(std::string_view text, int rank = 2) { return parse_counting(text, Alphabet::group(rank)); }
inline BrooksFunction bf(std::string_view text, int rank = 2) { return parse_brooks(text, Alphabet::group(rank)); }

}  // namespace countfn

namespace countfn {
inline void PrintTo(const Word& w, std::ostream* os) { *os << format_word(w); }
inline void PrintTo(const CountingFunction& f, std::ostream* os) { *os << to_text(f); }
inline void PrintTo(const BrooksFunction& f, std::ostream* os) { *os << to_text(f); }
}  // namespace countfn
