#ifndef TOPKSAT_CORE_WCNF_HH
#define TOPKSAT_CORE_WCNF_HH

#include <string>
#include <string_view>
#include <vector>

#include "core/formula.hh"

namespace topksat {

// Reads DIMACS WCNF: header `p wcnf <nvars> <nclauses> <top>`, one weight
// per clause (top = hard, 1 = soft), literals terminated by 0. Clauses may
// span lines; `c` comment lines are ignored. Parse errors carry the line
// number.
Formula parse_wcnf(std::string_view text);

Formula read_wcnf_file(const std::string& path);

// Canonical single-space form, hard clauses before soft, top = num_soft + 1.
// parse_wcnf(write_wcnf(f)) == f.
std::string write_wcnf(const Formula& f);

// Same, with `c `-prefixed comment lines before the header.
std::string write_wcnf(const Formula& f, const std::vector<std::string>& comments);

void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

} // namespace topksat

#endif
