#pragma once

#include <string>

#include "json.hpp"

#include "cpta/algorithms.hpp"
#include "cpta/model.hpp"

namespace cpta {

// Instance JSON schema (also in README):
//   {"n": int, "cpts": [{"parents": [int, ascending],
//                        "rules": {"<context string>": "0>1" | "1>0", ...}}, ...]}
// Context strings are |parents|-digit binary, one digit per parent in
// ascending attribute order ("" for the empty parent set); all 2^{|parents|}
// contexts must be present, none twice. Serialization is canonical: keys
// alphabetical (= ascending context index), parents ascending, 2-space
// indent, trailing newline; parse ∘ serialize = identity.

Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);
std::string serialize_cpt(const Cpt& c);

nlohmann::json cpt_to_json(const Cpt& c);
Cpt cpt_from_json(const nlohmann::json& j, int n);
nlohmann::json solve_report_to_json(const SolveReport& r);

// --- file plumbing (filesystem failures throw IoError) ---------------------

std::string read_text_file(const std::string& path);

// writes via temp file + rename in the target directory, so a failed run
// never leaves a partial file at `path`
void write_text_file_atomic(const std::string& path, const std::string& text);

Instance load_instance(const std::string& path);

// candidate for `eval`: a bare CPT object, or a solve-report file (its
// "cpt" member); n comes from the instance it will be scored against
Cpt load_candidate_cpt(const std::string& path, int n);

} // namespace cpta
