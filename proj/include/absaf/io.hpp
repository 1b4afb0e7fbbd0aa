#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "absaf/model.hpp"

namespace absaf {

/// Line format `<multiplicity> : <label>,<label>,...`; `#` starts a comment.
std::vector<Ballot> parse_ballots_text(const AF& af, std::string_view text);

/// `{ "ballots": [ { "count": 33, "approved": ["p1"] }, ... ] }`; "count" defaults to 1.
std::vector<Ballot> parse_ballots_json(const AF& af, std::string_view text);

/// Picks the JSON reader for `.json` paths, the line reader otherwise.
std::vector<Ballot> load_ballots(const AF& af, const std::string& path);

std::string write_ballots_json(const ABSAF& s);
std::string write_ballots_text(const ABSAF& s);

/// One viewpoint per line as comma-separated labels; `#` comments; blank lines ignored.
/// Rejects viewpoints that are not preferred extensions when `preferred` is non-empty.
Outcome parse_outcome(const AF& af, std::string_view text, const std::vector<ArgSet>& preferred = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace absaf
