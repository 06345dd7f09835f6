#pragma once

#include <string>

#include "galloc/gal.hpp"

namespace galloc {

// Reads and parses an instance file; errors are ParseError with the path and
// the offending line/field in the message.
Profile load_profile_file(const std::string& path);

// Assignment files are JSON objects with "p1" and "p2" label arrays; any
// object not listed is unallocated. Result files from `allocate --json` are
// accepted as-is.
Assignment parse_assignment(const std::string& text, const Profile& profile);
Assignment load_assignment_file(const std::string& path, const Profile& profile);

// Stable-ordered JSON (objects in instance order, fixed key order), newline
// terminated, so identical runs are byte-identical.
std::string result_to_json(const Profile& profile, const GalResult& result, bool include_trace);
std::string result_to_text(const Profile& profile, const GalResult& result, bool include_trace);

std::string assignment_to_json(const Profile& profile, const Assignment& a);

}  // namespace galloc
