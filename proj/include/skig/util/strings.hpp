#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skig::util {

std::string trim(std::string_view text);
std::string to_lower(std::string_view text);
std::string to_upper(std::string_view text);

std::vector<std::string> split(std::string_view text, char delimiter);
std::string join(const std::vector<std::string>& parts, std::string_view separator);

bool iequals(std::string_view lhs, std::string_view rhs);
bool icontains(std::string_view haystack, std::string_view needle);
// Position of needle in haystack ignoring case, or npos.
size_t ifind(std::string_view haystack, std::string_view needle, size_t from = 0);

std::string replace_all(std::string text, std::string_view from, std::string_view to);

}  // namespace skig::util
