#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace testing_support {

inline std::string corpus(const std::string &name) { return std::string(ANTHEM_CORPUS) + "/" + name; }

inline std::string read_corpus(const std::string &name) {
  std::ifstream in(corpus(name));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string strip_spaces(const std::string &text) {
  std::string result;
  for (char c : text)
    if (c != ' ' && c != '\n' && c != '\t')
      result += c;
  return result;
}

} // namespace testing_support
