#include "cuntz/text.hpp"

#include <sstream>

#include "cuntz/errors.hpp"

namespace cuntz {

std::string format_word(const Word& w, int n) {
  if (w.empty()) return "e";
  std::string s;
  if (n <= 9) {
    for (int l : w.letters()) s += std::to_string(l);
    return s;
  }
  s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w.at(i));
  }
  s += "]";
  return s;
}

Word parse_word(const std::string& text, int n) {
  if (text == "e") return Word();
  std::vector<int> letters;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError(0, "unterminated bracket word: " + text);
    std::string inner = text.substr(1, text.size() - 2);
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      try {
        letters.push_back(std::stoi(piece));
      } catch (const std::exception&) {
        throw ParseError(0, "bad letter '" + piece + "' in " + text);
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError(0, std::string("bad letter '") + c + "' in " + text);
      letters.push_back(c - '0');
    }
  }
  for (int l : letters)
    if (l < 1 || l > n)
      throw ParseError(0, "letter " + std::to_string(l) + " outside alphabet of size " +
                              std::to_string(n));
  return Word(std::move(letters));
}

std::string format_cylinder(const CylinderUnion& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.words().size(); ++i) {
    if (i > 0) s += ", ";
    s += format_word(c.words()[i], c.alphabet());
  }
  return s + "}";
}

std::string format_unitary(const PolyUnitary& u) {
  std::ostringstream os;
  os << "n=" << u.alphabet() << "\n";
  for (const auto& [a, b] : u.pairs())
    os << format_word(a, u.alphabet()) << ":" << format_word(b, u.alphabet()) << "\n";
  return os.str();
}

PolyUnitary parse_unitary(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  int n = 0;
  std::vector<PolyTerm> terms;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);

    if (n == 0) {
      if (line.rfind("n=", 0) != 0) throw ParseError(lineno, "expected header 'n=<letters>'");
      try {
        n = std::stoi(line.substr(2));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad alphabet size");
      }
      if (n < 2) throw ParseError(lineno, "alphabet needs at least two letters");
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected 'alpha:beta'");
    try {
      Word a = parse_word(line.substr(0, colon), n);
      Word b = parse_word(line.substr(colon + 1), n);
      terms.push_back(PolyTerm{a, b, 1});
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (n == 0) throw ParseError(lineno, "missing header 'n=<letters>'");
  return PolyUnitary::check_unitary(PolyMap(n, std::move(terms)));
}

}  // namespace cuntz
