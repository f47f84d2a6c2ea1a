#include "facterm/fstring.hpp"

#include <cctype>
#include <sstream>

namespace facterm {

FString::FString(std::string word) : word_(std::move(word)) {
  miny_.assign(1, 0);
  int vcount = 0;
  for (char c : word_) {
    if (c == 'h') {
      ++n_;
      miny_.push_back(vcount);
    } else if (c == 'v') {
      ++vcount;
    } else {
      fail(ErrorKind::Input, std::string("invalid character '") + c + "' in word");
    }
  }
  m_ = vcount;
}

FString FString::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty() || t == "*" || t == "()") return FString();
  if (t.front() == '(') {
    if (t.back() != ')') fail(ErrorKind::Input, "unterminated block form: " + text);
    std::string inner = t.substr(1, t.size() - 2);
    std::string word;
    bool horizontal = true;
    size_t pos = 0;
    while (pos <= inner.size()) {
      size_t bar = inner.find('|', pos);
      std::string piece = inner.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
      if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::Input, "invalid block entry '" + piece + "' in " + text);
      long count = std::stol(piece);
      word.append(static_cast<size_t>(count), horizontal ? 'h' : 'v');
      horizontal = !horizontal;
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    return FString(word);
  }
  std::string word;
  for (char c : t) {
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lc != 'h' && lc != 'v') fail(ErrorKind::Input, "invalid word: " + text);
    word.push_back(lc);
  }
  return FString(word);
}

std::string FString::blocks() const {
  if (word_.empty()) return "*";
  std::ostringstream out;
  out << '(';
  bool horizontal = true;
  size_t pos = 0;
  bool first = true;
  while (pos < word_.size()) {
    size_t run = 0;
    while (pos + run < word_.size() && word_[pos + run] == (horizontal ? 'h' : 'v')) ++run;
    if (!first) out << '|';
    out << run;
    first = false;
    pos += run;
    horizontal = !horizontal;
  }
  out << ')';
  return out.str();
}

std::string FString::display() const { return word_.empty() ? "*" : word_; }

int FString::min_y(int x) const {
  if (x < 0 || x > n_) fail(ErrorKind::Range, "min_y: x=" + std::to_string(x) + " outside [0," + std::to_string(n_) + "]");
  return miny_[static_cast<size_t>(x)];
}

bool FString::contains(GridPoint p) const {
  if (p.x < 0 || p.x > n_ || p.y < 0 || p.y > m_)
    fail(ErrorKind::Range, "contains: point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") outside rectangle");
  return p.y >= miny_[static_cast<size_t>(p.x)];
}

std::vector<GridPoint> FString::path_vertices() const {
  std::vector<GridPoint> out;
  out.reserve(word_.size() + 1);
  GridPoint p{0, 0};
  out.push_back(p);
  for (char c : word_) {
    if (c == 'h')
      ++p.x;
    else
      ++p.y;
    out.push_back(p);
  }
  return out;
}

std::vector<GridPoint> FString::region_points() const {
  std::vector<GridPoint> out;
  for (int x = 0; x <= n_; ++x)
    for (int y = miny_[static_cast<size_t>(x)]; y <= m_; ++y) out.push_back({x, y});
  return out;
}

long long FString::region_size() const {
  long long total = 0;
  for (int x = 0; x <= n_; ++x) total += m_ - miny_[static_cast<size_t>(x)] + 1;
  return total;
}

int FString::h_pos(int i) const {
  if (i < 1 || i > n_) fail(ErrorKind::Range, "h_pos: no h number " + std::to_string(i));
  int seen = 0;
  for (size_t t = 0; t < word_.size(); ++t)
    if (word_[t] == 'h' && ++seen == i) return static_cast<int>(t);
  fail(ErrorKind::Range, "h_pos: internal");
}

int FString::v_pos(int j) const {
  if (j < 1 || j > m_) fail(ErrorKind::Range, "v_pos: no v number " + std::to_string(j));
  int seen = 0;
  for (size_t t = 0; t < word_.size(); ++t)
    if (word_[t] == 'v' && ++seen == j) return static_cast<int>(t);
  fail(ErrorKind::Range, "v_pos: internal");
}

}  // namespace facterm
