#pragma once

#include <compare>
#include <string>
#include <vector>

#include "facterm/error.hpp"

namespace facterm {

struct GridPoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// A finite word over {h, v}.  The word describes a staircase path from
// (0,0) to (n,m) in the integer rectangle, where h steps right and v steps
// up; the grid region consists of the lattice points on or above the path.
// The empty word is rendered as "*".
class FString {
 public:
  FString() = default;
  explicit FString(std::string word);

  // Accepts a plain word ("hvhhv"), the block form "(1|1|2|1)" with explicit
  // zeros permitted, or "*" for the empty word.
  static FString parse(const std::string& text);

  const std::string& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int n() const { return n_; }  // number of h steps
  int m() const { return m_; }  // number of v steps

  std::string blocks() const;   // canonical block form; "*" when empty
  std::string display() const;  // word, or "*" when empty

  // Height of the staircase at horizontal position x: the least number of
  // v steps taken in any prefix containing exactly x h steps.
  int min_y(int x) const;

  bool contains(GridPoint p) const;

  std::vector<GridPoint> path_vertices() const;
  std::vector<GridPoint> region_points() const;
  long long region_size() const;

  // Word position of the i-th h (1-based), resp. j-th v.
  int h_pos(int i) const;
  int v_pos(int j) const;

  friend bool operator==(const FString&, const FString&);
  friend std::strong_ordering operator<=>(const FString&, const FString&);

 private:
  std::string word_;
  int n_ = 0;
  int m_ = 0;
  std::vector<int> miny_{0};
};

inline bool operator==(const FString& a, const FString& b) { return a.word_ == b.word_; }
inline std::strong_ordering operator<=>(const FString& a, const FString& b) {
  return a.word_ <=> b.word_;
}

}  // namespace facterm
