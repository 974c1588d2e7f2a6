// Shared constants, error type and small value types for the numbers-game
// library. Everything here is header-only.

#ifndef NUMGAME_COMMON_HPP_
#define NUMGAME_COMMON_HPP_

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace numgame {

// Numeric policy. All of these are reported in CLI payloads.
inline constexpr double kLabelTolerance = 1e-9;          // pq vs 4cos^2(pi/k)
inline constexpr double kExplicitLabelTolerance = 1e-6;  // user-supplied "m"
inline constexpr int kMaxInferredLabel = 360;
inline constexpr double kSnapRelative = 1e-9;   // zero-snapping, x (1+max|initial|)
inline constexpr double kKeyGrid = 1e-6;        // position/root quantization
inline constexpr double kSignTolerance = 1e-9;  // root coefficient sign
inline constexpr double kRatioTolerance = 1e-9; // ON-cycle products
inline constexpr double kAsymmetryTolerance = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

// 0-based node index. Files and the CLI use 1-based indices.
using Node = int;

enum class Errc {
  NotSquare,
  NonFinite,
  BadDiagonal,
  PositiveOffDiagonal,
  AsymmetricZeroPattern,
  InvalidAmplitudeProduct,
  InconsistentLabel,
  NodeOutOfRange,
  SameNode,
  NotOddNeighborly,
  NotConnected,
  NodeNotFireable,
  IllegalScriptedFiring,
  IllegalFiringAt,
  DimensionMismatch,
  SearchBudgetExceeded,
  CapExceeded,
  ParabolicNotFinite,
  GroupNotFiniteWithinCaps,
  IncompleteRootSystem,
  NotUnitalONCyclic,
  NotUnitProductLoop,
  WrongGraphShape,
  NotReduced,
  ParseError,
  UnknownSuite,
  UnknownStrategy,
  Internal,
};

inline const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::NonFinite: return "NonFinite";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case Errc::InvalidAmplitudeProduct: return "InvalidAmplitudeProduct";
    case Errc::InconsistentLabel: return "InconsistentLabel";
    case Errc::NodeOutOfRange: return "NodeOutOfRange";
    case Errc::SameNode: return "SameNode";
    case Errc::NotOddNeighborly: return "NotOddNeighborly";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NodeNotFireable: return "NodeNotFireable";
    case Errc::IllegalScriptedFiring: return "IllegalScriptedFiring";
    case Errc::IllegalFiringAt: return "IllegalFiringAt";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ParabolicNotFinite: return "ParabolicNotFinite";
    case Errc::GroupNotFiniteWithinCaps: return "GroupNotFiniteWithinCaps";
    case Errc::IncompleteRootSystem: return "IncompleteRootSystem";
    case Errc::NotUnitalONCyclic: return "NotUnitalONCyclic";
    case Errc::NotUnitProductLoop: return "NotUnitProductLoop";
    case Errc::WrongGraphShape: return "WrongGraphShape";
    case Errc::NotReduced: return "NotReduced";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::UnknownStrategy: return "UnknownStrategy";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg, std::optional<std::size_t> index = {})
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code), index_(index) {}
  Errc code() const noexcept { return code_; }
  // Step index (0-based) for errors that refer to a position in a sequence.
  std::optional<std::size_t> index() const noexcept { return index_; }
private:
  Errc code_;
  std::optional<std::size_t> index_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg,
                              std::optional<std::size_t> index = {}) {
  throw Error(code, msg, index);
}

// Position: a real number on every node (an element of V*).
class Position {
public:
  Position() = default;
  explicit Position(std::vector<double> v) : values_(std::move(v)) {}
  Position(std::initializer_list<double> v) : values_(v) {}
  static Position zeros(std::size_t n) { return Position(std::vector<double>(n, 0.0)); }
  static Position ones(std::size_t n) { return Position(std::vector<double>(n, 1.0)); }
  static Position fundamental(std::size_t n, Node i) {
    Position p = zeros(n);
    p.values_.at(i) = 1.0;
    return p;
  }
  // Ones off J, zeros on J.
  static Position jc_dominant(std::size_t n, const std::vector<Node>& J) {
    Position p = ones(n);
    for (Node j : J) p.values_.at(j) = 0.0;
    return p;
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  double max_abs() const {
    double m = 0;
    for (double x : values_) m = std::max(m, std::fabs(x));
    return m;
  }
  bool is_dominant() const {
    for (double x : values_) if (x < 0) return false;
    return true;
  }
  bool is_strongly_dominant() const {
    for (double x : values_) if (!(x > 0)) return false;
    return true;
  }
  bool is_zero() const {
    for (double x : values_) if (x != 0) return false;
    return true;
  }
  // Nodes carrying zero, i.e. the J for which this position is J^c-dominant.
  // Only meaningful for dominant positions.
  std::vector<Node> zero_nodes() const {
    std::vector<Node> J;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == 0) J.push_back(static_cast<Node>(i));
    return J;
  }
  Position scaled(double r) const {
    Position p = *this;
    for (double& x : p.values_) x *= r;
    return p;
  }

  friend bool operator==(const Position&, const Position&) = default;

private:
  std::vector<double> values_;
};

inline double snap_threshold_for(const Position& initial) {
  return kSnapRelative * (1.0 + initial.max_abs());
}

inline void snap(Position& p, double threshold) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::fabs(p[i]) <= threshold) p[i] = 0.0;
}

inline bool approx_equal(const Position& a, const Position& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol * (1.0 + std::fabs(a[i]))) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  return os << ')';
}

// Word over the node alphabet. Read left to right as a firing sequence
// (i1, ..., ip); the group element it names is s_ip ... s_i1.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Node> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Node> letters) : letters_(letters) {}
  // Build from 1-based indices, as found in files and in the literature.
  static Word one_based(std::initializer_list<int> letters) {
    std::vector<Node> v;
    for (int x : letters) v.push_back(x - 1);
    return Word(std::move(v));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Node operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Node>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word reversed() const { return Word(std::vector<Node>(letters_.rbegin(), letters_.rend())); }
  Word prefix(std::size_t len) const {
    return Word(std::vector<Node>(letters_.begin(), letters_.begin() + len));
  }
  Word then(const Word& other) const {
    std::vector<Node> v = letters_;
    v.insert(v.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(v));
  }
  void push_back(Node x) { letters_.push_back(x); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Node> letters_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i] + 1;
  return os << ')';
}

// Quantized coordinates, used as hash keys for positions and roots.
using QuantizedKey = std::vector<std::int64_t>;

inline QuantizedKey quantize(const std::vector<double>& v, double grid = kKeyGrid) {
  QuantizedKey k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    k[i] = static_cast<std::int64_t>(std::llround(v[i] / grid));
  return k;
}

struct QuantizedKeyHash {
  std::size_t operator()(const QuantizedKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : k) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Limits for breadth-first enumerations.
struct Caps {
  std::size_t max_elements = 200000;
  int max_length = 400;
};

} // namespace numgame

#endif
