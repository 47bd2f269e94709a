#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treehom/errors.hpp"

namespace treehom {

using Symbol = std::string;

/// Finite set of symbols, each with a fixed arity. At least one symbol of
/// rank 0 must be present, otherwise the set of trees over the alphabet is
/// empty.
class RankedAlphabet {
 public:
  RankedAlphabet() = default;
  explicit RankedAlphabet(std::map<Symbol, int> symbols);
  RankedAlphabet(std::initializer_list<std::pair<const Symbol, int>> symbols)
      : RankedAlphabet(std::map<Symbol, int>(symbols)) {}

  bool contains(const Symbol& name) const { return symbols_.count(name) > 0; }
  int rank(const Symbol& name) const;
  const std::map<Symbol, int>& symbols() const { return symbols_; }
  int max_rank() const;

  bool operator==(const RankedAlphabet&) const = default;

 private:
  std::map<Symbol, int> symbols_;
};

/// Path from the root of a tree to one of its nodes, as a sequence of
/// 1-based child indices. The empty path is the root.
///
/// Two orders matter throughout the library: the prefix order (a position
/// is above every position that extends it) and the total "evaluation"
/// order in which a node comes after everything inside its subtree, so the
/// root is the largest position. Textual form is dot-separated indices,
/// with "e" for the root.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<int> path) : path_(std::move(path)) {}

  static Position root() { return Position(); }

  bool empty() const { return path_.empty(); }
  std::size_t length() const { return path_.size(); }
  const std::vector<int>& path() const { return path_; }
  int at(std::size_t i) const { return path_[i]; }

  Position child(int index) const;
  Position concat(const Position& suffix) const;

  bool is_prefix_of(const Position& other) const;
  bool is_proper_prefix_of(const Position& other) const;
  /// Remaining path once `prefix` is stripped, if `prefix` is a prefix.
  static std::optional<Position> strip_prefix(const Position& prefix,
                                              const Position& whole);

  /// Total order with siblings compared numerically and every position
  /// smaller than its proper prefixes; the root is the largest element.
  static bool lex_less(const Position& a, const Position& b);

  enum class Relation { equal, prefix_of, extends, parallel };
  static Relation relation(const Position& a, const Position& b);

  std::string str() const;
  static Position parse(std::string_view text);

  bool operator==(const Position&) const = default;
  bool operator<(const Position& other) const { return lex_less(*this, other); }

 private:
  std::vector<int> path_;
};

/// Finite ordered tree with string labels. Immutable value type; equality
/// is structural.
class Tree {
 public:
  explicit Tree(Symbol label) : label_(std::move(label)) {}
  Tree(Symbol label, std::vector<Tree> children)
      : label_(std::move(label)), children_(std::move(children)) {}

  const Symbol& label() const { return label_; }
  const std::vector<Tree>& children() const { return children_; }
  std::size_t arity() const { return children_.size(); }

  bool operator==(const Tree& other) const;
  /// Structural total order: label, then children lexicographically.
  static int compare(const Tree& a, const Tree& b);
  bool operator<(const Tree& other) const { return compare(*this, other) < 0; }

 private:
  Symbol label_;
  std::vector<Tree> children_;
};

/// All positions of `t` in ascending evaluation order (root last).
std::vector<Position> positions(const Tree& t);

/// Subtree of `t` at `w`; throws PositionError if `w` is not a position
/// of `t`.
const Tree& subtree_at(const Tree& t, const Position& w);
bool has_position(const Tree& t, const Position& w);

/// Copy of `t` with the subtree at `w` replaced by `replacement`.
Tree replace_at(const Tree& t, const Position& w, const Tree& replacement);

int height(const Tree& t);
std::size_t size(const Tree& t);

/// Validates that every node's arity matches its symbol's rank, with leaves
/// labelled by any name in `extra_leaves` admitted as nullary.
void check_tree(const Tree& t, const RankedAlphabet& alphabet,
                std::span<const std::string> extra_leaves = {});

/// Renders a tree in the term syntax `name` / `name(t1, t2)`.
std::string render_term(const Tree& t);

inline constexpr std::string_view kBoxSymbol = "@box";

/// Tree over an alphabet extended with the nullary hole symbol `@box`,
/// with at least one hole. Holes are filled in ascending position order.
class Context {
 public:
  explicit Context(Tree tree);

  const Tree& tree() const { return tree_; }
  const std::vector<Position>& hole_positions() const { return holes_; }
  std::size_t hole_count() const { return holes_.size(); }

  Tree fill(std::span<const Tree> trees) const;

 private:
  Tree tree_;
  std::vector<Position> holes_;
};

}  // namespace treehom
