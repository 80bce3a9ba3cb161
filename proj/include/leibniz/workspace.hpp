#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "leibniz/braid.hpp"
#include "leibniz/intcat.hpp"

namespace leibniz {

// Document model: entries refer to each other by name and are resolved on access.
struct ActionEntry {
  std::string acting;
  std::string acted;
  BilinearMap left;   // N x M -> M
  BilinearMap right;  // M x N -> M
};

struct XModEntry {
  std::string action;
  Matrix boundary;
};

struct BraidingEntry {
  std::string xmod;
  BilinearMap curly;
  BilinearMap angle;
};

struct CategoryEntry {
  std::string arrows;
  std::string objects;
  Matrix source;
  Matrix target;
  Matrix identity;
  std::optional<CatBraiding> braiding;
};

struct Workspace {
  std::map<std::string, Algebra> algebras;
  std::map<std::string, ActionEntry> actions;
  std::map<std::string, XModEntry> xmods;
  std::map<std::string, BraidingEntry> braidings;
  std::map<std::string, CategoryEntry> categories;

  // Throw Error(UnresolvedReference) for unknown names.
  const Algebra& algebra(const std::string& name) const;
  LeibnizAction action(const std::string& name) const;
  CrossedModule xmod(const std::string& name) const;
  BraidedXMod braiding(const std::string& name) const;
  // Builds the CatAlgebra, so it also throws Error(InvalidCatAlgebra).
  CatAlgebra category(const std::string& name) const;

  // Register an object and its components; components are keyed name.action, name.xmod, and
  // algebras keep their own name unless it is taken by different structure constants.
  std::string add_algebra(const Algebra& a);
  void add_action(const std::string& name, const LeibnizAction& a);
  void add_xmod(const std::string& name, const CrossedModule& x);
  void add_braiding(const std::string& name, const BraidedXMod& b);
  void add_category(const std::string& name, const CatAlgebra& c, const std::optional<CatBraiding>& b = {});

  friend bool operator==(const Workspace&, const Workspace&);
};

// Throws Error(ParseError) with a byte offset or JSON pointer, Error(UnresolvedReference),
// or Error(DimensionMismatch).
Workspace parse_workspace(std::string_view document);
// Keys sorted, two-space indent, trailing newline; parse_workspace inverts it.
std::string serialize_workspace(const Workspace& ws);

// A1, L2, R2, the four named seeds, corrupted-fixture and two categories.
Workspace fixture_workspace();

}  // namespace leibniz
