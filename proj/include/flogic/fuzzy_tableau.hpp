// Tableau decision procedure for meta theories.
//
// Rules, in priority order: (bottom) closes a branch holding two
// contradictory meta literals, (and) adds both conjuncts, (or) splits the
// branch. Branches are explored depth first; within a branch the oldest
// eligible formula is expanded first.
//
// Trace lines (one per event, stable for golden files):
//   AND <branch> <formula>
//   OR <branch> <formula> => <left> <right>
//   CLOSE <branch> <literal> <literal>      (or "CLOSE <branch> false")
//   COMPLETE <branch>

#ifndef FLOGIC_FUZZY_TABLEAU_HPP_
#define FLOGIC_FUZZY_TABLEAU_HPP_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "flogic/fuzzy_semantics.hpp"
#include "flogic/meta.hpp"

namespace flogic {

// Table of literal-level subsumption: l1 entails l2. False across letters.
bool subsumes(const MetaAtom& l1, const MetaAtom& l2);
// l1 and l2 are jointly unsatisfiable. Symmetric; false across letters.
bool contradicts(const MetaAtom& l1, const MetaAtom& l2);

struct TableauOptions {
  // Drop a new literal when an existing one on the branch subsumes it.
  bool subsumption_pruning = false;
  std::ostream* trace = nullptr;
  // Maximum rule applications; 0 means unlimited. Exceeding it throws
  // ResourceExhausted.
  std::size_t step_limit = 0;
};

struct TableauStats {
  std::size_t rule_applications = 0;
  std::size_t branches_created = 0;
  std::size_t branches_closed = 0;
};

struct Branch {
  enum class Status { Open, Completed, Closed };

  int id = 0;
  Status status = Status::Open;
  // Every meta proposition placed on the branch, in order of arrival.
  std::vector<MetaProp> formulas;
  std::vector<MetaAtom> literals;
};

struct SatOutcome {
  bool satisfiable = false;
  // Set when satisfiable: the completed branch and the model read off it.
  FuzzyInterp model;
  Branch branch;
  TableauStats stats;
};

// Applies nnf_meta to every member first.
SatOutcome sat(const MetaTheory& t, const TableauOptions& options = {});
bool entails(const MetaTheory& t, const MetaProp& query, const TableauOptions& options = {});

// Per letter: the lower end of the literal interval when it is closed, else
// the upper end when closed, else the midpoint. Throws std::logic_error if the
// literals are jointly unsatisfiable.
FuzzyInterp extract_model(const std::vector<MetaAtom>& literals);
inline FuzzyInterp extract_model(const Branch& b) { return extract_model(b.literals); }

}  // namespace flogic

#endif  // FLOGIC_FUZZY_TABLEAU_HPP_
