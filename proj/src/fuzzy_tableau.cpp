#include "flogic/fuzzy_tableau.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "flogic/errors.hpp"
#include "flogic/normal_form.hpp"

namespace flogic {

bool subsumes(const MetaAtom& l1, const MetaAtom& l2) {
  if (!l1.is_letter() || !l2.is_letter() || l1.letter() != l2.letter()) return false;
  if (is_lower(l1.rel) != is_lower(l2.rel)) return false;
  const Threshold& n = l1.bound;
  const Threshold& m = l2.bound;
  if (is_lower(l1.rel)) {
    // Only GE n vs GT m needs the strict comparison.
    return (l1.rel == Rel::GE && l2.rel == Rel::GT) ? n > m : n >= m;
  }
  return (l1.rel == Rel::LE && l2.rel == Rel::LT) ? n < m : n <= m;
}

bool contradicts(const MetaAtom& l1, const MetaAtom& l2) {
  if (!l1.is_letter() || !l2.is_letter() || l1.letter() != l2.letter()) return false;
  if (is_lower(l1.rel) == is_lower(l2.rel)) return false;
  const MetaAtom& upper = is_lower(l1.rel) ? l2 : l1;
  const MetaAtom& lower = is_lower(l1.rel) ? l1 : l2;
  // Only LE n vs GE m tolerates equality.
  if (upper.rel == Rel::LE && lower.rel == Rel::GE) return upper.bound < lower.bound;
  return upper.bound <= lower.bound;
}

namespace {

struct WorkBranch {
  Branch label;
  std::vector<MetaProp> pending;  // compound formulas not yet expanded
};

class Tableau {
 public:
  explicit Tableau(const TableauOptions& options) : options_(options) {}

  SatOutcome run(const MetaTheory& theory) {
    WorkBranch root;
    root.label.id = next_id_++;
    stats_.branches_created = 1;
    for (const auto& m : theory) {
      add(root, nnf_meta(m));
      if (closed(root)) break;
    }
    if (!closed(root)) stack_.push_back(std::move(root));

    while (!stack_.empty()) {
      WorkBranch b = std::move(stack_.back());
      stack_.pop_back();

      auto and_it = std::find_if(b.pending.begin(), b.pending.end(),
                                 [](const MetaProp& m) { return m.is(MetaProp::Kind::And); });
      if (and_it != b.pending.end()) {
        MetaProp f = *and_it;
        b.pending.erase(and_it);
        step();
        emit("AND " + std::to_string(b.label.id) + " " + to_string(f));
        add(b, f.lhs());
        if (!closed(b)) add(b, f.rhs());
        if (!closed(b)) stack_.push_back(std::move(b));
        continue;
      }

      auto or_it = std::find_if(b.pending.begin(), b.pending.end(),
                                [](const MetaProp& m) { return m.is(MetaProp::Kind::Or); });
      if (or_it != b.pending.end()) {
        MetaProp f = *or_it;
        b.pending.erase(or_it);
        step();
        const int parent = b.label.id;
        WorkBranch left = b;
        WorkBranch right = std::move(b);
        left.label.id = next_id_++;
        right.label.id = next_id_++;
        stats_.branches_created += 2;
        emit("OR " + std::to_string(parent) + " " +
             to_string(f) + " => " + std::to_string(left.label.id) + " " + std::to_string(right.label.id));
        add(left, f.lhs());
        add(right, f.rhs());
        if (!closed(right)) stack_.push_back(std::move(right));
        if (!closed(left)) stack_.push_back(std::move(left));
        continue;
      }

      b.label.status = Branch::Status::Completed;
      emit("COMPLETE " + std::to_string(b.label.id));
      SatOutcome out;
      out.satisfiable = true;
      out.model = extract_model(b.label.literals);
      for (const auto& l : letters(theory)) {
        if (!out.model.values().count(l)) out.model.set(l, Threshold::zero());
      }
      out.branch = std::move(b.label);
      out.stats = stats_;
      return out;
    }

    SatOutcome out;
    out.stats = stats_;
    return out;
  }

 private:
  static bool closed(const WorkBranch& b) { return b.label.status == Branch::Status::Closed; }

  void step() {
    ++stats_.rule_applications;
    if (options_.step_limit != 0 && stats_.rule_applications > options_.step_limit) {
      throw ResourceExhausted("tableau step limit exceeded");
    }
  }

  void emit(const std::string& line) {
    if (options_.trace) *options_.trace << line << '\n';
  }

  void close(WorkBranch& b, const std::string& why) {
    b.label.status = Branch::Status::Closed;
    ++stats_.branches_closed;
    emit("CLOSE " + std::to_string(b.label.id) + " " + why);
  }

  void add(WorkBranch& b, const MetaProp& f) {
    b.label.formulas.push_back(f);
    switch (f.kind()) {
      case MetaProp::Kind::Top:
        return;
      case MetaProp::Kind::Bottom:
        close(b, "false");
        return;
      case MetaProp::Kind::Atom: {
        const MetaAtom& lit = f.atom();
        for (const auto& other : b.label.literals) {
          if (contradicts(other, lit)) {
            close(b, to_string(other) + " " + to_string(lit));
            return;
          }
        }
        if (options_.subsumption_pruning) {
          for (const auto& other : b.label.literals) {
            if (subsumes(other, lit)) return;
          }
        }
        b.label.literals.push_back(lit);
        return;
      }
      case MetaProp::Kind::Not:
        throw std::logic_error("meta negation survived NNF: " + to_string(f));
      case MetaProp::Kind::And:
      case MetaProp::Kind::Or:
        b.pending.push_back(f);
        return;
    }
  }

  const TableauOptions& options_;
  std::vector<WorkBranch> stack_;
  TableauStats stats_;
  int next_id_ = 0;
};

}  // namespace

SatOutcome sat(const MetaTheory& t, const TableauOptions& options) { return Tableau(options).run(t); }

bool entails(const MetaTheory& t, const MetaProp& query, const TableauOptions& options) {
  return !sat(t.with(nnf_meta(~query)), options).satisfiable;
}

FuzzyInterp extract_model(const std::vector<MetaAtom>& literals) {
  struct Interval {
    Threshold lo = Threshold::zero();
    bool lo_open = false;
    Threshold hi = Threshold::one();
    bool hi_open = false;
  };
  std::map<std::string, Interval> iv;
  for (const auto& l : literals) {
    Interval& i = iv[l.letter()];
    switch (l.rel) {
      case Rel::GE:
        if (l.bound > i.lo) i = {l.bound, false, i.hi, i.hi_open};
        break;
      case Rel::GT:
        if (l.bound >= i.lo) i = {l.bound, true, i.hi, i.hi_open};
        break;
      case Rel::LE:
        if (l.bound < i.hi) i = {i.lo, i.lo_open, l.bound, false};
        break;
      case Rel::LT:
        if (l.bound <= i.hi) i = {i.lo, i.lo_open, l.bound, true};
        break;
    }
  }

  FuzzyInterp model;
  for (const auto& [letter, i] : iv) {
    bool empty = i.hi < i.lo || (i.lo == i.hi && (i.lo_open || i.hi_open));
    if (empty) throw std::logic_error("inconsistent literal set for letter " + letter);
    if (!i.lo_open) {
      model.set(letter, i.lo);
    } else if (!i.hi_open) {
      model.set(letter, i.hi);
    } else {
      model.set(letter, midpoint(i.lo, i.hi));
    }
  }
  return model;
}

}  // namespace flogic
