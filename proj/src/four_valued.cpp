#include "flogic/four_valued.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "flogic/errors.hpp"
#include "flogic/normal_form.hpp"
#include "flogic/parser.hpp"

namespace flogic {

const char* to_string(FourValue v) {
  switch (v) {
    case FourValue::Unknown:
      return "{}";
    case FourValue::True:
      return "{t}";
    case FourValue::False:
      return "{f}";
    case FourValue::Both:
      return "{t,f}";
  }
  return "?";
}

FourValue FourInterp::operator()(const std::string& letter) const {
  auto it = values_.find(letter);
  return it == values_.end() ? FourValue::Unknown : it->second;
}

FourValue eval4(const FourInterp& i, const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Top:
    case Prop::Kind::Bottom:
      throw PreconditionError("four-valued evaluation of a constant");
    case Prop::Kind::Atom:
      return i(a.letter());
    case Prop::Kind::Not: {
      FourValue v = eval4(i, a.operand());
      return make_four(has_f(v), has_t(v));
    }
    case Prop::Kind::And: {
      FourValue l = eval4(i, a.lhs()), r = eval4(i, a.rhs());
      return make_four(has_t(l) && has_t(r), has_f(l) || has_f(r));
    }
    case Prop::Kind::Or: {
      FourValue l = eval4(i, a.lhs()), r = eval4(i, a.rhs());
      return make_four(has_t(l) || has_t(r), has_f(l) && has_f(r));
    }
  }
  return FourValue::Unknown;
}

bool satisfies(const FourInterp& i, const SignedProp& s) {
  Prop a = nnf_prop(s.prop);
  bool t = a.is(Prop::Kind::Top) ? true : a.is(Prop::Kind::Bottom) ? false : has_t(eval4(i, a));
  return s.sign == Sign::T ? t : !t;
}

std::string to_string(const SignedProp& s) {
  return (s.sign == Sign::T ? "T " : "NT ") + to_string(s.prop);
}

Decomposition decompose(const SignedProp& s, Semantics semantics) {
  const Prop& a = s.prop;
  const bool t = s.sign == Sign::T;
  switch (a.kind()) {
    case Prop::Kind::And:
      return {t ? Decomposition::Kind::Alpha : Decomposition::Kind::Beta, {s.sign, a.lhs()}, {s.sign, a.rhs()}};
    case Prop::Kind::Or:
      return {t ? Decomposition::Kind::Beta : Decomposition::Kind::Alpha, {s.sign, a.lhs()}, {s.sign, a.rhs()}};
    case Prop::Kind::Not:
      if (semantics == Semantics::TwoValued) {
        SignedProp flipped{t ? Sign::NT : Sign::T, a.operand()};
        return {Decomposition::Kind::Alpha, flipped, flipped};
      }
      if (!a.operand().is(Prop::Kind::Atom)) {
        throw PreconditionError("four-valued decomposition needs NNF input: " + to_string(s));
      }
      return {};
    default:
      return {};
  }
}

namespace {

struct SignedBranch {
  int id = 0;
  bool closed = false;
  std::vector<SignedProp> literals;
  std::vector<SignedProp> pending;
};

class SignedTableau {
 public:
  SignedTableau(Semantics semantics, const TableauOptions& options) : semantics_(semantics), options_(options) {}

  Sat4Outcome run(const std::vector<SignedProp>& input) {
    std::set<std::string> names;
    SignedBranch root;
    root.id = next_id_++;
    stats_.branches_created = 1;
    for (const auto& s : input) {
      collect_letters(s.prop, names);
      SignedProp prepared = semantics_ == Semantics::FourValued ? SignedProp{s.sign, nnf_prop(s.prop)} : s;
      if (!root.closed) add(root, prepared);
    }
    std::vector<SignedBranch> stack;
    if (!root.closed) stack.push_back(std::move(root));

    while (!stack.empty()) {
      SignedBranch b = std::move(stack.back());
      stack.pop_back();

      auto kind_of = [&](const SignedProp& s) { return decompose(s, semantics_).kind; };
      auto alpha = std::find_if(b.pending.begin(), b.pending.end(),
                                [&](const SignedProp& s) { return kind_of(s) == Decomposition::Kind::Alpha; });
      if (alpha != b.pending.end()) {
        SignedProp f = *alpha;
        b.pending.erase(alpha);
        step();
        emit("AND4 " + std::to_string(b.id) + " " + to_string(f));
        Decomposition d = decompose(f, semantics_);
        add(b, d.first);
        if (!b.closed && !(d.second == d.first)) add(b, d.second);
        if (!b.closed) stack.push_back(std::move(b));
        continue;
      }

      if (!b.pending.empty()) {
        SignedProp f = b.pending.front();
        b.pending.erase(b.pending.begin());
        step();
        Decomposition d = decompose(f, semantics_);
        const int parent = b.id;
        SignedBranch left = b;
        SignedBranch right = std::move(b);
        left.id = next_id_++;
        right.id = next_id_++;
        stats_.branches_created += 2;
        emit("OR4 " + std::to_string(parent) + " " + to_string(f) + " => " + std::to_string(left.id) + " " +
             std::to_string(right.id));
        add(left, d.first);
        add(right, d.second);
        if (!right.closed) stack.push_back(std::move(right));
        if (!left.closed) stack.push_back(std::move(left));
        continue;
      }

      emit("COMPLETE4 " + std::to_string(b.id));
      Sat4Outcome out;
      out.satisfiable = true;
      out.model = model_of(b, names);
      out.stats = stats_;
      return out;
    }
    Sat4Outcome out;
    out.stats = stats_;
    return out;
  }

 private:
  void step() {
    ++stats_.rule_applications;
    if (options_.step_limit != 0 && stats_.rule_applications > options_.step_limit) {
      throw ResourceExhausted("tableau step limit exceeded");
    }
  }

  void emit(const std::string& line) {
    if (options_.trace) *options_.trace << line << '\n';
  }

  void close(SignedBranch& b, const std::string& why) {
    b.closed = true;
    ++stats_.branches_closed;
    emit("CLOSE4 " + std::to_string(b.id) + " " + why);
  }

  void add(SignedBranch& b, const SignedProp& s) {
    const Prop& a = s.prop;
    if (a.is_constant()) {
      bool holds = a.is(Prop::Kind::Top) == (s.sign == Sign::T);
      if (!holds) close(b, to_string(s));
      return;
    }
    if (decompose(s, semantics_).kind != Decomposition::Kind::Atomic) {
      b.pending.push_back(s);
      return;
    }
    for (const auto& other : b.literals) {
      if (other.sign != s.sign && other.prop == a) {
        close(b, to_string(other) + " " + to_string(s));
        return;
      }
    }
    if (std::find(b.literals.begin(), b.literals.end(), s) == b.literals.end()) b.literals.push_back(s);
  }

  FourInterp model_of(const SignedBranch& b, const std::set<std::string>& names) const {
    FourInterp m;
    if (semantics_ == Semantics::TwoValued) {
      for (const auto& n : names) m.set(n, FourValue::False);
      for (const auto& l : b.literals) {
        if (l.sign == Sign::T) m.set(l.prop.letter(), FourValue::True);
      }
      return m;
    }
    for (const auto& n : names) m.set(n, FourValue::Unknown);
    for (const auto& l : b.literals) {
      if (l.sign != Sign::T) continue;
      bool positive = l.prop.is(Prop::Kind::Atom);
      const std::string& letter = positive ? l.prop.letter() : l.prop.operand().letter();
      FourValue v = m(letter);
      m.set(letter, positive ? make_four(true, has_f(v)) : make_four(has_t(v), true));
    }
    return m;
  }

  Semantics semantics_;
  const TableauOptions& options_;
  TableauStats stats_;
  int next_id_ = 0;
};

Sat4Outcome enumerate(const std::vector<SignedProp>& s, const std::vector<FourValue>& values, std::uint64_t limit) {
  std::set<std::string> names;
  for (const auto& x : s) collect_letters(x.prop, names);
  std::vector<std::string> order(names.begin(), names.end());
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (total > limit / values.size()) throw ResourceExhausted("enumeration oracle: interpretation count exceeds limit");
    total *= values.size();
  }
  Sat4Outcome out;
  for (std::uint64_t code = 0; code < total; ++code) {
    FourInterp i;
    std::uint64_t c = code;
    for (std::size_t k = order.size(); k-- > 0;) {
      i.set(order[k], values[c % values.size()]);
      c /= values.size();
    }
    ++out.stats.rule_applications;
    if (std::all_of(s.begin(), s.end(), [&](const SignedProp& x) { return satisfies(i, x); })) {
      out.satisfiable = true;
      out.model = i;
      return out;
    }
  }
  return out;
}

std::vector<SignedProp> signed_query(const std::vector<Prop>& theory, const Prop& a) {
  std::vector<SignedProp> s;
  for (const auto& p : theory) s.push_back(T(p));
  s.push_back(NT(a));
  return s;
}

}  // namespace

Sat4Outcome sat4(const std::vector<SignedProp>& s, Semantics semantics, const TableauOptions& options) {
  return SignedTableau(semantics, options).run(s);
}

bool entails4(const std::vector<Prop>& theory, const Prop& a, const TableauOptions& options) {
  return !sat4(signed_query(theory, a), Semantics::FourValued, options).satisfiable;
}

bool entails2(const std::vector<Prop>& theory, const Prop& a, const TableauOptions& options) {
  return !sat4(signed_query(theory, a), Semantics::TwoValued, options).satisfiable;
}

bool tautology2(const Prop& a) { return entails2({}, a); }

bool unsat2(const std::vector<Prop>& theory) {
  std::vector<SignedProp> s;
  for (const auto& p : theory) s.push_back(T(p));
  return !sat4(s, Semantics::TwoValued).satisfiable;
}

Sat4Outcome oracle4(const std::vector<SignedProp>& s, std::uint64_t limit) {
  return enumerate(s, {FourValue::Unknown, FourValue::True, FourValue::False, FourValue::Both}, limit);
}

Sat4Outcome oracle2(const std::vector<SignedProp>& s, std::uint64_t limit) {
  return enumerate(s, {FourValue::False, FourValue::True}, limit);
}

std::vector<SignedProp> parse_signed_list(std::string_view text) {
  std::vector<SignedProp> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::size_t first = 0;
    while (first < body.size() && std::isspace(static_cast<unsigned char>(body[first]))) ++first;
    if (first == body.size()) continue;

    Sign sign = Sign::T;
    std::size_t offset = first;
    auto word_is = [&](std::string_view w) {
      return body.substr(first, w.size()) == w &&
             (first + w.size() == body.size() || std::isspace(static_cast<unsigned char>(body[first + w.size()])));
    };
    if (word_is("NT")) {
      sign = Sign::NT;
      offset = first + 2;
    } else if (word_is("T")) {
      offset = first + 1;
    }
    try {
      out.push_back({sign, parse_prop(body.substr(offset))});
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw ParseError(msg, line, e.column() + static_cast<int>(offset));
    }
  }
  return out;
}

}  // namespace flogic
