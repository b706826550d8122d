#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlattice/monoid.hpp"

namespace ordlattice {

/// Deterministic automaton reading one symbol per tuple: the text of the
/// tuple's `attribute`-th value. Symbols without a transition row use
/// `fallback` when present and leave the state unchanged otherwise.
struct Dfa {
  std::size_t states = 1;
  std::size_t initial = 0;
  std::vector<std::size_t> accepting;
  std::map<std::string, std::vector<std::size_t>> transitions;
  std::optional<std::vector<std::size_t>> fallback;
  std::size_t attribute = 1;

  /// ArgumentError on out-of-range states or rows of the wrong length.
  void validate() const;
  /// State function of the symbol carried by t.
  std::vector<std::size_t> step(const Tuple& t) const;
  bool accepts(const std::vector<std::size_t>& function) const;
};

/// JSON document: {"states": N, "initial": s, "accepting": [...],
/// "transitions": {"sym": [next of state 0, ...]}, "default": [...],
/// "attribute": i}. ParseError on malformed input.
Dfa parse_dfa(const std::string& json_text);
Dfa load_dfa(const std::string& path);

/// The transition monoid: state functions under composition, f + g meaning
/// "apply f, then g". Its carrier is the closure of the letter functions.
class TransitionMonoid : public Monoid {
 public:
  explicit TransitionMonoid(Dfa dfa);
  std::string name() const override { return "dfa"; }
  Element neutral() const override;
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return cancellative_; }
  bool is_finite() const override { return true; }
  std::vector<Element> elements() const override { return elements_; }
  const Dfa& dfa() const { return dfa_; }

 private:
  Dfa dfa_;
  std::vector<Element> elements_;
  bool cancellative_ = false;
};

Element function_element(const std::vector<std::size_t>& f);

}  // namespace ordlattice
