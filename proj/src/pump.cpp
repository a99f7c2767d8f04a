#include "geolang/pump.hpp"

#include <map>

#include "geolang/error.hpp"

namespace geolang {

PumpDecomposition pump_decomposition(const Fsa& fsa, const Word& prefix, std::size_t i) {
  if (!fsa.deterministic()) {
    throw Error(ErrorKind::NondeterministicInput, "pumping needs a deterministic machine");
  }
  std::vector<State> trace{fsa.initial()};
  for (Letter a : prefix) {
    State next = trace.back() == kNoState ? kNoState : fsa.step(trace.back(), a);
    trace.push_back(next);
  }
  if (trace.back() == kNoState || !fsa.is_accept(trace.back())) {
    throw Error(ErrorKind::NotAccepted, "prefix is not accepted");
  }
  const std::size_t states = fsa.state_count();
  if (prefix.size() < i + states + 1) {
    throw Error(ErrorKind::PrefixTooShort,
                "prefix length " + std::to_string(prefix.size()) + " < i + states + 1 = " +
                    std::to_string(i + states + 1));
  }
  std::map<State, std::size_t> first_seen;
  for (std::size_t k = i; k <= i + states; ++k) {
    auto [it, fresh] = first_seen.emplace(trace[k], k);
    if (fresh) continue;
    std::size_t j = it->second;
    auto at = [&](std::size_t n) { return prefix.begin() + static_cast<std::ptrdiff_t>(n); };
    PumpDecomposition d;
    d.u.assign(prefix.begin(), at(j));
    d.v.assign(at(j), at(k));
    d.q.assign(at(k), prefix.end());
    d.state = trace[k];
    d.machine = std::make_shared<const Fsa>(fsa);
    return d;
  }
  throw Error(ErrorKind::PrefixTooShort, "no repeated state found");  // unreachable by pigeonhole
}

Word periodic_word(const PumpDecomposition& d, std::size_t n) {
  Word w = d.u;
  for (std::size_t k = 0; k < n; ++k) w.insert(w.end(), d.v.begin(), d.v.end());
  if (d.machine) {
    State s = d.machine->run(w);
    if (s == kNoState || !d.machine->is_accept(s)) {
      throw Error(ErrorKind::NotAccepted, "pumped word rejected by its machine");
    }
  }
  return w;
}

MorseCandidate morse_element_candidate(const GroupModel& model, const PumpDecomposition& d,
                                       std::size_t max_power) {
  const Alphabet& alphabet = model.alphabet();
  MorseCandidate c;
  c.element = model.normal_form(concat(concat(d.u, d.v), alphabet.inverse_word(d.u)));
  Word power;
  for (std::size_t n = 1; n <= max_power; ++n) {
    power = model.normal_form(concat(power, c.element));
    c.checked_powers = n;
    long lower = static_cast<long>(n * d.v.size()) - 2 * static_cast<long>(d.u.size());
    if (static_cast<long>(power.size()) < lower) {
      c.growth_failure = n;
      break;
    }
  }
  return c;
}

}  // namespace geolang
