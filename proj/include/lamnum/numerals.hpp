#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamnum/reduction.hpp"
#include "lamnum/report.hpp"
#include "lamnum/term.hpp"

namespace lamnum {

class UnknownSystem : public std::invalid_argument {
 public:
  explicit UnknownSystem(const std::string& name) : std::invalid_argument("unknown numeral system '" + name + "'") {}
};

/// An encoding of the naturals d_0, d_1, ... together with whichever
/// successor, predecessor and zero-test terms are known for it.
struct NumeralSystem {
  std::string name;
  std::function<Term(std::uint64_t)> numeral;
  std::optional<Term> successor;
  std::optional<Term> predecessor;
  std::optional<Term> zero_test;
  /// Closed W with (W d_0) = T and (W d_1) = F, when one is known.
  std::optional<Term> discriminator;
};

/// A sequence U_1, U_2, ... of closed normal terms (indices start at 1).
struct SequenceSpec {
  std::string name;
  std::function<Term(std::uint64_t)> element;
};

/// \f.\x.f (f ... (f x)) with n applications.
Term church(std::uint64_t n);
/// 0 = I, n+1 = <F, n>.
Term barendregt(std::uint64_t n);
/// \x1...\xn.I
Term a_numeral(std::uint64_t n);
/// b_0 = <T, I>, b_n = <F, a_{n-1}>.
Term b_numeral(std::uint64_t n);
/// b with indices 0 and 1 swapped.
Term bprime_numeral(std::uint64_t n);
/// 0 = I, n = \x.x x ... x with n+1 occurrences of x.
Term tilde_numeral(std::uint64_t n);
/// c_0 = I, c_n = <c_{n-1}, e_n>.
Term c_numeral(std::uint64_t n, const SequenceSpec& e);

/// e_n = church(n). The default sequence for the c system.
SequenceSpec church_sequence();
/// e_n = barendregt(n).
SequenceSpec barendregt_sequence();

/// The c system over an arbitrary sequence.
NumeralSystem c_system(SequenceSpec e);

/// One of church, barendregt, a, b, bprime, tilde, c. Throws UnknownSystem.
NumeralSystem builtin_system(std::string_view name);
const std::vector<std::string>& builtin_system_names();

/// The Church predecessor exactly as printed in the source text:
/// \n.(n U <0,0> T) with U = \a.<S (a T), a F>. It maps every numeral to
/// itself; the builtin Church system uses a corrected term instead.
Term church_predecessor_as_printed();

/// Checks (A I) = U_1 and (A <U_1,...,U_n>) = U_{n+1} for 1 <= n < upto.
CheckReport is_generator(const Term& a, const SequenceSpec& u, std::uint64_t upto, Fuel fuel = Fuel{});

}  // namespace lamnum
