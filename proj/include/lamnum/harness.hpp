#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lamnum/numerals.hpp"
#include "lamnum/parser.hpp"
#include "lamnum/reduction.hpp"
#include "lamnum/report.hpp"
#include "lamnum/term.hpp"

namespace lamnum {

/// A total function N^arity -> N.
struct NumericFunction {
  std::string name;
  std::size_t arity;
  std::function<std::uint64_t(std::span<const std::uint64_t>)> eval;

  std::uint64_t operator()(std::span<const std::uint64_t> args) const { return eval(args); }
};

using Point = std::vector<std::uint64_t>;

/// Closedness, beta-eta normality and pairwise distinctness of d_0..d_{upto-1}.
CheckReport check_system(const NumeralSystem& sys, std::uint64_t upto, Fuel fuel = Fuel{});

/// (s d_n) = d_{n+1} for n < upto.
CheckReport check_successor(const NumeralSystem& sys, const Term& s, std::uint64_t upto, Fuel fuel = Fuel{});

/// (p d_{n+1}) = d_n for n < upto.
CheckReport check_predecessor(const NumeralSystem& sys, const Term& p, std::uint64_t upto, Fuel fuel = Fuel{});

/// (z d_0) = T, and (z d_{n+1}) = F for n < upto.
CheckReport check_zero_test(const NumeralSystem& sys, const Term& z, std::uint64_t upto, Fuel fuel = Fuel{});

/// (fterm d_{n1} ... d_{np}) = d_{phi(n1..np)} for each point.
CheckReport check_definable(const NumeralSystem& sys, const Term& fterm, const NumericFunction& phi,
                            const std::vector<Point>& points, Fuel fuel = Fuel{});

/// Every point of {0..bound-1}^arity, in lexicographic order.
std::vector<Point> grid(std::size_t arity, std::uint64_t bound);

NumericFunction identity_function();
NumericFunction successor_function();
/// n - 1 truncated at 0.
NumericFunction predecessor_function();
/// 0 at 0, 1 everywhere else.
NumericFunction zero_indicator_function();
/// k(n, 0) = n + 1 and k(n, m) = |n - m| for m != 0.
NumericFunction k_function();

/// \n.(z n d_0 d_1): defines the zero indicator from a zero test.
Term phi_from_zero_test(const NumeralSystem& sys, const Term& z);

/// \n.(w01 (fphi n)): a zero test from a definition of the zero indicator
/// and a term separating d_0 (to T) from d_1 (to F).
Term zero_test_from_phi(const NumeralSystem& sys, const Term& fphi, const Term& w01);

/// \n.(w n F T): swaps which of d_0, d_1 goes to T.
Term swap_discriminator(const Term& w);

/// A closed Church-numeral term for k built from the Church successor,
/// predecessor, zero test, addition and truncated subtraction.
Term church_k_term();

struct DerivedCombinators {
  Term successor;
  Term predecessor;
  Term zero_test;
};

/// s = \n.(k n d_0), p = \n.(k n d_1), z = \n.(w10 (k n n)), where w10 sends
/// d_1 to T and d_0 to F.
DerivedCombinators spz_from_k(const NumeralSystem& sys, const Term& kterm, const Term& w10);

/// I, T, F, and for each builtin system `<name>_S`, `<name>_P`, `<name>_Z`,
/// `<name>_W` (discriminator) where present, plus `church_K`.
Program prelude();

}  // namespace lamnum
