#pragma once

#include <array>

#include "lcsapx/core.hpp"

namespace lcsapx {

using SymbolPair = std::array<Symbol, 2>;

/*
 * Two symbols on which neither restriction of A nor of B is balanced at
 * radius rho/s (measured on the restriction's own length). Needs s >= 3 and
 * neither input rho-balanced. The choice only depends on symbol counts and
 * first occurrences, so relabelling the alphabet relabels the answer.
 * Returned in increasing id order.
 */
SymbolPair find_imbalanced_pair(const SymbolString& a, const SymbolString& b, Ratio rho);

bool verify_pair(const SymbolString& a, const SymbolString& b, SymbolPair pair, Ratio rho);

}  // namespace lcsapx
