#pragma once

// Subalgebras spanned by sums over the number of descents or peaks:
// ŝol(B_n) = span{y_j}, i⁰_n = span{y⁰_j}, ℘_n = span{p_j}, ẘ℘_n = span{p°_j}.

#include <string>
#include <utility>

#include "peakalg/descent_bases.hpp"
#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

enum class Graded { Y, X, Y0, X0, P, PInt };

const char* graded_name(Graded g);
/// Accepts y, x, y0, x0, p, pint.
Graded parse_graded(std::string_view name);
/// Inclusive index range: y, x: 0..n; y0, x0: 1..n; p: 0..⌊n/2⌋; pint: 1..⌊(n+1)/2⌋.
std::pair<int, int> graded_range(Graded g, int n);

/// The element of the family with index j. Throws std::out_of_range for j outside the range.
AlgElem graded_element(Graded g, int n, int j);

/// φ(y_j) = Σ_i 2^{2i} C(n-2i, j-i) p_i.
AlgElem phi_y_closed_form(int n, int j);
/// φ(y⁰_j) = Σ_{i>=1} 2^{2i-1} C(n-2i+1, j-i) p°_i.
AlgElem phi_y0_closed_form(int n, int j);
/// β(y_j) in ŝol(B_{n-1}): y_0, y_j - y_{j-1}, or -y_{n-1}.
AlgElem solbeta_closed_form(int n, int j);
/// π(p_j) in ℘_{n-2}: p_0, p_j - p_{j-1}, or -p_{⌊n/2⌋-1}. The j = 1 < ⌊n/2⌋ case
/// falls outside the three displayed cases and is given the middle form.
AlgElem wppi_closed_form(int n, int j);
bool wppi_uncovered_case(int n, int j);

/// χ(x⁰_j) and χ(x_j) in Σ(D_n), n >= 2.
AlgElem chi_x0_closed_form(int n, int j);
AlgElem chi_x_closed_form(int n, int j);

/// ŵ℘_n on {p_0..p_⌊n/2⌋, p°_1..p°_⌊(n+1)/2⌋}. A product of two p's is written in the
/// p's, any product with a p° factor in the p°'s.
StructureTable whp_table(int n);

/// Closure, commutativity, dimensions and generation of ŝol(B_n), i⁰_n, ŵ℘_n.
void verify_commutative(int n, VerifyReport& report);
/// Restriction formulas for φ, β, π and the χ images at rank n.
void verify_restricted_maps(int n, VerifyReport& report);
/// The exact-sequence diagram for ŝol(B_n) → ŝol(B_{n-2}) over ℘_n → ℘_{n-2}.
void verify_sbexact(int n, VerifyReport& report);
/// Smallest n <= max_n at which ℘_n (or ẘ℘_n) leaves Loday's span{Σ_{#Des=j} u}.
Outcome loday_witness(bool interior, int max_n);

}  // namespace peakalg
