#pragma once

// The peak algebra 𝒫_n ⊆ Σ(A_{n-1}) spanned by P_F, the peak ideal 𝒫°_n spanned by
// P°_F, and the quotient map π : 𝒫_n → 𝒫_{n-2}.

#include <cstdint>
#include <vector>

#include "peakalg/descent_bases.hpp"
#include "peakalg/group_algebra.hpp"
#include "peakalg/report.hpp"

namespace peakalg {

/// Peak (or interior peak) mask of every S_n key. Cached.
const std::vector<std::uint32_t>& peak_masks(int n, bool interior);

/// P_F = Σ_{Peak(w)=F} w.
AlgElem peak_basis(int n, const PeakIndex& f);
/// P_F = Σ_{Λ(J)=F} Y_J.
AlgElem peak_basis_from_y(int n, const PeakIndex& f);
/// P°_F = Σ_{IntPeak(w)=F} w.
AlgElem interior_peak_basis(int n, const PeakIndex& f);
/// P°_F = Σ_{Λ°(J)=F} Y_J.
AlgElem interior_peak_basis_from_y(int n, const PeakIndex& f);

/// {P_F} in increasing mask order, labels like "P{1,3}". Cached.
const Basis& peak_algebra_basis(int n);
/// {P°_F} in increasing mask order, labels like "P°{2}". Cached.
const Basis& peak_ideal_basis(int n);

/// E < F iff max(E △ F) ∈ F. On bitmasks this is numeric order.
bool total_order_less(std::uint32_t e, std::uint32_t f);

/// π(P_F) in 𝒫_{n-2}: P_{F-2} if 1,2 ∉ F; -P_{F∖{1}-2} if 1 ∈ F; 0 if 2 ∈ F.
AlgElem pi_on_basis(int n, const PeakIndex& f);
/// π on a certified element of 𝒫_n (n >= 2). Throws DomainError otherwise.
AlgElem pi_map(const AlgElem& a);

StructureTable peak_table(int n);

/// Closure, unitriangularity, two-sided ideal and quotient checks at rank n.
void verify_peak_theorems(int n, VerifyReport& report);

}  // namespace peakalg
