#pragma once

#include <span>
#include <string>
#include <vector>

#include "edgereg/context.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/report.hpp"

namespace edgereg::verify {

using algebra::Monomial;
using algebra::MonomialIdeal;
using graph::Graph;
using graph::VertexSet;

/// Statement identifiers used in reports and on the command line.
namespace statement {
inline constexpr const char* froberg = "froberg";
inline constexpr const char* hhz = "hhz";
inline constexpr const char* matching_bounds = "matching_bounds";
inline constexpr const char* bht = "bht";
inline constexpr const char* banerjee = "banerjee";
inline constexpr const char* s_cc = "s_cc";
inline constexpr const char* betti_splitting = "betti_splitting";
inline constexpr const char* doublelinear = "doublelinear";
inline constexpr const char* colon_reg = "colon_reg";
inline constexpr const char* abc = "abc";
inline constexpr const char* blemma = "blemma";
inline constexpr const char* keylemma = "keylemma";
inline constexpr const char* main1 = "main1";
inline constexpr const char* main2 = "main2";
}  // namespace statement

/// Every statement id accepted by `verify`.
std::vector<std::string> statement_ids();

// Graph-level known results -------------------------------------------------

/// reg(I(G)) = 2 iff the complement of G is chordal.
Report check_froberg(const Graph& g, const Context& ctx);
/// Co-chordal iff reg(I) = 2 iff reg(I^k) = 2k for 1 <= k <= k_max iff I has
/// linear quotients (an order found by the search is re-verified).
Report check_hhz(const Graph& g, int k_max, const Context& ctx);
/// im(G) + 1 <= reg(I(G)) <= m(G) + 1.
Report check_matching_bounds(const Graph& g, const Context& ctx);
/// 2k + im(G) - 1 <= reg(I(G)^k) for 1 <= k <= k_max.
Report check_bht(const Graph& g, int k_max, const Context& ctx);
/// Gap-free and cricket-free: reg(I) <= 3 and reg(I^k) = 2k, 2 <= k <= k_max.
Report check_banerjee(const Graph& g, int k_max, const Context& ctx);
/// im(G^S) = im(G) and reg(I(G^S)) = reg(I(G)).
Report check_s_suspension_invariance(const Graph& g, VertexSet s, const Context& ctx);

// Ideal-level checks ---------------------------------------------------------

/// beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J ∩ K) at every
/// (i, j), or every multidegree when `multigraded`; on success also the reg
/// and pd consequences. Throws std::invalid_argument unless G(I) is the
/// disjoint union of G(J) and G(K).
Report check_betti_splitting(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                             const Context& ctx, bool multigraded = false);
/// If J and K both have linear resolutions, I = J + K must split.
Report check_doublelinear(const MonomialIdeal& i, const MonomialIdeal& j, const MonomialIdeal& k,
                          const Context& ctx);
/// reg(I) <= max{reg(I : m) + deg m, reg(I, m)}, with equality to one of the
/// terms when m is a variable occurring in I.
Report check_colon_reg_bound(const MonomialIdeal& i, const Monomial& m, const Context& ctx);
/// reg(J) <= max{A, B, C} for J ⊆ I generated in degrees n2 > n1, with
/// A = reg(J : m_1) + n1, B = max_l reg((J, m_1..m_l) : m_{l+1}) + n1,
/// C = reg(I). An empty `ordering` means the canonical order of G(I).
Report check_abc_bound(const MonomialIdeal& j, const MonomialIdeal& i, std::span<const Monomial> ordering,
                       const Context& ctx);
/// For ordered G(I^n) = (L_1..L_m) and 1 <= j <= k <= m-1: if
/// (L_j : L_{k+1}) ⊄ (I^{n+1} : L_{k+1}) then some i <= k has
/// (L_i : L_{k+1}) generated by a variable and containing (L_j : L_{k+1}).
/// Asserted for gap-free graphs; recorded as a skip otherwise.
Report check_blemma_colon_structure(const Graph& g, int n, std::span<const Monomial> ordering, const Context& ctx);
/// (U I(G)^k : L) is generated by variables for every L in G(I(G)^k).
Report check_keylemma(const Graph& g, VertexSet cover, int k, const Context& ctx);

// Main results on S-suspensions ---------------------------------------------

/// I(G^S)^k = I(G)^k + J I(G^S)^{k-1} is a Betti splitting, where z is the
/// suspension vertex and J = (z x_i : x_i ∉ S).
Report check_main1(const Graph& g, VertexSet s, int k, const Context& ctx);
/// I(G^S)^k has a linear resolution for 2 <= k <= k_max, and
/// I(G)^k ∩ J I(G^S)^{k-1} = z I(G)^k as generator sets.
Report check_main2(const Graph& g, VertexSet s, int k_max, const Context& ctx);

// (im, reg)-invariant extensions -----------------------------------------

/// Throws std::invalid_argument unless g_ext has one more vertex and
/// restricts to g on the first n vertices.
bool is_im_reg_invariant_extension(const Graph& g, const Graph& g_ext, const Context& ctx);
/// The one-vertex extensions of g preserving im and reg, in neighbourhood
/// bitmask order.
std::vector<Graph> enumerate_im_reg_extensions(const Graph& g, const Context& ctx);

/// Ideal J = (z x_i : x_i ∉ S) in n + 1 variables, z = x_n.
MonomialIdeal suspension_join_ideal(const Graph& g, VertexSet s);

}  // namespace edgereg::verify
