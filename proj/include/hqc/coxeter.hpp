#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hqc/complex.hpp"

namespace hqc {

/// Finitely presented group. Generators are involutory unless an inverse
/// map is given (inverse[g] = index of g^-1).
struct GroupPresentation {
    std::size_t num_generators = 0;
    std::vector<std::vector<int>> relators;  // words over generator indices
    std::vector<int> inverse;                // empty means every generator is an involution
};

/// Reflection group of the {r,s} tessellation on generators a=0, b=1, c=2:
/// a^2 = b^2 = c^2 = (ab)^r = (bc)^s = (ac)^2 = e.
GroupPresentation reflection_group(int r, int s);

/// Proper (orientation-preserving) symmetries of the {r,s} tessellation on
/// generators rho=0, rho^-1=1, sigma=2, sigma^-1=3 with rho^r = sigma^s =
/// (rho sigma)^2 = e. Used for quotient surfaces whose deck group is normal
/// only in the rotation subgroup (chiral quotients).
GroupPresentation rotation_group(int r, int s);

/// Rewrite an even-length word over the reflection generators a,b,c into a
/// word over the rotation generators (ab=rho, bc=sigma). Throws
/// std::invalid_argument for odd-length words.
std::vector<int> to_rotation_word(const std::vector<int>& word);

/// Permutation action of the generators on cosets (regular representation
/// when enumerated over the trivial subgroup).
struct CosetTable {
    std::size_t num_cosets = 0;
    std::vector<std::vector<int>> action;  // action[g][coset]

    /// Image of a coset under a word, applied left to right.
    int apply(int coset, const std::vector<int>& word) const;

    /// True iff the word acts trivially on every coset.
    bool word_is_identity(const std::vector<int>& word) const;
};

/// Coset enumeration over the trivial subgroup of the quotient of pres by
/// the normal closure of extra_relators. Throws std::runtime_error when
/// max_cosets live cosets are exceeded (possibly infinite quotient) and
/// std::invalid_argument on malformed words.
CosetTable enumerate_quotient(const GroupPresentation& pres,
                              const std::vector<std::vector<int>>& extra_relators,
                              std::size_t max_cosets = 1000000);

/// True iff the images of a, b, c, (ab)^i for 1<=i<r and (bc)^j for 1<=j<s
/// are all fixed-point-free (in the regular representation: non-identity).
bool check_fixed_point_free(const CosetTable& table, int r, int s);

/// Fixed-point-free check for a rotation_group table: the images of rho^i
/// for 1<=i<r, sigma^j for 1<=j<s and rho*sigma must be non-identity.
bool check_fixed_point_free_rotation(const CosetTable& table, int r, int s);

/// Quotient surface: faces, edges and vertices are the orbits of the
/// subgroups <a,b>, <a,c> and <b,c>; cells are incident when their orbits
/// intersect (an odd number of half-incidences). Requires a
/// fixed-point-free table.
ChainComplex build_surface_complex(const CosetTable& table, int r, int s);

/// Quotient surface from a rotation_group table (cosets are oriented
/// flags): faces = <rho>-orbits, vertices = <sigma>-orbits, edges =
/// <rho sigma>-orbits; incidence counts shared flags mod 2. Requires a
/// fixed-point-free table.
ChainComplex build_surface_complex_rotation(const CosetTable& table, int r, int s);

/// The {4,r} surfaces of the semidirect-product family: r involutory
/// generators g_1..g_r plus x, y, with (g_i g_{i+r/2})^L = e and all other
/// distinct pairs commuting; x and y permute the g_i. Edge count is
/// (r/2) (2L)^(r/2).
ChainComplex build_appendix_a_surface(int r, std::size_t L, std::size_t max_cosets = 1000000);

/// Parse a word over tokens a,b,c (involutions) and r,R,s,S (the rotations
/// ab, ba, bc, cb), with parenthesized groups and ^k repetition (k may be
/// negative, meaning the inverse). Returns a word over indices {0,1,2}.
/// Throws std::invalid_argument on syntax errors.
std::vector<int> parse_relator_word(const std::string& text);

/// Comma-separated list of relator words.
std::vector<std::vector<int>> parse_relator_list(const std::string& text);

}  // namespace hqc
