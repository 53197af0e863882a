#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "goeritz/f2_word.hpp"
#include "goeritz/sl2.hpp"

// Vertical primitive disks of the two genus-1 fibered splittings: boundary
// words, the orbit classification, and Farey graph utilities.
//
// Conventions (pinned): the homology twist matrices are
//   T_a = [[1,1],[0,1]]   T_b = [[1,0],[-1,1]]
// so the trefoil and figure-8 monodromies act on H1 by [[0,1],[-1,1]] and
// [[2,1],[1,1]]. Slopes are measured in the dual coordinate pair, under
// which the monodromy acts on slope column vectors by the antidiagonal
// conjugate P M P (P = [[0,1],[1,0]]); this is the orientation convention
// that reproduces the published orbit labels. Boundary words are written in
// the letters r = x1, b = x2 of the opposite handlebody group.

namespace goeritz {

enum class Monodromy { Trefoil, Fig8 };

// Action on H1 in the (a, b) basis.
Mat2 monodromy_matrix(Monodromy m);
// Action on slopes (dual coordinates): P * monodromy_matrix * P.
Mat2 slope_action(Monodromy m);

// Orbit s, m s, ..., m^steps s under the projective column action.
std::vector<Slope> slope_orbit(const Mat2& m, const Slope& s, int steps);

// Boundary word of the vertical disk at slope s, as a cyclically reduced
// word over r = 'x', b = 'y'. Throws std::invalid_argument outside the
// handled ranges (see below).
//
// Trefoil: handled slopes are the six exceptional ones {0, inf, 1, 1/2, -1, 2}
// (the two monodromy orbits) and the generic band 0 < p/q < 1, where the word
// has q-1 letters r, q-1 letters b, q-1-p letters r^-1 and p-1 letters b^-1.
//
// Fig8: handled slopes are the orbit representatives {0, inf, 1, -1, 1/2, -2}
// and the generic ranges (1, inf) and (-1, 0) with the letter counts
//   (1, inf):  2p-q-1 letters b, p-1 letters b^-1, q-1 letters r, p-q-1 letters r^-1
//   (-1, 0):   |q|-1 letters r, |p|+|q|-1 letters r^-1, 2|p|+|q|-1 letters b,
//              |p|-1 letters b^-1
// plus the mirrored normalization ranges (0, 1/2) and (-inf, -2) carrying the
// same counts transported along the a<->b swap.
F2Word boundary_word(Monodromy mono, const Slope& s);

// True iff the vertical disk at slope s is primitive. Implemented by orbit
// normalization followed by boundary_word and the F2 primitivity test; the
// closed-form orbit sets serve as an independent oracle in the tests.
bool is_vertical_primitive(Monodromy mono, const Slope& s);

// All slopes with |p| <= bound and |q| <= bound whose vertical disk is
// primitive. Throws when bound exceeds the configured cap.
std::set<Slope> vertical_primitive_scan(Monodromy mono, long long bound, long long cap = 512);

// Test oracle: the full forward/backward orbits of 0/1 and 1/0 under the
// slope action, restricted to |p|, |q| <= bound.
std::set<Slope> vertical_primitive_closed_form(Monodromy mono, long long bound);

// Exact Farey graph distance (edges between p/q and r/s iff |ps - qr| = 1),
// computed along Stern-Brocot parent geodesics.
int farey_distance(const Slope& s1, const Slope& s2);

// Test oracle: breadth-first search over the Farey graph restricted to
// slopes with |p| <= pbound and q <= qbound.
std::optional<int> farey_distance_bfs(const Slope& s1, const Slope& s2, long long pbound,
                                      long long qbound);

bool farey_adjacent(const Slope& s1, const Slope& s2);

}  // namespace goeritz
