#pragma once

#include "stacks/bigint.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace stacks {

// One vertex-block of a DLU path: `down` down-steps, then `level` level
// steps, then `up` up-steps, in that fixed order. In a path of piece
// length d every piece has down + level + up = d.
struct Piece {
    int down = 0;
    int level = 0;
    int up = 0;
    friend auto operator<=>(const Piece &, const Piece &) = default;
};

// Lattice path assembled from equal-length pieces. The start height is not
// part of the value; predicates take it as a parameter.
class DluPath {
public:
    explicit DluPath(int piece_length);
    DluPath(int piece_length, std::vector<Piece> pieces);

    int piece_length() const { return d_; }
    const std::vector<Piece> &pieces() const { return pieces_; }
    std::size_t step_count() const {
        return pieces_.size() * static_cast<std::size_t>(d_);
    }

    // Concatenated step string over {'D','L','U'}.
    std::string steps() const;

    bool operator==(const DluPath &) const = default;

private:
    int d_ = 1;
    std::vector<Piece> pieces_;
};

// Heights after each step, starting from `start`; U adds 1, D subtracts 1.
std::vector<int> height_profile(const DluPath &path, int start);

bool is_nonnegative(const DluPath &path, int start);

// Closes an (s,t)-path: prepend the piece L^{d-s}U^s and append D^tL^{d-t}.
// Pattern predicates for paths off the axis are evaluated on this closure.
// Throws std::invalid_argument unless 0 <= s,t <= d.
DluPath extend_boundary(const DluPath &path, int s, int t);

// LIFO matching of up- and down-steps: each D pairs with the most recent
// unmatched U. Keys are U-step indices, values the matching D-step
// indices. Throws std::invalid_argument("unmatched steps") unless the path
// is closed and nonnegative from height 0.
std::map<std::size_t, std::size_t> match_steps(const DluPath &path);

// Pattern test via the step matching: a UU inside one piece whose two
// matches are an adjacent DD inside one piece. The inner U of such a UU
// always pairs with the first D of the DD, since the subpath in between
// returns to its start height without dipping below it. Preconditions as
// match_steps.
bool has_lambda(const DluPath &path);

// Literal quadratic scan over all (UU, DD) factor pairs, checking the
// in-between subpath's height condition directly. Oracle only.
bool has_lambda_oracle(const DluPath &path);

// No factor U L^b D with b in {0, d, ..., (m-2)d}. Every path is
// 1-regular. Works on the raw step string; no preconditions.
bool is_m_regular_path(const DluPath &path, int m);

// Reverse the piece sequence and swap down/up inside each piece. An
// involution; preserves has_lambda and is_m_regular_path.
DluPath mirror(const DluPath &path);

// Brute-force count of m-regular Lambda-avoiding DLU paths of n pieces
// from height s to height t (nonnegative throughout; both pattern
// predicates applied to the boundary extension). Oracle only — the solver
// is the production counting route.
Int enumerate_paths(int n, int d, int s, int t, int m,
                    const std::function<void(const DluPath &)> &visitor = {});

}  // namespace stacks
