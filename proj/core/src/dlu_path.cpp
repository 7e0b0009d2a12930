#include "stacks/dlu_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacks {

namespace {

void check_piece(const Piece &p, int d) {
    if (p.down < 0 || p.level < 0 || p.up < 0 || p.down + p.level + p.up != d)
        throw std::invalid_argument("DluPath: piece step counts must be nonnegative and sum to d");
}

}  // namespace

DluPath::DluPath(int piece_length) : d_(piece_length) {
    if (d_ < 1) throw std::invalid_argument("DluPath: piece length must be >= 1");
}

DluPath::DluPath(int piece_length, std::vector<Piece> pieces)
    : d_(piece_length), pieces_(std::move(pieces)) {
    if (d_ < 1) throw std::invalid_argument("DluPath: piece length must be >= 1");
    for (const Piece &p : pieces_) check_piece(p, d_);
}

std::string DluPath::steps() const {
    std::string s;
    s.reserve(step_count());
    for (const Piece &p : pieces_) {
        s.append(static_cast<std::size_t>(p.down), 'D');
        s.append(static_cast<std::size_t>(p.level), 'L');
        s.append(static_cast<std::size_t>(p.up), 'U');
    }
    return s;
}

std::vector<int> height_profile(const DluPath &path, int start) {
    std::vector<int> heights;
    heights.reserve(path.step_count());
    int h = start;
    for (const Piece &p : path.pieces()) {
        for (int k = 0; k < p.down; ++k) heights.push_back(--h);
        for (int k = 0; k < p.level; ++k) heights.push_back(h);
        for (int k = 0; k < p.up; ++k) heights.push_back(++h);
    }
    return heights;
}

bool is_nonnegative(const DluPath &path, int start) {
    if (start < 0) return false;
    int h = start;
    for (const Piece &p : path.pieces()) {
        // The piece dips lowest right after its down-steps.
        h -= p.down;
        if (h < 0) return false;
        h += p.up;
    }
    return true;
}

DluPath extend_boundary(const DluPath &path, int s, int t) {
    const int d = path.piece_length();
    if (s < 0 || t < 0 || s > d || t > d)
        throw std::invalid_argument("extend_boundary: s and t must lie in [0, d]");
    std::vector<Piece> pieces;
    pieces.reserve(path.pieces().size() + 2);
    pieces.push_back({0, d - s, s});
    pieces.insert(pieces.end(), path.pieces().begin(), path.pieces().end());
    pieces.push_back({t, d - t, 0});
    return DluPath(d, std::move(pieces));
}

std::map<std::size_t, std::size_t> match_steps(const DluPath &path) {
    std::map<std::size_t, std::size_t> match;
    std::vector<std::size_t> open;
    std::size_t pos = 0;
    for (const Piece &p : path.pieces()) {
        for (int k = 0; k < p.down; ++k, ++pos) {
            if (open.empty()) throw std::invalid_argument("unmatched steps");
            match[open.back()] = pos;
            open.pop_back();
        }
        pos += static_cast<std::size_t>(p.level);
        for (int k = 0; k < p.up; ++k, ++pos) open.push_back(pos);
    }
    if (!open.empty()) throw std::invalid_argument("unmatched steps");
    return match;
}

bool has_lambda(const DluPath &path) {
    const auto match = match_steps(path);
    const std::size_t d = static_cast<std::size_t>(path.piece_length());
    const std::string steps = path.steps();
    for (std::size_t p = 0; p + 1 < steps.size(); ++p) {
        if (steps[p] != 'U' || steps[p + 1] != 'U') continue;
        if (p / d != (p + 1) / d) continue;  // UU must sit inside one piece
        const std::size_t q1 = match.at(p + 1);
        const std::size_t q2 = match.at(p);
        if (q2 == q1 + 1 && q1 / d == q2 / d) return true;
    }
    return false;
}

bool has_lambda_oracle(const DluPath &path) {
    const std::size_t d = static_cast<std::size_t>(path.piece_length());
    const std::string steps = path.steps();
    const std::vector<int> heights = height_profile(path, 0);
    const std::size_t n = steps.size();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (steps[p] != 'U' || steps[p + 1] != 'U' || p / d != (p + 1) / d) continue;
        const int h = heights[p + 1];  // height after the UU
        int lowest = h;
        // q scans the first step of a candidate DD; the subpath between the
        // UU and the DD must start and end at h and stay at or above it.
        for (std::size_t q = p + 2; q + 1 < n; ++q) {
            if (steps[q] == 'D' && steps[q + 1] == 'D' && q / d == (q + 1) / d &&
                heights[q - 1] == h && lowest >= h)
                return true;
            lowest = std::min(lowest, heights[q]);
        }
    }
    return false;
}

bool is_m_regular_path(const DluPath &path, int m) {
    if (m <= 1) return true;
    const std::string steps = path.steps();
    const long long max_gap = static_cast<long long>(m - 2) * path.piece_length();
    long long gap = 0;
    bool after_up = false;
    for (char c : steps) {
        if (c == 'L') {
            ++gap;
        } else if (c == 'U') {
            after_up = true;
            gap = 0;
        } else {
            if (after_up && gap <= max_gap) return false;
            after_up = false;
            gap = 0;
        }
    }
    return true;
}

DluPath mirror(const DluPath &path) {
    std::vector<Piece> pieces(path.pieces().rbegin(), path.pieces().rend());
    for (Piece &p : pieces) std::swap(p.down, p.up);
    return DluPath(path.piece_length(), std::move(pieces));
}

namespace {

std::vector<Piece> all_pieces(int d) {
    std::vector<Piece> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            out.push_back({a, b, d - a - b});
    return out;
}

struct PathSearch {
    int n, d, s, t, m;
    const std::function<void(const DluPath &)> *visitor;
    std::vector<Piece> alphabet;
    std::vector<Piece> current;
    Int count = 0;

    void descend(int height) {
        const int remaining = n - static_cast<int>(current.size());
        if (remaining == 0) {
            if (height != t) return;
            DluPath path(d, current);
            DluPath closed = extend_boundary(path, s, t);
            if (!has_lambda(closed) && is_m_regular_path(closed, m)) {
                ++count;
                if (visitor && *visitor) (*visitor)(path);
            }
            return;
        }
        if (std::abs(height - t) > remaining * d) return;  // cannot reach t
        for (const Piece &p : alphabet) {
            if (height - p.down < 0) continue;
            current.push_back(p);
            descend(height - p.down + p.up);
            current.pop_back();
        }
    }
};

}  // namespace

Int enumerate_paths(int n, int d, int s, int t, int m,
                    const std::function<void(const DluPath &)> &visitor) {
    if (n < 0) throw std::invalid_argument("enumerate_paths: negative n");
    if (d < 1) throw std::invalid_argument("enumerate_paths: d must be >= 1");
    if (s < 0 || t < 0 || s > d || t > d)
        throw std::invalid_argument("enumerate_paths: s and t must lie in [0, d]");
    PathSearch search{n, d, s, t, m, &visitor, all_pieces(d), {}, 0};
    search.descend(s);
    return search.count;
}

}  // namespace stacks
