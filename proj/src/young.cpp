#include <algorithm>
#include <sstream>

#include "abelian/errors.hpp"
#include "abelian/report.hpp"

namespace abelian {

bool YoungDiagram::in_Y(int N) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) return false;
        if (i > 0 && rows[i] > rows[i - 1]) return false;
    }
    return hook() <= N - 1;
}

int YoungDiagram::size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
}

std::string YoungDiagram::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
    os << ")";
    return os.str();
}

std::string young_bits(const YoungDiagram& d, int N) {
    if (!d.in_Y(N)) throw PreconditionError("diagram " + d.str() + " is not in Y_" + std::to_string(N));
    std::string bits;
    if (!d.rows.empty()) {
        int i = static_cast<int>(d.rows.size());  // 1-based row of the current cell
        int j = 1;
        auto inside = [&](int r, int c) { return r >= 1 && r <= static_cast<int>(d.rows.size()) && c <= d.rows[r - 1]; };
        while (true) {
            bits += inside(i + 1, j) ? '0' : '1';
            if (inside(i, j + 1)) ++j;
            else if (i > 1) --i;
            else break;
        }
    }
    return std::string(N - 1 - bits.size(), '0') + bits;
}

std::uint64_t young_encode(const YoungDiagram& d, int N) {
    std::uint64_t v = 0;
    for (char b : young_bits(d, N)) v = v * 2 + (b == '1');
    return v;
}

YoungDiagram young_decode(std::uint64_t code, int N) {
    if (N < 1 || N > 63 || code >= (std::uint64_t{1} << (N - 1)))
        throw PreconditionError("code out of range for Y_" + std::to_string(N));
    YoungDiagram d;
    if (code == 0) return d;
    int top = 63;
    while (!((code >> top) & 1)) --top;
    std::vector<int> bottom_up;
    int j = 1;
    for (int b = top - 1; b >= 0; --b) {
        if ((code >> b) & 1) {
            ++j;
        } else {
            bottom_up.push_back(j);
        }
    }
    bottom_up.push_back(j);
    d.rows.assign(bottom_up.rbegin(), bottom_up.rend());
    return d;
}

std::vector<YoungDiagram> young_lattice(int N) {
    std::vector<YoungDiagram> out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (N - 1)); ++c) out.push_back(young_decode(c, N));
    return out;
}

YoungDiagram young_of_ideal(const RootSystem& rs, const AbelianIdeal& a) {
    if (rs.type().family != 'A') throw PreconditionError("young_of_ideal needs type A");
    const int l = rs.rank();
    std::vector<std::vector<bool>> cell(l + 1, std::vector<bool>(l + 2, false));
    for (const auto& r : a.roots) {
        int i = 0, j = 0;
        for (int k = 1; k <= l; ++k)
            if (r.c[k - 1] != 0) {
                if (i == 0) i = k;
                j = k;
            }
        cell[l + 1 - j][i] = true;
    }
    YoungDiagram d;
    for (int row = 1; row <= l; ++row) {
        int len = 0;
        while (len + 1 <= l && cell[row][len + 1]) ++len;
        for (int c = len + 1; c <= l; ++c)
            if (cell[row][c]) throw InvariantViolation("ideal cells are not left-justified");
        if (len == 0) {
            for (int r2 = row + 1; r2 <= l; ++r2)
                for (int c = 1; c <= l; ++c)
                    if (cell[r2][c]) throw InvariantViolation("ideal cells have an empty row");
            break;
        }
        if (!d.rows.empty() && len > d.rows.back()) throw InvariantViolation("ideal cells are not a partition");
        d.rows.push_back(len);
    }
    return d;
}

// ---------------------------------------------------------------- A11 gallery

namespace {

struct GoldenLine {
    int letter;
    const char* diff;
};

const std::vector<GoldenLine>& left_lines() {
    static const std::vector<GoldenLine> v = {
        {0, "11111111111"},  {1, "01111111111"},  {2, "00111111111"},  {3, "00011111111"},
        {4, "00001111111"},  {11, "11111111110"}, {10, "11111111100"}, {9, "11111111000"},
        {8, "11111110000"},  {7, "11111100000"},  {6, "11111000000"},  {0, "01111111110"},
        {1, "00111111110"},  {2, "00011111110"},  {11, "01111111100"}, {10, "01111111000"},
        {9, "01111110000"},  {8, "01111100000"},  {7, "01111000000"},  {0, "00111111100"},
        {1, "00011111100"},  {11, "00111111000"}, {10, "00111110000"}, {9, "00111100000"},
        {0, "00011111000"},  {11, "00011110000"},
    };
    return v;
}

const std::vector<GoldenLine>& right_lines() {
    static const std::vector<GoldenLine> v = {
        {0, "11111111111"},  {1, "01111111111"},  {11, "11111111110"}, {0, "01111111110"},
        {2, "00111111111"},  {1, "00111111110"},  {10, "11111111100"}, {11, "01111111100"},
        {0, "00111111100"},  {3, "00011111111"},  {2, "00011111110"},  {1, "00011111100"},
        {9, "11111111000"},  {10, "01111111000"}, {11, "00111111000"}, {0, "00011111000"},
        {4, "00001111111"},  {8, "11111110000"},  {9, "01111110000"},  {10, "00111110000"},
        {11, "00011110000"}, {7, "11111100000"},  {8, "01111100000"},  {9, "00111100000"},
        {6, "11111000000"},  {7, "01111000000"},
    };
    return v;
}

AffineWord word_of(const std::vector<GoldenLine>& lines) {
    AffineWord w;
    for (const auto& x : lines) w.letters.push_back(x.letter);
    return w;
}

std::vector<GoldenRow> run(const RootSystem& rs, const std::vector<GoldenLine>& lines, const char* side,
                           GoldenReport& rep) {
    std::vector<GoldenRow> out;
    AffineWord prefix;
    Weight prev = rs.rho();
    for (std::size_t r = 0; r < lines.size(); ++r) {
        prefix = prefix.then(lines[r].letter);
        Weight cur = apply_affine(rs, prefix, rs.rho());
        auto diff = (cur - prev).as_root();
        Root want = Root::zero(11);
        for (int k = 0; k < 11; ++k) want.c[k] = lines[r].diff[k] - '0';
        bool ok = diff && *diff == want && rs.is_positive_root(*diff);
        out.push_back({static_cast<int>(r + 1), lines[r].letter, diff.value_or(Root::zero(11)), want, ok});
        if (!ok) {
            rep.pass = false;
            rep.failures.push_back(std::string(side) + " row " + std::to_string(r + 1) + ": got " +
                                   (diff ? diff->str() : std::string("non-integral")) + ", want " + want.str());
        }
        prev = cur;
    }
    return out;
}

}  // namespace

AffineWord golden_a11_left_word() { return word_of(left_lines()); }
AffineWord golden_a11_right_word() { return word_of(right_lines()); }

GoldenReport golden_a11_check() {
    RootSystem rs = RootSystem::build("A11");
    GoldenReport rep;
    rep.left = run(rs, left_lines(), "left", rep);
    rep.right = run(rs, right_lines(), "right", rep);
    return rep;
}

}  // namespace abelian
