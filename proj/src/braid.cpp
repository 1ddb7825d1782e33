#include "prism/braid.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prism {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    for (int g : letters)
        if (g == 0 || g <= -strands || g >= strands)
            throw std::invalid_argument("generator index out of range for strand count");
}

BraidWord BraidWord::concat(const BraidWord& o) const {
    if (strands != o.strands) throw std::invalid_argument("strand counts differ");
    BraidWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

std::string BraidWord::to_string() const {
    std::ostringstream out;
    out << strands << " |";
    for (int g : letters) out << ' ' << g;
    return out.str();
}

BraidParseError::BraidParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw BraidParseError("expected integer", start);
        try {
            return std::stol(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw BraidParseError("integer out of range", start);
        }
    }
};

void append_range_power(std::vector<int>& letters, int from, int to, long exp, int strands,
                        size_t pos) {
    std::vector<int> base;
    if (from <= to)
        for (int g = from; g <= to; ++g) base.push_back(g);
    else
        for (int g = from; g >= to; --g) base.push_back(g);
    for (int g : base)
        if (g < 1 || g > strands - 1)
            throw BraidParseError("generator index out of range for strand count", pos);
    if (exp >= 0) {
        for (long r = 0; r < exp; ++r)
            letters.insert(letters.end(), base.begin(), base.end());
    } else {
        // Group-word inverse: letters inverted in reversed order.
        std::vector<int> inv(base.rbegin(), base.rend());
        for (int& g : inv) g = -g;
        for (long r = 0; r < -exp; ++r)
            letters.insert(letters.end(), inv.begin(), inv.end());
    }
}

} // namespace

BraidWord parse_braid(const std::string& text) {
    Cursor c{text};
    long strands = c.parse_int();
    if (strands < 2) throw BraidParseError("strand count must be at least 2", 0);
    if (!c.eat('|')) throw BraidParseError("expected '|'", c.i);
    std::vector<int> letters;
    bool any = false;
    while (!c.done()) {
        any = true;
        size_t term_pos = c.i;
        if (c.eat('(')) {
            long from = c.parse_int();
            if (!(c.eat('.') && c.eat('.'))) throw BraidParseError("expected '..'", c.i);
            long to = c.parse_int();
            if (!c.eat(')')) throw BraidParseError("expected ')'", c.i);
            if (!c.eat('^')) throw BraidParseError("expected '^'", c.i);
            long exp = c.parse_int();
            append_range_power(letters, static_cast<int>(from), static_cast<int>(to), exp,
                               static_cast<int>(strands), term_pos);
        } else {
            long g = c.parse_int();
            if (g == 0 || g <= -strands || g >= strands)
                throw BraidParseError("generator index out of range for strand count", term_pos);
            letters.push_back(static_cast<int>(g));
        }
    }
    if (!any) throw BraidParseError("expected at least one term", c.i);
    return BraidWord(static_cast<int>(strands), std::move(letters));
}

Permutation::Permutation(int n) : images(static_cast<size_t>(n)) {
    std::iota(images.begin(), images.end(), 1);
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a bijection");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::after(const Permutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> imgs(images.size());
    for (int i = 1; i <= n(); ++i)
        imgs[static_cast<size_t>(i - 1)] = apply(other.apply(i));
    return Permutation(std::move(imgs));
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images.size(), false);
    int cycles = 0;
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<size_t>(j - 1)]) {
            seen[static_cast<size_t>(j - 1)] = true;
            j = apply(j);
        }
    }
    return cycles;
}

Permutation braid_permutation(const BraidWord& b) {
    // pos[i-1] = current position of the strand that enters at i, tracked
    // bottom to top through each crossing.
    std::vector<int> pos(static_cast<size_t>(b.strands));
    std::iota(pos.begin(), pos.end(), 1);
    for (int g : b.letters) {
        int i = g > 0 ? g : -g;
        for (auto& p : pos)
            if (p == i)
                p = i + 1;
            else if (p == i + 1)
                p = i;
    }
    return Permutation(std::move(pos));
}

int closure_components(const BraidWord& b) { return braid_permutation(b).cycle_count(); }

TwistedTorusSpec::TwistedTorusSpec(int B, int k, int T, int a, TailOrder order)
    : strands(B), twists(k), tail_index(T), tail_exponent(a), tail_order(order) {
    if (B < 3) throw std::invalid_argument("two-block spec needs at least 3 strands");
    if (k < 1) throw std::invalid_argument("twist exponent must be positive");
    if (T < 1 || T > B - 1) throw std::invalid_argument("tail index out of range");
    if (a == 0) throw std::invalid_argument("tail exponent must be nonzero");
}

BraidWord TwistedTorusSpec::expand() const {
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(strands - 1) * static_cast<size_t>(twists) +
                    static_cast<size_t>(tail_index) * static_cast<size_t>(std::abs(tail_exponent)));
    for (int r = 0; r < twists; ++r)
        for (int g = 1; g <= strands - 1; ++g) letters.push_back(g);
    int from = tail_order == TailOrder::Ascending ? 1 : tail_index;
    int to = tail_order == TailOrder::Ascending ? tail_index : 1;
    std::vector<int> base;
    if (from <= to)
        for (int g = from; g <= to; ++g) base.push_back(g);
    else
        for (int g = from; g >= to; --g) base.push_back(g);
    if (tail_exponent > 0) {
        for (int r = 0; r < tail_exponent; ++r)
            letters.insert(letters.end(), base.begin(), base.end());
    } else {
        std::vector<int> inv(base.rbegin(), base.rend());
        for (int& g : inv) g = -g;
        for (int r = 0; r < -tail_exponent; ++r)
            letters.insert(letters.end(), inv.begin(), inv.end());
    }
    return BraidWord(strands, std::move(letters));
}

long long TwistedTorusSpec::surface_slope() const {
    return static_cast<long long>(strands) * twists +
           static_cast<long long>(tail_index + 1) * tail_exponent;
}

std::string TwistedTorusSpec::to_text() const {
    std::ostringstream out;
    out << strands << " | (1.." << strands - 1 << ")^" << twists << " ";
    if (tail_order == TailOrder::Ascending)
        out << "(1.." << tail_index << ")^" << tail_exponent;
    else
        out << "(" << tail_index << "..1)^" << tail_exponent;
    return out.str();
}

TorusKnotSpec::TorusKnotSpec(int e) : exponent(e) {
    if (e == 0) throw std::invalid_argument("torus knot exponent must be nonzero");
}

BraidWord TorusKnotSpec::expand() const {
    std::vector<int> letters(static_cast<size_t>(std::abs(exponent)), exponent > 0 ? 1 : -1);
    return BraidWord(2, std::move(letters));
}

} // namespace prism
