#ifndef NCSYLV_WORD_HPP
#define NCSYLV_WORD_HPP

// Letters a[i,j] and words over them. A word doubles as a sequence of lattice
// steps: the letter a[i,j] is the step from height i to height j.

#include <cctype>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncsylv {

/// Largest row/column index a letter can carry.
inline constexpr int kMaxIndex = 15;

class Letter {
public:
    constexpr Letter() = default;
    Letter(int row, int col) {
        if (row < 1 || row > kMaxIndex || col < 1 || col > kMaxIndex)
            throw std::out_of_range("letter index out of range: a[" + std::to_string(row) + "," +
                                    std::to_string(col) + "]");
        code_ = static_cast<unsigned char>((row << 4) | col);
    }
    static constexpr Letter from_code(unsigned char c) {
        Letter l;
        l.code_ = c;
        return l;
    }

    constexpr int row() const { return code_ >> 4; }
    constexpr int col() const { return code_ & 15; }
    constexpr unsigned char code() const { return code_; }

    std::string to_string(char name = 'a') const {
        return std::string(1, name) + "[" + std::to_string(row()) + "," + std::to_string(col()) + "]";
    }

    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    unsigned char code_ = 0;
};

/// A finite sequence of letters, stored as packed bytes so it can key hash maps.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) {
        s_.reserve(letters.size());
        for (auto l : letters) s_.push_back(static_cast<char>(l.code()));
    }
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    /// Word from its row word and column word.
    static Word from_indices(std::span<const int> rows, std::span<const int> cols) {
        if (rows.size() != cols.size()) throw std::invalid_argument("row and column words differ in length");
        Word w;
        for (std::size_t p = 0; p < rows.size(); ++p) w.push_back(Letter(rows[p], cols[p]));
        return w;
    }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    Letter operator[](std::size_t p) const { return Letter::from_code(static_cast<unsigned char>(s_[p])); }
    void push_back(Letter l) { s_.push_back(static_cast<char>(l.code())); }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (std::size_t p = 0; p < size(); ++p) out.push_back((*this)[p]);
        return out;
    }
    std::vector<int> rows() const {
        std::vector<int> out;
        for (std::size_t p = 0; p < size(); ++p) out.push_back((*this)[p].row());
        return out;
    }
    std::vector<int> cols() const {
        std::vector<int> out;
        for (std::size_t p = 0; p < size(); ++p) out.push_back((*this)[p].col());
        return out;
    }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
        Word w;
        w.s_ = s_.substr(pos, len);
        return w;
    }

    Word& operator+=(const Word& o) {
        s_ += o.s_;
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }

    const std::string& bytes() const { return s_; }

    /// "a[4,1]a[1,3]"; the empty word prints as "1".
    std::string to_string(char name = 'a') const {
        if (s_.empty()) return "1";
        std::string out;
        for (std::size_t p = 0; p < size(); ++p) out += (*this)[p].to_string(name);
        return out;
    }

    /// Accepts "a[4,1]a[1,3]", the compact "a41a13" (single-digit indices), or "1".
    static Word parse(const std::string& text) {
        Word w;
        std::size_t p = 0;
        auto skip = [&] {
            while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == '*')) ++p;
        };
        skip();
        if (text.substr(p) == "1") return w;
        while (p < text.size()) {
            if (!std::isalpha(static_cast<unsigned char>(text[p])))
                throw std::invalid_argument("bad word syntax: " + text);
            ++p;
            int r = 0, c = 0;
            if (p < text.size() && text[p] == '[') {
                std::size_t close = text.find(']', p);
                std::size_t comma = text.find(',', p);
                if (close == std::string::npos || comma == std::string::npos || comma > close)
                    throw std::invalid_argument("bad word syntax: " + text);
                r = std::stoi(text.substr(p + 1, comma - p - 1));
                c = std::stoi(text.substr(comma + 1, close - comma - 1));
                p = close + 1;
            } else if (p + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[p])) &&
                       std::isdigit(static_cast<unsigned char>(text[p + 1]))) {
                r = text[p] - '0';
                c = text[p + 1] - '0';
                p += 2;
            } else {
                throw std::invalid_argument("bad word syntax: " + text);
            }
            w.push_back(Letter(r, c));
            skip();
        }
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string s_;
};

/// Shortlex order: shorter words first, then lexicographic by (row, col).
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Inversions {
    std::vector<std::pair<int, int>> pairs;  // 1-based positions (i, j), i < j
    int count = 0;
};

inline Inversions inversions(std::span<const int> nu) {
    Inversions inv;
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (std::size_t j = i + 1; j < nu.size(); ++j)
            if (nu[i] > nu[j]) inv.pairs.emplace_back(int(i) + 1, int(j) + 1);
    inv.count = int(inv.pairs.size());
    return inv;
}

inline int inversion_count(std::span<const int> nu) {
    int c = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (std::size_t j = i + 1; j < nu.size(); ++j)
            if (nu[i] > nu[j]) ++c;
    return c;
}

/// Index words written as digit strings, e.g. "132521421325".
inline std::vector<int> parse_index_word(const std::string& s) {
    std::vector<int> out;
    for (char ch : s) {
        if (ch == ' ' || ch == ',') continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
            throw std::invalid_argument("index word must use digits 1-9: " + s);
        out.push_back(ch - '0');
    }
    return out;
}

}  // namespace ncsylv

template <>
struct std::hash<ncsylv::Word> {
    std::size_t operator()(const ncsylv::Word& w) const noexcept { return std::hash<std::string>()(w.bytes()); }
};

#endif  // NCSYLV_WORD_HPP
