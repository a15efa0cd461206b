// Copyright 2026 The hypsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypsurf/fpgroup.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>

#include "hypsurf/error.h"

namespace hypsurf {

char to_char(GenSymbol g) {
    switch (g) {
        case GenSymbol::kRho:
            return 'R';
        case GenSymbol::kSigma:
            return 'S';
        case GenSymbol::kRhoInv:
            return 'r';
        case GenSymbol::kSigmaInv:
            return 's';
    }
    return '?';
}

namespace {

class WordParser {
   public:
    explicit WordParser(std::string_view text) : text_(text) {
    }

    Word parse_all() {
        Word w = parse_word();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return w;
    }

   private:
    Word parse_word() {
        Word result;
        size_t terms = 0;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == ')') {
                break;
            }
            result = result * parse_term();
            ++terms;
        }
        if (terms == 0) {
            fail("expected a generator or '('");
        }
        return result;
    }

    Word parse_term() {
        Word atom = parse_atom();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return atom.power(parse_exponent());
        }
        return atom;
    }

    Word parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char c = text_[pos_++];
        switch (c) {
            case 'R':
                return Word({GenSymbol::kRho});
            case 'S':
                return Word({GenSymbol::kSigma});
            case 'r':
                return Word({GenSymbol::kRhoInv});
            case 's':
                return Word({GenSymbol::kSigmaInv});
            case '(': {
                Word inner = parse_word();
                skip_space();
                if (pos_ >= text_.size() || text_[pos_] != ')') {
                    fail("missing ')'");
                }
                ++pos_;
                return inner;
            }
            default:
                --pos_;
                fail("unexpected character");
        }
        return {};
    }

    int parse_exponent() {
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        skip_space();
        size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) {
                fail("exponent too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected integer exponent");
        }
        return static_cast<int>(negative ? -value : value);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw Error(ErrorCode::kParse,
                    msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text) {
    return WordParser(text).parse_all();
}

Word Word::inverse() const {
    std::vector<GenSymbol> out(symbols_.rbegin(), symbols_.rend());
    for (auto &g : out) {
        g = hypsurf::inverse(g);
    }
    return Word(std::move(out));
}

Word Word::power(int exponent) const {
    const Word base = exponent < 0 ? inverse() : *this;
    const int times = exponent < 0 ? -exponent : exponent;
    std::vector<GenSymbol> out;
    out.reserve(base.size() * static_cast<size_t>(times));
    for (int i = 0; i < times; ++i) {
        out.insert(out.end(), base.symbols_.begin(), base.symbols_.end());
    }
    return Word(std::move(out));
}

Word Word::reduced() const {
    std::vector<GenSymbol> out;
    for (GenSymbol g : symbols_) {
        if (!out.empty() && out.back() == hypsurf::inverse(g)) {
            out.pop_back();
        } else {
            out.push_back(g);
        }
    }
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (GenSymbol g : symbols_) {
        out.push_back(to_char(g));
    }
    return out;
}

Word Word::operator*(const Word &other) const {
    std::vector<GenSymbol> out = symbols_;
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(out));
}

Presentation::Presentation(int r_, int s_, std::vector<Word> extra) : r(r_), s(s_) {
    if (r < 2 || s < 2) {
        throw Error(ErrorCode::kInvalidArgument, "r and s must be at least 2");
    }
    for (auto &w : extra) {
        Word red = w.reduced();
        if (red.empty()) {
            throw Error(ErrorCode::kInvalidArgument, "extra relator reduces to the identity");
        }
        extra_relators.push_back(std::move(red));
    }
}

std::vector<Word> Presentation::relators() const {
    std::vector<Word> out;
    out.push_back(Word({GenSymbol::kRho}).power(r));
    out.push_back(Word({GenSymbol::kSigma}).power(s));
    out.push_back(Word({GenSymbol::kRho, GenSymbol::kSigma}).power(2));
    out.insert(out.end(), extra_relators.begin(), extra_relators.end());
    return out;
}

CosetTable::CosetTable(std::vector<std::array<uint32_t, kNumGenSymbols>> act) : act_(std::move(act)) {
}

CosetTable CosetTable::canonical() const {
    constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> new_index(act_.size(), kUnset);
    std::vector<uint32_t> order;
    order.reserve(act_.size());
    if (!act_.empty()) {
        new_index[0] = 0;
        order.push_back(0);
    }
    for (size_t head = 0; head < order.size(); ++head) {
        for (size_t g = 0; g < kNumGenSymbols; ++g) {
            uint32_t next = act_[order[head]][g];
            if (new_index[next] == kUnset) {
                new_index[next] = static_cast<uint32_t>(order.size());
                order.push_back(next);
            }
        }
    }
    std::vector<std::array<uint32_t, kNumGenSymbols>> out(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t g = 0; g < kNumGenSymbols; ++g) {
            out[i][g] = new_index[act_[order[i]][g]];
        }
    }
    return CosetTable(std::move(out));
}

bool CosetTable::is_valid_action() const {
    const size_t n = act_.size();
    for (size_t g = 0; g < kNumGenSymbols; ++g) {
        std::vector<bool> hit(n, false);
        size_t ginv = index_of(hypsurf::inverse(static_cast<GenSymbol>(g)));
        for (size_t i = 0; i < n; ++i) {
            uint32_t j = act_[i][g];
            if (j >= n || hit[j] || act_[j][ginv] != i) {
                return false;
            }
            hit[j] = true;
        }
    }
    return canonical().order() == n;
}

uint32_t word_action(const CosetTable &table, uint32_t start, const Word &word) {
    uint32_t cur = start;
    for (GenSymbol g : word.symbols()) {
        cur = table.act(cur, g);
    }
    return cur;
}

namespace {

// HLT-style enumeration (relator scanning with definitions) plus a lookahead
// pass when the live coset count approaches the limit.
class ToddCoxeter {
   public:
    static constexpr int32_t kUndef = -1;

    ToddCoxeter(const Presentation &p, size_t max_cosets) : max_cosets_(max_cosets) {
        for (const Word &w : p.relators()) {
            std::vector<uint8_t> rel;
            for (GenSymbol g : w.symbols()) {
                rel.push_back(static_cast<uint8_t>(index_of(g)));
            }
            margin_ += rel.size();
            relators_.push_back(std::move(rel));
        }
        std::sort(relators_.begin(), relators_.end(),
                  [](const auto &a, const auto &b) { return a.size() < b.size(); });
        margin_ += kNumGenSymbols;
    }

    CosetTable run() {
        if (max_cosets_ == 0) {
            throw Error(ErrorCode::kEnumerationOverflow, "max_cosets must be positive");
        }
        new_coset();
        for (size_t c = 0; c < table_.size(); ++c) {
            if (live_ + margin_ > max_cosets_ && live_ >= lookahead_floor_) {
                lookahead();
                lookahead_floor_ = live_ + std::max(margin_, max_cosets_ / 32);
            }
            if (table_.size() > 2 * live_ + 4096) {
                c = compact(c);
                continue;
            }
            if (!is_live(c)) {
                continue;
            }
            for (const auto &rel : relators_) {
                scan_and_fill(static_cast<int32_t>(c), rel);
                if (!is_live(c)) {
                    break;
                }
            }
            for (size_t g = 0; g < kNumGenSymbols && is_live(c); ++g) {
                if (table_[c][g] == kUndef) {
                    define(static_cast<int32_t>(c), static_cast<uint8_t>(g));
                }
            }
        }
        return finish();
    }

   private:
    static uint8_t inv(uint8_t g) {
        return static_cast<uint8_t>((g + 2) % 4);
    }

    bool is_live(size_t c) const {
        return parent_[c] == static_cast<int32_t>(c);
    }

    int32_t new_coset() {
        table_.push_back({kUndef, kUndef, kUndef, kUndef});
        parent_.push_back(static_cast<int32_t>(parent_.size()));
        ++live_;
        return static_cast<int32_t>(table_.size() - 1);
    }

    [[noreturn]] void overflow() const {
        throw Error(ErrorCode::kEnumerationOverflow,
                    "coset enumeration needs more than " + std::to_string(max_cosets_) + " live cosets");
    }

    void define(int32_t c, uint8_t g) {
        if (live_ >= max_cosets_) {
            overflow();
        }
        int32_t d = new_coset();
        table_[c][g] = d;
        table_[d][inv(g)] = c;
    }

    void scan_and_fill(int32_t c, const std::vector<uint8_t> &rel) {
        int32_t f = c;
        int32_t b = c;
        int64_t i = 0;
        int64_t j = static_cast<int64_t>(rel.size()) - 1;
        while (true) {
            while (i <= j && table_[f][rel[i]] != kUndef) {
                f = table_[f][rel[i]];
                ++i;
            }
            if (i > j) {
                if (f != c) {
                    coincidence(f, c);
                }
                return;
            }
            while (j >= i && table_[b][inv(rel[j])] != kUndef) {
                b = table_[b][inv(rel[j])];
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                table_[f][rel[i]] = b;
                table_[b][inv(rel[i])] = f;
                return;
            }
            define(f, rel[i]);
        }
    }

    void scan(int32_t c, const std::vector<uint8_t> &rel) {
        int32_t f = c;
        int32_t b = c;
        int64_t i = 0;
        int64_t j = static_cast<int64_t>(rel.size()) - 1;
        while (i <= j && table_[f][rel[i]] != kUndef) {
            f = table_[f][rel[i]];
            ++i;
        }
        if (i > j) {
            if (f != c) {
                coincidence(f, c);
            }
            return;
        }
        while (j >= i && table_[b][inv(rel[j])] != kUndef) {
            b = table_[b][inv(rel[j])];
            --j;
        }
        if (j < i) {
            coincidence(f, b);
        } else if (i == j) {
            table_[f][rel[i]] = b;
            table_[b][inv(rel[i])] = f;
        }
    }

    void lookahead() {
        for (size_t c = 0; c < table_.size(); ++c) {
            for (const auto &rel : relators_) {
                if (!is_live(c)) {
                    break;
                }
                scan(static_cast<int32_t>(c), rel);
            }
        }
    }

    int32_t rep(int32_t k) {
        int32_t root = k;
        while (parent_[root] != root) {
            root = parent_[root];
        }
        while (parent_[k] != root) {
            int32_t next = parent_[k];
            parent_[k] = root;
            k = next;
        }
        return root;
    }

    void merge(int32_t a, int32_t b, std::deque<int32_t> &queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
            return;
        }
        if (a > b) {
            std::swap(a, b);
        }
        parent_[b] = a;
        --live_;
        queue.push_back(b);
    }

    void coincidence(int32_t a, int32_t b) {
        std::deque<int32_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            int32_t e = queue.front();
            queue.pop_front();
            for (uint8_t g = 0; g < kNumGenSymbols; ++g) {
                int32_t d = table_[e][g];
                if (d == kUndef) {
                    continue;
                }
                if (table_[d][inv(g)] == e) {
                    table_[d][inv(g)] = kUndef;
                }
                int32_t mu = rep(e);
                int32_t nu = rep(d);
                if (table_[mu][g] != kUndef) {
                    merge(nu, table_[mu][g], queue);
                } else if (table_[nu][inv(g)] != kUndef) {
                    merge(mu, table_[nu][inv(g)], queue);
                } else {
                    table_[mu][g] = nu;
                    table_[nu][inv(g)] = mu;
                }
            }
        }
    }

    // Renumbers live cosets in order; returns the new index of the first live
    // coset at or after `cursor`, minus one so the caller's ++ lands on it.
    size_t compact(size_t cursor) {
        std::vector<int32_t> new_index(table_.size(), kUndef);
        int32_t next = 0;
        for (size_t c = 0; c < table_.size(); ++c) {
            if (is_live(c)) {
                new_index[c] = next++;
            }
        }
        std::vector<std::array<int32_t, kNumGenSymbols>> table(static_cast<size_t>(next));
        for (size_t c = 0; c < table_.size(); ++c) {
            if (!is_live(c)) {
                continue;
            }
            for (size_t g = 0; g < kNumGenSymbols; ++g) {
                int32_t d = table_[c][g];
                table[new_index[c]][g] = d == kUndef ? kUndef : new_index[rep(d)];
            }
        }
        size_t resume = 0;
        while (cursor < new_index.size() && new_index[cursor] == kUndef) {
            ++cursor;
        }
        resume = cursor < new_index.size() ? static_cast<size_t>(new_index[cursor]) : static_cast<size_t>(next);
        table_ = std::move(table);
        parent_.resize(table_.size());
        for (size_t c = 0; c < parent_.size(); ++c) {
            parent_[c] = static_cast<int32_t>(c);
        }
        // The caller increments before the next use, and the coset at `resume`
        // has not been processed yet.
        return resume == 0 ? static_cast<size_t>(-1) : resume - 1;
    }

    CosetTable finish() {
        std::vector<int32_t> new_index(table_.size(), kUndef);
        uint32_t next = 0;
        for (size_t c = 0; c < table_.size(); ++c) {
            if (is_live(c)) {
                new_index[c] = static_cast<int32_t>(next++);
            }
        }
        std::vector<std::array<uint32_t, kNumGenSymbols>> act(next);
        for (size_t c = 0; c < table_.size(); ++c) {
            if (!is_live(c)) {
                continue;
            }
            for (size_t g = 0; g < kNumGenSymbols; ++g) {
                act[static_cast<size_t>(new_index[c])][g] = static_cast<uint32_t>(new_index[rep(table_[c][g])]);
            }
        }
        return CosetTable(std::move(act)).canonical();
    }

    size_t max_cosets_;
    size_t margin_ = 0;
    size_t live_ = 0;
    size_t lookahead_floor_ = 0;
    std::vector<std::vector<uint8_t>> relators_;
    std::vector<std::array<int32_t, kNumGenSymbols>> table_;
    std::vector<int32_t> parent_;
};

}  // namespace

CosetTable enumerate_quotient(const Presentation &presentation, size_t max_cosets) {
    return ToddCoxeter(presentation, max_cosets).run();
}

}  // namespace hypsurf
