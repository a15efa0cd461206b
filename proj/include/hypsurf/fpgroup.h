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

#ifndef HYPSURF_FPGROUP_H
#define HYPSURF_FPGROUP_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypsurf {

/// Generators of the rotation subgroup of the {r,s} triangle group. RHO rotates
/// about a face centre, SIGMA about a vertex; (RHO SIGMA) is the half-turn about
/// an edge midpoint.
enum class GenSymbol : uint8_t { kRho = 0, kSigma = 1, kRhoInv = 2, kSigmaInv = 3 };

inline constexpr size_t kNumGenSymbols = 4;

constexpr GenSymbol inverse(GenSymbol g) {
    return static_cast<GenSymbol>((static_cast<uint8_t>(g) + 2) % 4);
}

constexpr size_t index_of(GenSymbol g) {
    return static_cast<size_t>(g);
}

char to_char(GenSymbol g);

class Word {
   public:
    Word() = default;
    explicit Word(std::vector<GenSymbol> symbols) : symbols_(std::move(symbols)) {
    }

    /// Parses the text syntax `R`, `S` (and `r`, `s` for their inverses) with
    /// parenthesised groups and signed integer exponents, e.g.
    /// "((S r)^2 r)^2". Whitespace is ignored. Throws Error(kParse).
    static Word parse(std::string_view text);

    const std::vector<GenSymbol> &symbols() const {
        return symbols_;
    }
    size_t size() const {
        return symbols_.size();
    }
    bool empty() const {
        return symbols_.empty();
    }
    GenSymbol operator[](size_t i) const {
        return symbols_[i];
    }

    Word inverse() const;
    Word power(int exponent) const;
    /// Deletes adjacent g g^-1 pairs until none remain.
    Word reduced() const;
    /// Compact letter form, one character per symbol ("SrSrr...").
    std::string str() const;

    Word operator*(const Word &other) const;
    bool operator==(const Word &other) const = default;

   private:
    std::vector<GenSymbol> symbols_;
};

/// <rho, sigma | rho^r, sigma^s, (rho sigma)^2, extra...>.
struct Presentation {
    int r = 0;
    int s = 0;
    std::vector<Word> extra_relators;

    Presentation(int r, int s, std::vector<Word> extra = {});

    /// rho^r, sigma^s, (rho sigma)^2 followed by the extra relators.
    std::vector<Word> relators() const;
};

/// Right-multiplication action of the generators on the elements of a finite
/// quotient group. Element 0 is the identity; elements are numbered in
/// breadth-first order of discovery from the identity, trying R, S, r, s.
class CosetTable {
   public:
    CosetTable() = default;
    explicit CosetTable(std::vector<std::array<uint32_t, kNumGenSymbols>> act);

    size_t order() const {
        return act_.size();
    }
    uint32_t act(uint32_t element, GenSymbol g) const {
        return act_[element][index_of(g)];
    }
    const std::vector<std::array<uint32_t, kNumGenSymbols>> &rows() const {
        return act_;
    }

    /// Returns the permutation table renumbered breadth-first from element 0.
    CosetTable canonical() const;

    /// True iff every column is a permutation, g and g^-1 are inverse columns and
    /// all elements are reachable from 0.
    bool is_valid_action() const;

   private:
    std::vector<std::array<uint32_t, kNumGenSymbols>> act_;
};

inline constexpr size_t kDefaultMaxCosets = 1'000'000;

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup in the group
/// given by `presentation`, i.e. the full multiplication action of the quotient.
/// Throws Error(kEnumerationOverflow) if more than `max_cosets` live cosets are
/// needed at any point.
CosetTable enumerate_quotient(const Presentation &presentation, size_t max_cosets = kDefaultMaxCosets);

uint32_t word_action(const CosetTable &table, uint32_t start, const Word &word);

}  // namespace hypsurf

#endif
