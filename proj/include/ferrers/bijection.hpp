#pragma once

#include <string>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/shape.hpp"

namespace ferrers {

/// Binary word w_a w_{a-1} ... w_1, stored most-significant index first
/// (bits()[0] is w_a). A ballot word has no prefix, read from w_a down, with
/// more 1's than 0's.
class BinaryWord {
public:
    explicit BinaryWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

    const std::vector<bool>& bits() const { return bits_; }
    int length() const { return static_cast<int>(bits_.size()); }
    bool is_ballot() const;

    bool operator==(const BinaryWord&) const = default;

    std::string to_string() const;  // "00101" = w_5 w_4 w_3 w_2 w_1

private:
    std::vector<bool> bits_;
};

/// w_i = 1 iff i is a part of mu; word length a. Every part must be < a.
BinaryWord to_word(const StrictShape& mu, int a);

/// Inverse: parts are the 1-bit indices. Rejects non-ballot words
/// (std::invalid_argument), since only ballot words are in the image of
/// partitions fitting the two-apart family.
StrictShape from_word(const BinaryWord& w);

/// Number of ballot words of length a with at most b ones, by pruned direct
/// enumeration. Requires 1 <= b <= a/2.
Int count_ballot_words(int a, int b);

/// Same count via the (position, ones-used, prefix-balance) DP; independent
/// route used to cross-check the enumeration and to reach larger a.
Int count_ballot_words_dp(int a, int b);

}  // namespace ferrers
