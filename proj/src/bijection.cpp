#include "ferrers/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace ferrers {

bool BinaryWord::is_ballot() const {
    int balance = 0;  // zeros minus ones over the prefix
    for (bool bit : bits_) {
        balance += bit ? -1 : 1;
        if (balance < 0) return false;
    }
    return true;
}

std::string BinaryWord::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool bit : bits_) s.push_back(bit ? '1' : '0');
    return s;
}

BinaryWord to_word(const StrictShape& mu, int a) {
    if (a < 1) throw std::invalid_argument("to_word: a must be >= 1");
    std::vector<bool> bits(static_cast<size_t>(a), false);
    for (int part : mu.parts()) {
        if (part >= a)
            throw std::invalid_argument("to_word: part " + std::to_string(part) +
                                        " is not below a=" + std::to_string(a));
        bits[static_cast<size_t>(a - part)] = true;  // w_i sits at position a - i
    }
    return BinaryWord(std::move(bits));
}

StrictShape from_word(const BinaryWord& w) {
    if (!w.is_ballot())
        throw std::invalid_argument("from_word: word " + w.to_string() + " is not a ballot word");
    std::vector<int> parts;
    const int a = w.length();
    for (int pos = 0; pos < a; ++pos)
        if (w.bits()[static_cast<size_t>(pos)]) parts.push_back(a - pos);  // descending
    return StrictShape(std::move(parts));
}

namespace {

void count_rec(int remaining, int ones_left, int balance, Int& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    count_rec(remaining - 1, ones_left, balance + 1, count);  // place a 0
    if (ones_left > 0 && balance > 0)
        count_rec(remaining - 1, ones_left - 1, balance - 1, count);  // place a 1
}

}  // namespace

Int count_ballot_words(int a, int b) {
    if (b < 1 || 2 * b > a) throw std::invalid_argument("count_ballot_words: need 1 <= b <= a/2");
    Int count = 0;
    count_rec(a, b, 0, count);
    return count;
}

Int count_ballot_words_dp(int a, int b) {
    if (b < 1 || 2 * b > a) throw std::invalid_argument("count_ballot_words_dp: need 1 <= b <= a/2");
    // ways[ones][balance] after processing some prefix.
    std::vector<std::vector<Int>> ways(static_cast<size_t>(b) + 1,
                                       std::vector<Int>(static_cast<size_t>(a) + 1));
    ways[0][0] = 1;
    for (int pos = 0; pos < a; ++pos) {
        std::vector<std::vector<Int>> next(static_cast<size_t>(b) + 1,
                                           std::vector<Int>(static_cast<size_t>(a) + 1));
        for (int ones = 0; ones <= b; ++ones)
            for (int balance = 0; balance <= a; ++balance) {
                const Int& w = ways[static_cast<size_t>(ones)][static_cast<size_t>(balance)];
                if (w == 0) continue;
                next[static_cast<size_t>(ones)][static_cast<size_t>(balance) + 1] += w;
                if (ones < b && balance > 0)
                    next[static_cast<size_t>(ones) + 1][static_cast<size_t>(balance) - 1] += w;
            }
        ways = std::move(next);
    }
    Int total = 0;
    for (const auto& row : ways)
        for (const Int& w : row) total += w;
    return total;
}

}  // namespace ferrers
