#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcgsemo {

// Fixed-length string over {0,1}. Immutable after construction; operators that
// "modify" a bitstring return a new one.
class BitString {
  public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t b : bits_) {
            if (b > 1)
                throw std::invalid_argument("BitString: elements must be 0 or 1");
        }
    }

    static BitString zeros(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 0)); }

    static BitString ones(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 1)); }

    // Parses "0110..."; anything but '0'/'1' is rejected.
    static BitString parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c == '0')
                bits.push_back(0);
            else if (c == '1')
                bits.push_back(1);
            else
                throw std::invalid_argument("BitString::parse: invalid character");
        }
        return BitString(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }

    bool bit(std::size_t i) const { return bits_[i] != 0; }

    std::span<const std::uint8_t> bits() const { return bits_; }

    std::span<const std::uint8_t> block(std::size_t block_index_1based,
                                        std::size_t block_length) const {
        if (block_length == 0 || bits_.size() % block_length != 0)
            throw std::invalid_argument("BitString::block: length is not a multiple of block size");
        const std::size_t k = bits_.size() / block_length;
        if (block_index_1based < 1 || block_index_1based > k)
            throw std::invalid_argument("BitString::block: block index out of range");
        return std::span<const std::uint8_t>(bits_).subspan((block_index_1based - 1) * block_length,
                                                            block_length);
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (std::uint8_t b : bits_)
            s.push_back(b ? '1' : '0');
        return s;
    }

    bool operator==(const BitString& other) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

} // namespace bcgsemo
