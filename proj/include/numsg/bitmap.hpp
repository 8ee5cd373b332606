#ifndef NUMSG_BITMAP_HPP
#define NUMSG_BITMAP_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace numsg {

/// Fixed-length bit vector over [0, size). Word-parallel shift-OR is the
/// only nontrivial operation; it drives all sumset computations.
class Bitmap {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitmap() = default;
    explicit Bitmap(std::size_t size)
        : size_(size)
        , words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept {
        return i < size_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1u);
    }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept {
        for (word_type w : words_)
            if (w) return false;
        return true;
    }

    /// *this |= (src << shift), truncated to size().
    void or_shifted(const Bitmap& src, std::size_t shift) noexcept {
        const std::size_t word_shift = shift / kWordBits;
        const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
        const std::size_t n = words_.size();
        if (word_shift >= n) return;
        const std::size_t src_n = src.words_.size();
        for (std::size_t dst = word_shift; dst < n; ++dst) {
            const std::size_t s = dst - word_shift;
            word_type v = s < src_n ? src.words_[s] << bit_shift : 0;
            if (bit_shift != 0 && s >= 1 && s - 1 < src_n) v |= src.words_[s - 1] >> (kWordBits - bit_shift);
            words_[dst] |= v;
        }
        clear_tail();
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * kWordBits + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
    void clear_tail() noexcept {
        const std::size_t r = size_ % kWordBits;
        if (r != 0 && !words_.empty()) words_.back() &= (word_type{1} << r) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

}  // namespace numsg

#endif  // NUMSG_BITMAP_HPP
