#pragma once

#include "spinh/f2_kernels.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace spinh::f2 {

class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t words() const { return w_.size(); }
    bool get(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
    void set(std::size_t i, bool v = true)
    {
        Word m = Word(1) << (i & 63);
        w_[i >> 6] = v ? (w_[i >> 6] | m) : (w_[i >> 6] & ~m);
    }
    void flip(std::size_t i) { w_[i >> 6] ^= Word(1) << (i & 63); }

    BitRow& operator^=(const BitRow& o);
    bool is_zero() const;
    std::size_t count() const;
    // Lowest set bit, or size() if zero.
    std::size_t lowest() const;
    bool operator==(const BitRow& o) const { return bits_ == o.bits_ && w_ == o.w_; }

    const Word* data() const { return w_.data(); }
    Word* data() { return w_.data(); }

private:
    std::size_t bits_ = 0;
    std::vector<Word> w_;
};

// Incremental row reduction over F2 with optional tracking of which inserted rows combine.
class Echelon {
public:
    // tag_width > 0 enables tracking for up to tag_width inserted rows.
    explicit Echelon(std::size_t columns, std::size_t tag_width = 0)
        : cols_(columns), tag_width_(tag_width) {}

    // Returns true when v was independent of the rows already present.
    bool insert(const BitRow& v);
    // Reduces v; when tracking, combo receives the inserted-row indices that sum to (v - residue).
    BitRow reduce(const BitRow& v, BitRow* combo = nullptr) const;
    bool contains(const BitRow& v, std::vector<std::size_t>* combination = nullptr) const;

    // Same span, certificate tracking dropped (so more rows can be inserted).
    Echelon untracked() const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return cols_; }
    std::size_t inserted() const { return inserted_; }
    bool is_pivot(std::size_t col) const { return pivot_.count(col) != 0; }

private:
    std::size_t cols_;
    std::size_t tag_width_;
    std::size_t inserted_ = 0;
    std::vector<BitRow> rows_;
    std::vector<BitRow> tags_;
    std::map<std::size_t, std::size_t> pivot_;
};

std::size_t rank(std::vector<BitRow> rows);

} // namespace spinh::f2
