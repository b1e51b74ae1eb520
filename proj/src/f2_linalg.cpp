#include "spinh/f2_linalg.hpp"
#include "spinh/error.hpp"

#include <bit>

namespace spinh::f2 {

BitRow& BitRow::operator^=(const BitRow& o)
{
    if (o.bits_ != bits_)
        throw DomainError(Errc::invalid_argument, "bit rows of different length");
    active_kernels().xor_into(w_.data(), o.w_.data(), w_.size());
    return *this;
}

bool BitRow::is_zero() const { return active_kernels().is_zero(w_.data(), w_.size()); }

std::size_t BitRow::count() const { return active_kernels().popcount(w_.data(), w_.size()); }

std::size_t BitRow::lowest() const
{
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i])
            return i * 64 + std::countr_zero(w_[i]);
    return bits_;
}

// Stored rows have their pivot as lowest set bit, so one ascending pass clears every pivot column.
BitRow Echelon::reduce(const BitRow& v, BitRow* combo) const
{
    if (v.size() != cols_)
        throw DomainError(Errc::invalid_argument, "row length does not match echelon width");
    BitRow r = v;
    if (combo)
        *combo = BitRow(tag_width_);
    for (auto& [col, idx] : pivot_) {
        if (!r.get(col))
            continue;
        r ^= rows_[idx];
        if (combo && tag_width_)
            *combo ^= tags_[idx];
    }
    return r;
}

bool Echelon::insert(const BitRow& v)
{
    if (tag_width_ && inserted_ >= tag_width_)
        throw DomainError(Errc::bound_exceeded, "echelon tag width exhausted");
    BitRow tag;
    BitRow r = reduce(v, tag_width_ ? &tag : nullptr);
    std::size_t idx = inserted_++;
    if (r.is_zero())
        return false;
    if (tag_width_)
        tag.flip(idx);
    pivot_[r.lowest()] = rows_.size();
    rows_.push_back(std::move(r));
    if (tag_width_)
        tags_.push_back(std::move(tag));
    return true;
}

bool Echelon::contains(const BitRow& v, std::vector<std::size_t>* combination) const
{
    BitRow tag;
    BitRow r = reduce(v, combination ? &tag : nullptr);
    if (!r.is_zero())
        return false;
    if (combination) {
        combination->clear();
        for (std::size_t i = 0; i < tag.size(); ++i)
            if (tag.get(i))
                combination->push_back(i);
    }
    return true;
}

Echelon Echelon::untracked() const
{
    Echelon e(cols_);
    e.rows_ = rows_;
    e.pivot_ = pivot_;
    e.inserted_ = inserted_;
    return e;
}

std::size_t rank(std::vector<BitRow> rows)
{
    if (rows.empty())
        return 0;
    Echelon e(rows.front().size());
    for (auto& r : rows)
        e.insert(r);
    return e.rank();
}

} // namespace spinh::f2
