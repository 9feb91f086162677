#include "k19/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace k19 {

GenMatrix::GenMatrix(std::vector<Word> r) : rows(std::move(r)) {
    for (const Word& w : rows)
        if (w.length() != rows.front().length())
            throw std::invalid_argument("GenMatrix: rows must share one length");
}

int GenMatrix::length() const { return rows.empty() ? 0 : rows.front().length(); }

RowReduction row_reduce(const GenMatrix& m) {
    if (m.rows.empty()) throw std::invalid_argument("row_reduce: empty matrix");
    RowReduction out;
    std::vector<Word> rows = m.rows;
    const int n = m.length();
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if ((rows[i].bits() >> col) & 1) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && ((rows[i].bits() >> col) & 1)) rows[i] = add(rows[i], rows[r]);
        out.pivot_columns.push_back(col + 1);
        ++r;
    }
    out.rank = r;
    out.rref = GenMatrix(std::move(rows));
    return out;
}

LinearCode LinearCode::from_generators(int length, const std::vector<Word>& gens) {
    LinearCode c;
    c.length_ = length;
    if (gens.empty()) return c;
    for (const Word& w : gens)
        if (w.length() != length)
            throw std::invalid_argument("LinearCode: generator length mismatch");
    RowReduction rr = row_reduce(GenMatrix(gens));
    c.basis_.assign(rr.rref.rows.begin(), rr.rref.rows.begin() + rr.rank);
    c.pivots_ = rr.pivot_columns;
    return c;
}

LinearCode LinearCode::trivial(int length) { return from_generators(length, {}); }

std::optional<std::uint32_t> LinearCode::coefficients(const Word& w) const {
    if (w.length() != length_) throw std::invalid_argument("LinearCode: word length mismatch");
    std::uint32_t rem = w.bits();
    std::uint32_t coeff = 0;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        if ((rem >> (pivots_[j] - 1)) & 1) {
            rem ^= basis_[j].bits();
            coeff |= std::uint32_t{1} << j;
        }
    }
    if (rem != 0) return std::nullopt;
    return coeff;
}

bool LinearCode::contains(const Word& w) const { return coefficients(w).has_value(); }

std::vector<Word> enumerate_span(const LinearCode& c) {
    const int k = c.dim();
    if (k > 24) throw std::invalid_argument("enumerate_span: dimension above the 2^24 budget");
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint32_t bits = 0;
        // coefficient of basis row j is bit (k-1-j) of i: row 0 most significant
        for (std::uint64_t t = i; t != 0; t &= t - 1) {
            int b = std::countr_zero(t);
            bits ^= c.basis()[k - 1 - b].bits();
        }
        out.push_back(Word(c.length(), bits));
    }
    return out;
}

std::vector<Coset> coset_decompose(const LinearCode& big, const LinearCode& small,
                                   const std::vector<Word>& reps) {
    if (small.length() != big.length())
        throw std::invalid_argument("coset_decompose: length mismatch");
    for (const Word& b : small.basis())
        if (!big.contains(b))
            throw std::invalid_argument("coset_decompose: small is not contained in big");
    std::vector<Word> gens = small.basis();
    for (const Word& r : reps) {
        if (!big.contains(r))
            throw std::invalid_argument("coset_decompose: representative outside big");
        gens.push_back(r);
    }
    LinearCode joined = LinearCode::from_generators(big.length(), gens);
    if (joined.dim() != big.dim())
        throw std::invalid_argument("coset_decompose: representatives do not generate big");

    // Key each word by its residue after reduction modulo small; the residue
    // is constant exactly on cosets.
    std::vector<Coset> cells;
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (const Word& w : enumerate_span(big)) {
        std::uint32_t rem = w.bits();
        for (std::size_t j = 0; j < small.basis().size(); ++j)
            if ((rem >> (small.pivot_columns()[j] - 1)) & 1) rem ^= small.basis()[j].bits();
        auto [it, fresh] = index.try_emplace(rem, cells.size());
        if (fresh) cells.push_back(Coset{w, {}});
        cells[it->second].words.push_back(w);
    }
    return cells;
}

}  // namespace k19
