#include "linespec/lr.hpp"

#include <stdexcept>

namespace linespec {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer))
    , inner_(std::move(inner))
{
    if (!contains(outer_, inner_))
        throw std::invalid_argument("skew shape " + to_string(outer_) + "/" + to_string(inner_)
                                    + ": inner partition is not contained in outer");
}

namespace {

// Depth-first filling of the cells of gamma/alpha in reverse reading order
// (row by row from the top, right to left inside a row). Each placement
// keeps rows weakly increasing, columns strictly increasing and the prefix
// of the reading word a lattice word; content is bounded by beta.
class LrFiller {
public:
    LrFiller(const Partition& alpha, const Partition& beta, const Partition& gamma, bool stop_at_first)
        : alpha_(alpha)
        , gamma_(gamma)
        , stop_(stop_at_first)
        , labels_(static_cast<int>(length(beta)))
    {
        content_.assign(labels_ + 1, 0);
        used_.assign(labels_ + 1, 0);
        for (int l = 1; l <= labels_; ++l)
            content_[l] = beta[l - 1];
        rows_ = length(gamma);
        grid_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            grid_[r].assign(static_cast<std::size_t>(gamma[r]), 0);
    }

    BigInt run()
    {
        advance_to_next_cell(0, -1);
        return count_;
    }

private:
    // Moves to the next cell after (row, col) in filling order and recurses.
    void advance_to_next_cell(std::size_t row, std::int64_t col)
    {
        if (col >= 0 && col - 1 >= alpha_[row]) {
            place(row, col - 1);
            return;
        }
        // next row that has skew cells
        std::size_t r = col < 0 ? row : row + 1;
        while (r < rows_ && gamma_[r] == alpha_[r])
            ++r;
        if (r >= rows_) {
            ++count_;
            return;
        }
        place(r, gamma_[r] - 1);
    }

    void place(std::size_t row, std::int64_t col)
    {
        auto c = static_cast<std::size_t>(col);
        int hi = labels_;
        // a label in row r (0-based) never exceeds r + 1 in an LR tableau
        hi = std::min<int>(hi, static_cast<int>(row) + 1);
        if (col + 1 < gamma_[row])
            hi = std::min(hi, grid_[row][c + 1]);
        int lo = 1;
        if (row > 0 && col >= alpha_[row - 1])
            lo = grid_[row - 1][c] + 1;
        for (int l = lo; l <= hi; ++l) {
            if (used_[l] >= content_[l])
                continue;
            if (l > 1 && used_[l] + 1 > used_[l - 1])
                continue;
            ++used_[l];
            grid_[row][c] = l;
            advance_to_next_cell(row, col);
            grid_[row][c] = 0;
            --used_[l];
            if (stop_ && count_ > 0)
                return;
        }
    }

    const Partition& alpha_;
    const Partition& gamma_;
    bool stop_;
    int labels_;
    std::size_t rows_ = 0;
    std::vector<std::int64_t> content_;
    std::vector<std::int64_t> used_;
    std::vector<std::vector<int>> grid_;
    BigInt count_ = 0;
};

bool trivially_zero(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    if (size(gamma) != size(alpha) + size(beta))
        return true;
    if (!contains(gamma, alpha) || !contains(gamma, beta))
        return true;
    return length(gamma) > length(alpha) + length(beta);
}

BigInt count_tableaux(const Partition& alpha, const Partition& beta, const Partition& gamma, bool stop_at_first)
{
    if (trivially_zero(alpha, beta, gamma))
        return 0;
    if (beta.empty())
        return 1;
    return LrFiller(alpha, beta, gamma, stop_at_first).run();
}

} // namespace

BigInt lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return count_tableaux(alpha, beta, gamma, false);
}

bool lr_positive(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return count_tableaux(alpha, beta, gamma, true) > 0;
}

} // namespace linespec
