#pragma once

#include "linespec/partition.hpp"

namespace linespec {

/// Skew shape outer/inner; construction throws unless inner is contained in outer.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::int64_t cell_count() const { return size(outer_) - size(inner_); }

private:
    Partition outer_;
    Partition inner_;
};

/// Littlewood-Richardson coefficient c^gamma_{alpha,beta}: the number of
/// semistandard fillings of gamma/alpha with content beta whose reverse
/// reading word (rows top to bottom, each read right to left) is a lattice
/// word. Total: impossible triples give 0.
BigInt lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// lr_coefficient(...) > 0, stopping at the first tableau found.
bool lr_positive(const Partition& alpha, const Partition& beta, const Partition& gamma);

} // namespace linespec
