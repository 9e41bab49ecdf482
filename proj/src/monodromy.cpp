#include "mirrorcert/matrix.hpp"

#include <utility>

namespace mirrorcert {

std::size_t exact_rank(RationalMatrix m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (m(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(rank));
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (m(r, c) == 0) continue;
            const Rational f = m(r, c) / m(rank, c);
            for (Eigen::Index k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return static_cast<std::size_t>(rank);
}

RationalMatrix matrix_power(const RationalMatrix& m, unsigned e)
{
    RationalMatrix result = RationalMatrix::Identity(m.rows(), m.cols());
    for (unsigned i = 0; i < e; ++i) result = result * m;
    return result;
}

} // namespace mirrorcert
