#include "vercat/braided_algebra.hpp"
#include "vercat/invariants.hpp"

namespace vercat::inv {

namespace {

using QField = lin::RationalField;
using QMatrix = lin::Matrix<QField>;

std::string format_vector(const BraidedSymmetricAlgebra<QField>& alg, std::size_t k, const QMatrix& basis,
                          std::size_t col, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const auto& c = basis(i, col);
        if (c == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += c.str() + "*";
        out += alg.monomial_name(k, i, names);
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::vector<Char0Degree> char0_counterexample(std::size_t max_degree)
{
    if (max_degree < 3)
        throw PreconditionError("the characteristic-0 demo needs truncation degree at least 3");
    const QField q;
    const std::vector<std::string> names{"x", "y", "z"};
    const std::vector<int> parity{0, 1, 1};
    // super swap: e_i (x) e_j -> (-1)^{|i||j|} e_j (x) e_i
    QMatrix c(q, 9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c(j * 3 + i, i * 3 + j) = (parity[i] && parity[j]) ? -1 : 1;
    QMatrix d(q, 3, 3);
    d(1, 0) = 1;
    QMatrix sign(q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        sign(i, i) = parity[i] ? -1 : 1;
    BraidedSymmetricAlgebra<QField> alg(q, c, d, sign, max_degree);

    std::vector<Char0Degree> out;
    std::vector<QMatrix> inv;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        const auto n = alg.dim(k);
        inv.push_back(lin::kernel_basis(alg.derivation(k).vconcat(alg.parity(k) - QMatrix::identity(q, n))));
        Char0Degree row{k, inv[k].cols(), 0, {}};
        for (std::size_t col = 0; col < inv[k].cols(); ++col)
            row.basis.push_back(format_vector(alg, k, inv[k], col, names));
        // products of invariants of lower positive degrees
        QMatrix span(q, n, 0);
        for (std::size_t a = 1; a < k; ++a)
            if (inv[a].cols() > 0 && inv[k - a].cols() > 0)
                span = span.hconcat(alg.product(a, k - a) * lin::kronecker(inv[a], inv[k - a]));
        row.new_generators = k == 0 ? row.invariant_dim : row.invariant_dim - lin::rank(span);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace vercat::inv
