#include "legspec/triple_product.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

namespace legspec
{

namespace
{

// Copy-on-grow snapshot: readers keep whatever table they loaded alive, so
// growth never invalidates values in use by another thread.
class CentralBinomialTable
{
public:
    Real get(Index n)
    {
        auto table = std::atomic_load(&m_table);
        if (n >= static_cast<Index>(table->size()))
            table = grow(n);
        return static_cast<Real>((*table)[n]);
    }

    long double get_extended(Index n)
    {
        auto table = std::atomic_load(&m_table);
        if (n >= static_cast<Index>(table->size()))
            table = grow(n);
        return (*table)[n];
    }

private:
    using Table = std::vector<long double>;

    std::shared_ptr<const Table> grow(Index n)
    {
        std::lock_guard lock(m_mutex);
        auto current = std::atomic_load(&m_table);
        if (n < static_cast<Index>(current->size()))
            return current;
        const Index target = std::max<Index>(n + 1, 2 * static_cast<Index>(current->size()));
        auto next = std::make_shared<Table>(*current);
        next->reserve(target);
        for (Index k = static_cast<Index>(next->size()); k < target; ++k)
            next->push_back(next->back() * (2.0L * k - 1.0L) / (2.0L * k));
        std::shared_ptr<const Table> frozen = std::move(next);
        std::atomic_store(&m_table, frozen);
        return frozen;
    }

    std::mutex m_mutex;
    std::shared_ptr<const Table> m_table = std::make_shared<const Table>(Table{1.0L});
};

CentralBinomialTable& binomial_table()
{
    static CentralBinomialTable table;
    return table;
}

long double g_ext(Index n)
{
    return binomial_table().get_extended(n);
}

} // namespace

bool TripleIndex::admissible() const
{
    if (a < 0 || b < 0 || c < 0)
        return false;
    if (sum() % 2 != 0)
        return false;
    const Index s = sum() / 2;
    return s >= std::max({a, b, c});
}

Real central_binomial_normalized(Index n)
{
    if (n < 0)
        throw DomainError("central_binomial_normalized: negative index");
    return binomial_table().get(n);
}

std::vector<Real> central_binomial_table(Index max_n)
{
    if (max_n < 0)
        throw DomainError("central_binomial_table: negative size");
    std::vector<Real> out(static_cast<std::size_t>(max_n + 1));
    g_ext(max_n);
    for (Index n = 0; n <= max_n; ++n)
        out[static_cast<std::size_t>(n)] = static_cast<Real>(g_ext(n));
    return out;
}

Real triple_product(Index a, Index b, Index c)
{
    const TripleIndex idx{a, b, c};
    if (!idx.admissible())
        return 0.0;
    const Index s = idx.sum() / 2;
    const long double ratio = g_ext(s - a) * g_ext(s - b) * g_ext(s - c) / g_ext(s);
    const long double scale =
        std::sqrt((2.0L * a + 1.0L) * (2.0L * b + 1.0L) * (2.0L * c + 1.0L) / 2.0L) / (2.0L * s + 1.0L);
    return static_cast<Real>(scale * ratio);
}

Real triple_product_normalized(Index a, Index b, Index c)
{
    const TripleIndex idx{a, b, c};
    if (!idx.admissible())
        return 0.0;
    const Index s = idx.sum() / 2;
    const long double ratio = g_ext(s - a) * g_ext(s - b) * g_ext(s - c) / g_ext(s);
    return static_cast<Real>(2.0L * ratio / (2.0L * s + 1.0L));
}

Real hankel_entry(Index a, Index gamma)
{
    if (a < 0 || gamma < a || (a + gamma) % 2 != 0)
        return 0.0;
    const Index s = (a + gamma) / 2;
    return static_cast<Real>(g_ext(s - a) / (g_ext(s) * (2.0L * s + 1.0L)));
}

Real toeplitz_entry(Index a, Index alpha)
{
    if (a < 0 || alpha < 0 || alpha > a || (a + alpha) % 2 != 0)
        return 0.0;
    const Index p = (a + alpha) / 2;
    const Index q = (a - alpha) / 2;
    return static_cast<Real>(g_ext(p) * g_ext(q) / std::sqrt(2.0L));
}

} // namespace legspec
