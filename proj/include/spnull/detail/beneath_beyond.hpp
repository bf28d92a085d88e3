#ifndef SPNULL_DETAIL_BENEATH_BEYOND_HPP
#define SPNULL_DETAIL_BENEATH_BEYOND_HPP

#include <spnull/detail/integer_ops.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace spnull::detail {

/// Boundary of a full-dimensional integer point configuration in Z^k (k >= 2),
/// as a triangulated closed surface plus its distinct facet hyperplanes.
template <class Int>
struct HullBoundary
{
    struct Hyperplane
    {
        std::vector<Int> normal; // primitive, outward
        Int offset;              // normal . x <= offset on the hull
    };

    std::vector<std::vector<std::size_t>> simplices; // k point indices each, sorted
    std::vector<std::size_t> simplex_plane;          // index into planes
    std::vector<Hyperplane> planes;
    std::vector<std::size_t> extreme;                // sorted point indices
};

/// Incremental beneath-beyond with exact predicates. Points coplanar with a
/// facet are never "visible"; this keeps the boundary a valid triangulation
/// in degenerate configurations, and non-extreme boundary points are filtered
/// afterwards by the rank of their incident facet normals.
template <class Int>
class BeneathBeyond
{
  public:
    BeneathBeyond(const std::vector<std::vector<Int>>& points, const std::vector<std::size_t>& initial)
        : pts_(points), k_(points.front().size())
    {
        interior_.assign(k_, Int(0));
        for (std::size_t idx : initial)
            for (std::size_t j = 0; j < k_; ++j)
                interior_[j] += pts_[idx][j];
        for (std::size_t drop = 0; drop < initial.size(); ++drop) {
            std::vector<std::size_t> verts;
            for (std::size_t i = 0; i < initial.size(); ++i)
                if (i != drop)
                    verts.push_back(initial[i]);
            add_facet(std::move(verts));
        }

        std::vector<char> used(pts_.size(), 0);
        for (std::size_t idx : initial)
            used[idx] = 1;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (!used[i])
                order.push_back(i);
        // fixed-seed Fisher-Yates; random insertion order avoids the bad
        // cases of sorted input on lattice grids
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        for (std::size_t i = order.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(order[i - 1], order[j]);
        }
        for (std::size_t idx : order)
            insert(idx);
    }

    HullBoundary<Int> result() const
    {
        HullBoundary<Int> out;
        std::map<std::vector<Int>, std::size_t> plane_index;
        std::map<std::size_t, std::set<std::size_t>> incident;
        for (const Facet& f : facets_) {
            if (!f.alive)
                continue;
            auto [it, inserted] = plane_index.try_emplace(f.normal, out.planes.size());
            if (inserted)
                out.planes.push_back({f.normal, f.offset});
            out.simplices.push_back(f.verts);
            out.simplex_plane.push_back(it->second);
            for (std::size_t v : f.verts)
                incident[v].insert(it->second);
        }
        for (const auto& [v, planes] : incident) {
            if (planes.size() < k_)
                continue;
            std::vector<std::vector<Integer>> rows;
            for (std::size_t p : planes) {
                std::vector<Integer> row;
                for (const Int& c : out.planes[p].normal)
                    row.push_back(to_integer(c));
                rows.push_back(std::move(row));
            }
            if (rank(std::move(rows)) == k_)
                out.extreme.push_back(v);
        }
        return out;
    }

  private:
    struct Facet
    {
        std::vector<std::size_t> verts;
        std::vector<Int> normal;
        Int offset;
        bool alive = true;
    };

    using Ridge = std::vector<std::size_t>;

    void add_facet(std::vector<std::size_t> verts)
    {
        std::sort(verts.begin(), verts.end());
        std::vector<const std::vector<Int>*> vp;
        for (std::size_t v : verts)
            vp.push_back(&pts_[v]);
        Facet f;
        f.normal = hyperplane_normal(vp);
        f.offset = dot(f.normal, pts_[verts[0]]);
        // interior_ is the sum of k+1 simplex vertices, i.e. (k+1) * centroid
        Int side = dot(f.normal, interior_) - Int(static_cast<long>(k_ + 1)) * f.offset;
        if (side > 0) {
            for (auto& c : f.normal)
                c = -c;
            f.offset = -f.offset;
        }
        else if (side == 0) {
            throw InternalError("degenerate facet in beneath-beyond hull");
        }
        f.verts = std::move(verts);
        const std::size_t id = facets_.size();
        for (std::size_t drop = 0; drop < f.verts.size(); ++drop)
            attach(ridge_of(f.verts, drop), id);
        facets_.push_back(std::move(f));
    }

    static Ridge ridge_of(const std::vector<std::size_t>& verts, std::size_t drop)
    {
        Ridge r;
        r.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (i != drop)
                r.push_back(verts[i]);
        return r;
    }

    void attach(const Ridge& r, std::size_t facet)
    {
        auto& slot = ridges_.try_emplace(r, std::array<std::size_t, 2>{npos, npos}).first->second;
        if (slot[0] == npos)
            slot[0] = facet;
        else if (slot[1] == npos)
            slot[1] = facet;
        else
            throw InternalError("ridge shared by more than two facets");
    }

    void detach(const Ridge& r, std::size_t facet)
    {
        auto it = ridges_.find(r);
        if (it == ridges_.end())
            return;
        auto& slot = it->second;
        if (slot[0] == facet)
            slot[0] = slot[1];
        else if (slot[1] != facet)
            return;
        slot[1] = npos;
        if (slot[0] == npos)
            ridges_.erase(it);
    }

    std::size_t neighbour(const Ridge& r, std::size_t facet) const
    {
        const auto& slot = ridges_.at(r);
        return slot[0] == facet ? slot[1] : slot[0];
    }

    void insert(std::size_t p)
    {
        const auto& pt = pts_[p];
        std::vector<std::size_t> visible;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (facets_[i].alive && dot(facets_[i].normal, pt) > facets_[i].offset)
                visible.push_back(i);
        if (visible.empty())
            return;
        std::vector<char> is_visible(facets_.size(), 0);
        for (std::size_t v : visible)
            is_visible[v] = 1;

        std::vector<Ridge> horizon;
        for (std::size_t f : visible) {
            for (std::size_t drop = 0; drop < k_; ++drop) {
                Ridge r = ridge_of(facets_[f].verts, drop);
                std::size_t g = neighbour(r, f);
                if (g == npos)
                    throw InternalError("open boundary in beneath-beyond hull");
                if (!is_visible[g])
                    horizon.push_back(std::move(r));
            }
        }
        for (std::size_t f : visible) {
            facets_[f].alive = false;
            for (std::size_t drop = 0; drop < k_; ++drop)
                detach(ridge_of(facets_[f].verts, drop), f);
        }
        for (Ridge& r : horizon) {
            r.push_back(p);
            add_facet(std::move(r));
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const std::vector<std::vector<Int>>& pts_;
    std::size_t k_;
    std::vector<Int> interior_;
    std::vector<Facet> facets_;
    std::map<Ridge, std::array<std::size_t, 2>> ridges_{};
};

} // namespace spnull::detail

#endif // SPNULL_DETAIL_BENEATH_BEYOND_HPP
