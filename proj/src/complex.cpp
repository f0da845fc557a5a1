#include "eil/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "eil/errors.hpp"
#include "eil/linalg.hpp"

namespace eil {

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
    std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> kept;
    for (VertexSet f : facets) {
        if (!f.is_subset_of(VertexSet::range(n))) throw InvalidInput("complex: facet outside the vertex range");
        const bool dominated =
            std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return f.is_subset_of(k); });
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return SimplicialComplex(n, std::move(kept));
}

int SimplicialComplex::dimension() const {
    int d = -2;
    for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    if (is_void()) return {};
    std::vector<std::unordered_set<VertexSet>> seen(static_cast<std::size_t>(dimension() + 2));
    for (VertexSet f : facets_) {
        const std::uint64_t full = f.bits();
        std::uint64_t s = full;
        while (true) {
            const VertexSet face(s);
            seen[face.size()].insert(face);
            if (s == 0) break;
            s = (s - 1) & full;
        }
    }
    std::vector<std::vector<VertexSet>> out;
    out.reserve(seen.size());
    for (const auto& bucket : seen) {
        std::vector<VertexSet> faces(bucket.begin(), bucket.end());
        std::sort(faces.begin(), faces.end());
        out.push_back(std::move(faces));
    }
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& bucket : faces_by_size()) total += bucket.size();
    return total;
}

SimplicialComplex SimplicialComplex::link(VertexSet sigma) const {
    std::vector<VertexSet> out;
    for (VertexSet f : facets_) {
        if (sigma.is_subset_of(f)) out.push_back(f - sigma);
    }
    return from_facets(n_, std::move(out));
}

SimplicialComplex SimplicialComplex::pure_skeleton(int i) const {
    const auto faces = faces_by_size();
    if (i + 1 < 0 || i + 1 >= static_cast<int>(faces.size())) return void_complex(n_);
    return from_facets(n_, faces[i + 1]);
}

std::vector<std::int64_t> reduced_homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size,
                                                      const Field& field) {
    const int sizes = static_cast<int>(faces_by_size.size());
    if (sizes == 0) return {};
    std::vector<std::unordered_map<std::uint64_t, int>> index(static_cast<std::size_t>(sizes));
    for (int k = 0; k < sizes; ++k) {
        for (std::size_t i = 0; i < faces_by_size[k].size(); ++i) index[k].emplace(faces_by_size[k][i].bits(), static_cast<int>(i));
    }
    // boundary_rank[k]: rank of the map from k-vertex faces to (k-1)-vertex faces.
    std::vector<std::int64_t> boundary_rank(static_cast<std::size_t>(sizes) + 1, 0);
    for (int k = 1; k < sizes; ++k) {
        std::vector<SparseColumn> cols;
        cols.reserve(faces_by_size[k].size());
        for (VertexSet face : faces_by_size[k]) {
            SparseColumn col;
            int pos = 0;
            for (int v : face) {
                VertexSet smaller = face;
                smaller.erase(v);
                const auto it = index[k - 1].find(smaller.bits());
                if (it == index[k - 1].end()) throw InvalidInput("complex: face list is not closed under subsets");
                col.emplace_back(it->second, pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
            cols.push_back(std::move(col));
        }
        boundary_rank[k] = static_cast<std::int64_t>(
            matrix_rank(cols, static_cast<int>(faces_by_size[k - 1].size()), field));
    }
    std::vector<std::int64_t> ranks;
    for (int k = 0; k < sizes; ++k) {
        ranks.push_back(static_cast<std::int64_t>(faces_by_size[k].size()) - boundary_rank[k] - boundary_rank[k + 1]);
    }
    return ranks;
}

std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& x, const Field& field) {
    return reduced_homology_from_faces(x.faces_by_size(), field);
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& x) {
    std::int64_t chi = 0;
    const auto faces = x.faces_by_size();
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const std::int64_t f = static_cast<std::int64_t>(faces[k].size());
        chi += (k % 2 == 1) ? f : -f; // a k-vertex face has dimension k - 1
    }
    return chi;
}

bool is_cohen_macaulay(const SimplicialComplex& x, const Field& field) {
    for (const auto& bucket : x.faces_by_size()) {
        for (VertexSet sigma : bucket) {
            const SimplicialComplex lk = x.link(sigma);
            const auto ranks = reduced_homology_ranks(lk, field);
            // ranks[d + 1] is H̃_d; only the top degree may survive.
            for (int d = -1; d < lk.dimension(); ++d) {
                if (ranks[d + 1] != 0) return false;
            }
        }
    }
    return true;
}

bool is_sequentially_cohen_macaulay(const SimplicialComplex& x, const Field& field) {
    for (int i = 0; i <= x.dimension(); ++i) {
        if (!is_cohen_macaulay(x.pure_skeleton(i), field)) return false;
    }
    return true;
}

} // namespace eil
