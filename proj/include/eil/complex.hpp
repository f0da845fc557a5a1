#pragma once

#include <cstdint>
#include <vector>

#include "eil/field.hpp"
#include "eil/vertex_set.hpp"

namespace eil {

/// Finite simplicial complex on vertices 0..n-1, stored by its facets.
///
/// The void complex has no faces at all; the empty complex {∅} has exactly the
/// empty face. They are different objects with different homology.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {VertexSet{}}); }
    /// Keeps only the inclusion-maximal sets among `facets`.
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

    int ambient() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(VertexSet face) const;

    /// All faces grouped by cardinality: faces_by_size()[k] lists the k-subsets, sorted.
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    std::size_t face_count() const;

    /// Void if sigma is not a face.
    SimplicialComplex link(VertexSet sigma) const;
    /// The complex generated by all faces of dimension i.
    SimplicialComplex pure_skeleton(int i) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}
    int n_ = 0;
    std::vector<VertexSet> facets_; ///< sorted, pairwise incomparable
};

/// rank H̃_d over F for d = -1 .. dim, from the face lists grouped by size.
/// Faces are ordered within each size by the given order; signs come from
/// vertex position parity.
std::vector<std::int64_t> reduced_homology_from_faces(const std::vector<std::vector<VertexSet>>& faces_by_size,
                                                      const Field& field);

/// Index 0 holds H̃_{-1}. Empty for the void complex.
std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& x, const Field& field);

/// Σ_d (-1)^d f_d with f_{-1} = 1 (0 for the void complex).
std::int64_t reduced_euler_characteristic(const SimplicialComplex& x);

/// Reisner: every link lk(σ), σ a face including ∅, has H̃_i = 0 for i < dim lk(σ).
bool is_cohen_macaulay(const SimplicialComplex& x, const Field& field);
/// Duval: every pure i-skeleton is Cohen–Macaulay.
bool is_sequentially_cohen_macaulay(const SimplicialComplex& x, const Field& field);

} // namespace eil
