#include "fano/dualcomplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fano {

const std::vector<Cell> DualComplex::no_cells_;

DualComplex DualComplex::build(const DualComplexDeclaration& decl) {
    DualComplex c;
    std::set<std::string> seen;
    for (const auto& v : decl.vertices) {
        if (v.empty()) throw std::invalid_argument("empty vertex label");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex: " + v);
        c.vertex_names_.push_back(v);
    }
    auto index_of = [&](const std::string& name) {
        auto it = std::find(c.vertex_names_.begin(), c.vertex_names_.end(), name);
        if (it == c.vertex_names_.end())
            throw std::invalid_argument("cell references unknown vertex: " + name);
        return static_cast<int>(it - c.vertex_names_.begin());
    };
    for (const auto& cd : decl.cells) {
        if (cd.dim < 1) throw std::invalid_argument("declared cells must have dimension >= 1");
        if (cd.multiplicity < 1) throw std::invalid_argument("cell multiplicity must be >= 1");
        if (static_cast<int>(cd.vertices.size()) != cd.dim + 1)
            throw std::invalid_argument("a k-cell needs exactly k+1 vertices");
        Cell cell;
        cell.multiplicity = cd.multiplicity;
        std::set<int> verts;
        for (const auto& name : cd.vertices)
            if (!verts.insert(index_of(name)).second)
                throw std::invalid_argument("cell vertices must be distinct");
        cell.vertices.assign(verts.begin(), verts.end());
        // merge multiplicities of repeated declarations
        auto& layer = c.cells_[cd.dim];
        auto it = std::find_if(layer.begin(), layer.end(),
                               [&](const Cell& o) { return o.vertices == cell.vertices; });
        if (it != layer.end())
            it->multiplicity += cell.multiplicity;
        else
            layer.push_back(std::move(cell));
    }
    // face consistency: every (k-1)-subset of a k-cell's vertex set carries at
    // least one (k-1)-cell (vertices always exist)
    for (const auto& [dim, layer] : c.cells_) {
        if (dim == 1) continue;
        for (const Cell& cell : layer) {
            for (size_t skip = 0; skip < cell.vertices.size(); skip++) {
                std::vector<int> face;
                for (size_t i = 0; i < cell.vertices.size(); i++)
                    if (i != skip) face.push_back(cell.vertices[i]);
                const auto& below = c.cells_.count(dim - 1) ? c.cells_.at(dim - 1) : no_cells_;
                bool found = std::any_of(below.begin(), below.end(), [&](const Cell& o) {
                    return o.vertices == face;
                });
                if (!found)
                    throw std::invalid_argument(
                        "inconsistent declaration: a cell has a face with no cell over it");
            }
        }
    }
    return c;
}

const std::vector<Cell>& DualComplex::cells(int dim) const {
    auto it = cells_.find(dim);
    return it == cells_.end() ? no_cells_ : it->second;
}

int DualComplex::dimension() const {
    int d = vertex_names_.empty() ? -1 : 0;
    for (const auto& [dim, layer] : cells_)
        if (!layer.empty()) d = std::max(d, dim);
    return d;
}

bool DualComplex::is_circle() const {
    if (dimension() != 1) return false;
    std::vector<int> degree(vertex_names_.size(), 0);
    std::vector<int> comp(vertex_names_.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return comp[v] == v ? v : comp[v] = find(comp[v]);
    };
    for (const Cell& e : cells(1)) {
        degree[e.vertices[0]] += e.multiplicity;
        degree[e.vertices[1]] += e.multiplicity;
        comp[find(e.vertices[0])] = find(e.vertices[1]);
    }
    for (size_t v = 0; v < degree.size(); v++) {
        if (degree[v] != 2) return false;
        if (find(static_cast<int>(v)) != find(0)) return false;
    }
    return true;
}

CoregularityRecord coregularity_of_dimension(int dim_x, int complex_dim) {
    if (complex_dim > dim_x - 1)
        throw std::invalid_argument(
            "dual complex dimension exceeds dim X - 1: an snc divisor has intersections of at "
            "most dim X components");
    CoregularityRecord rec;
    rec.dim_x = dim_x;
    rec.reg = complex_dim;
    rec.coreg = dim_x - complex_dim - 1;
    return rec;
}

CoregularityRecord coregularity(int dim_x, const DualComplex& c) {
    return coregularity_of_dimension(dim_x, c.dimension());
}

int lemma_dim2_rule(const NodalPairDeclaration& decl) {
    if (decl.components.size() != 2)
        throw std::invalid_argument("the rule applies to exactly two boundary components");
    if (!decl.du_val || !decl.nodal_genus_one_intersection || !decl.smooth_locus)
        throw std::invalid_argument(
            "missing declaration flags (du Val, nodal genus-one intersection, smooth locus)");
    return 2;
}

ResolutionGraph resolution_graph(int p, int q, int r) {
    if (!(2 <= p && p <= q && q <= r))
        throw std::invalid_argument("expect a sorted triple 2 <= p <= q <= r");
    // 1/p + 1/q + 1/r < 1, cleared of denominators
    if (static_cast<long>(q) * r + static_cast<long>(p) * r + static_cast<long>(p) * q >=
        static_cast<long>(p) * q * r)
        throw std::invalid_argument("cusp inequality 1/p + 1/q + 1/r < 1 fails");
    ResolutionGraph g;
    auto chain = [&](int count) {
        for (int i = 0; i < count; i++) g.weights.push_back(-2);
    };
    if (p == 2 && q == 3) {
        g.weights.push_back(-3);
        chain(r - 7);
    } else if (p == 2 && q == 4) {
        g.weights.push_back(-4);
        chain(r - 5);
    } else if (p == 2) {  // q >= 5
        g.weights.push_back(-3);
        chain(q - 5);
        g.weights.push_back(-3);
        chain(r - 5);
    } else if (p == 3 && q == 3) {
        g.weights.push_back(-5);
        chain(r - 4);
    } else if (p == 3) {  // q >= 4
        g.weights.push_back(-4);
        chain(q - 4);
        g.weights.push_back(-3);
        chain(r - 4);
    } else {  // p, q, r >= 4
        g.weights.push_back(-3);
        chain(p - 4);
        g.weights.push_back(-3);
        chain(q - 4);
        g.weights.push_back(-3);
        chain(r - 4);
    }
    g.nodal = g.weights.size() == 1;
    return g;
}

}  // namespace fano
