#ifndef FANO_DUALCOMPLEX_HPP
#define FANO_DUALCOMPLEX_HPP

#include <map>
#include <string>
#include <vector>

namespace fano {

// Combinatorial dual complex assembled from declared strata: one vertex per
// boundary component, one k-cell per irreducible component of a (k+1)-fold
// intersection, with a multiplicity for several components over the same
// vertex set.
struct CellDeclaration {
    int dim = 0;
    std::vector<std::string> vertices;  // dim + 1 distinct vertex labels
    int multiplicity = 1;
};

struct DualComplexDeclaration {
    std::vector<std::string> vertices;
    std::vector<CellDeclaration> cells;
};

struct Cell {
    std::vector<int> vertices;  // sorted, size = dim + 1
    int multiplicity = 1;
};

class DualComplex {
  public:
    static DualComplex build(const DualComplexDeclaration& decl);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<Cell>& cells(int dim) const;
    int dimension() const;  // -1 for the empty complex
    bool is_circle() const;

  private:
    std::vector<std::string> vertex_names_;
    std::map<int, std::vector<Cell>> cells_;
    static const std::vector<Cell> no_cells_;
};

struct CoregularityRecord {
    int dim_x = 0;
    int reg = 0;
    int coreg = 0;
};

// reg = dim of the complex, coreg = dim X - reg - 1
CoregularityRecord coregularity(int dim_x, const DualComplex& c);
CoregularityRecord coregularity_of_dimension(int dim_x, int complex_dim);

// Declarative rule for a two-component boundary whose intersection is a nodal
// arithmetic-genus-one curve in the smooth loci of both du Val components:
// the dual complex has dimension 2. Pure bookkeeping; the flags are carried
// as asserted facts.
struct NodalPairDeclaration {
    std::vector<std::string> components;  // exactly two
    bool du_val = false;
    bool nodal_genus_one_intersection = false;
    bool smooth_locus = false;
};

int lemma_dim2_rule(const NodalPairDeclaration& decl);

// Minimal resolution cycles of the cusp singularities, from the standard
// table: vertex weights are self-intersections (<= -2); a single-vertex cycle
// is a nodal rational curve.
struct ResolutionGraph {
    std::vector<int> weights;  // cyclic
    bool nodal = false;
};

ResolutionGraph resolution_graph(int p, int q, int r);

}  // namespace fano

#endif
