#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidfoq/freealg.hpp"
#include "braidfoq/graded.hpp"
#include "braidfoq/json_io.hpp"

namespace braidfoq {

struct Generator {
    Symbol sym;
    int grading = 0;
};

/// A relation r, understood as r = 0, stored before z-normalisation.
struct Relation {
    std::string label;
    RawElement expr;
};

struct Presentation {
    std::string name;
    GradedSpace context;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    std::map<Symbol, RawTensor> comult;
    std::optional<OmegaData> meta;
    std::optional<ScalarMatrix> f;
};

/// u_ij with the isometry, coisometry and invariance families (3n^2 relations).
Presentation braided_presentation(const OmegaData& data);
/// Adds z, its unitarity and the n^2 commutation relations.
Presentation bosonisation_presentation(const OmegaData& data);
/// Generators X(i,j) = z^(d_i) u_ij and z; invariance is t F = z^d F conj(t).
Presentation t_form_presentation(const OmegaData& data);
/// A_o(F) for invertible F.
Presentation aof_presentation(const ScalarMatrix& f);

/// Beta-grading: d_j - d_i for U(i,j), d_i - d_j for U*(i,j), 0 otherwise.
int symbol_grading(const Symbol& s, const GradedSpace& space);
bool relation_homogeneous(const Relation& r, const GradedSpace& space);

Element relation_element(const Presentation& p, std::size_t index);
Comultiplier comultiplier(const Presentation& p);

struct MorphismSpec {
    std::string source;
    std::string target;
    std::map<Symbol, RawElement> assignment;
};

/// Substitutes generator images (starred ones via adjoints, Z^k via powers).
Element substitute(const RawElement& raw, const std::map<Symbol, RawElement>& assignment, const GradedSpace& target);

/// The circle algebra: a single unitary z.
Presentation circle_presentation(const GradedSpace& space);

struct Projections {
    MorphismSpec iota;
    MorphismSpec pi;
};

Projections projection_morphisms(const OmegaData& data);

struct MorphismCheck {
    bool relations_ok = true;
    bool comult_ok = true;
    bool composite_identity = true;
    std::vector<std::string> failures;
    bool ok() const { return relations_ok && comult_ok && composite_identity; }
};

/// Checks pi on the bosonisation and iota on the circle, and that pi iota = id.
MorphismCheck check_projections(const OmegaData& data);

json serialize(const Presentation& p);
Presentation deserialize(const json& j);
std::string serialize_string(const Presentation& p);

json raw_element_json(const RawElement& e);
RawElement raw_element_from_json(const json& j, const FieldSpec& field);

}  // namespace braidfoq
