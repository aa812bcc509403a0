#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "normext/extend.hpp"
#include "normext/group.hpp"
#include "normext/lattice.hpp"
#include "normext/pseudonorm.hpp"
#include "normext/transversal.hpp"
#include "normext/winding.hpp"

namespace normext::io {

/// All loaders throw std::invalid_argument on malformed content (missing
/// keys, wrong types, unparsable rationals, inconsistent shapes).

nlohmann::json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

Rational rational_from_json(const nlohmann::json& j);
Element element_from_key(const std::string& key, const FiniteAbelianGroup& G);

// ---------------------------------------------------------------------------
// Group files: {"orders":[...], "subgroup_generators":[[...],...]} with an
// optional "subgroups" list of generator lists when one file carries several.

struct GroupFile {
    FiniteAbelianGroup group;
    std::vector<std::vector<Element>> subgroup_generator_sets;
};

GroupFile parse_group_file(const nlohmann::json& j);
GroupFile load_group_file(const std::string& path);

/// Subgroup number `index` of the file (generated subgroups in file order).
Subgroup select_subgroup(const GroupFile& f, std::int64_t index);

// ---------------------------------------------------------------------------
// Norm files: {"group": <group file>, "values": {"[0]":"0", ...}}. The
// embedded group's subgroup (whole group when absent) is the norm's domain.

struct NormFile {
    FiniteAbelianGroup group;
    Subgroup domain;
    Pseudonorm norm;
};

NormFile parse_norm_file(const nlohmann::json& j);
NormFile load_norm_file(const std::string& path);

nlohmann::ordered_json norm_to_json(const Pseudonorm& norm);
void save_norm_file(const std::string& path, const Pseudonorm& norm);

// ---------------------------------------------------------------------------
// Homomorphism files: {"source": <group file>, "target": <group file>,
// "images": [[...], ...]}.

Homomorphism parse_hom_file(const nlohmann::json& j);
Homomorphism load_hom_file(const std::string& path);

// ---------------------------------------------------------------------------
// Collections files: {"k":2, "A":[[1,2],[3,4]], "B":[[1,3],[2,4]]}. Labels
// are JSON integers or strings; they are mapped to dense ids (integers
// first, in numeric order, then strings in lexicographic order).

struct CollectionsFile {
    std::int64_t k = 0;
    std::vector<std::vector<std::int64_t>> A;
    std::vector<std::vector<std::int64_t>> B;
    std::vector<nlohmann::json> labels; // dense id -> original label
};

CollectionsFile parse_collections_file(const nlohmann::json& j);
CollectionsFile load_collections_file(const std::string& path);

/// Original labels (ascending dense id) of a picked id set.
nlohmann::ordered_json labels_to_json(const CollectionsFile& f,
                                      const std::vector<std::int64_t>& picks);

// ---------------------------------------------------------------------------
// Matrix files: {"matrix":[["1/2","1/2"],["1/2","1/2"]]}; entries are
// rational strings or integers.

DoublyStochasticMatrix parse_matrix_file(const nlohmann::json& j);
DoublyStochasticMatrix load_matrix_file(const std::string& path);

nlohmann::ordered_json birkhoff_to_json(const BirkhoffDecomposition& D);

// ---------------------------------------------------------------------------
// CSV reports. Fields containing commas or quotes are double-quoted.

std::string csv_escape(const std::string& field);
std::string double_str(double x);

/// Witness string: "ux=[0];uy=[2];pairs=(g1,mu)x2" with mu the sentinel.
std::string certificate_str(const RhoCertificate& cert, std::size_t mu_index);

/// element,value,certificate over the carrier of an extension result.
void write_extension_csv(const std::string& path, const ExtendedNorm& ext,
                         std::size_t mu_index);
void write_norm_csv(const std::string& path, const Pseudonorm& norm);

nlohmann::ordered_json lattice_to_json(const LatticeExtension& ext);
void write_lattice_csv(const std::string& path, const LatticeExtension& ext);
std::string lattice_point_str(const std::vector<std::int64_t>& numerators,
                              std::int64_t denom);

/// Base-norm table for the lattice case: {"values": {"[0]":"0", ...}}
/// keyed by raw integer vectors of length dim (no modular reduction).
std::map<std::vector<std::int64_t>, Rational> lattice_table_from_json(const nlohmann::json& j,
                                                                      std::int64_t dim);

/// k,norm_e_k,norm_2e_k,ratio,triangle_samples,triangle_max_violation,
/// identity_samples,identity_max_err
void write_winding_csv(const std::string& path, const std::vector<DiscontinuityRow>& rows,
                       const std::vector<WindingSampleSummary>& samples);

} // namespace normext::io
