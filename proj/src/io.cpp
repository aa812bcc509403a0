#include "normext/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace normext::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::int64_t int_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

Element normalize_element(const std::vector<std::int64_t>& raw, const FiniteAbelianGroup& G,
                          const std::string& what) {
    if (raw.size() != G.rank())
        bad(what + " must have " + std::to_string(G.rank()) + " coordinates, got " +
            std::to_string(raw.size()));
    Element e(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::int64_t o = G.orders()[i];
        e[i] = ((raw[i] % o) + o) % o;
    }
    return e;
}

Element element_from_json(const nlohmann::json& j, const FiniteAbelianGroup& G,
                          const std::string& what) {
    if (!j.is_array()) bad(what + " must be an integer array");
    std::vector<std::int64_t> raw;
    raw.reserve(j.size());
    for (const auto& c : j) raw.push_back(int_from_json(c, what.c_str()));
    return normalize_element(raw, G, what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad("invalid JSON in " + path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("failed to write " + path);
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    bad("rational values must be strings like \"3/4\" or integers");
}

namespace {

std::vector<std::int64_t> ints_from_key(const std::string& key) {
    std::string_view s = trim(key);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        bad("element key must look like \"[a,b]\": " + key);
    s = s.substr(1, s.size() - 2);

    std::vector<std::int64_t> raw;
    if (!trim(s).empty()) {
        while (true) {
            const std::size_t comma = s.find(',');
            std::string_view tok = trim(s.substr(0, comma));
            std::int64_t v = 0;
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
                bad("element key has a non-integer coordinate: " + key);
            raw.push_back(v);
            if (comma == std::string_view::npos) break;
            s = s.substr(comma + 1);
        }
    }
    return raw;
}

} // namespace

Element element_from_key(const std::string& key, const FiniteAbelianGroup& G) {
    return normalize_element(ints_from_key(key), G, "element key " + key);
}

// ---------------------------------------------------------------------------
// Group files.

GroupFile parse_group_file(const nlohmann::json& j) {
    try {
        if (!j.is_object()) bad("group file must be a JSON object");
        const auto& orders_j = j.at("orders");
        if (!orders_j.is_array() || orders_j.empty())
            bad("\"orders\" must be a nonempty integer array");
        std::vector<std::int64_t> orders;
        orders.reserve(orders_j.size());
        for (const auto& o : orders_j) orders.push_back(int_from_json(o, "order"));

        GroupFile out{make_group(orders), {}};

        const bool single = j.contains("subgroup_generators");
        const bool multi = j.contains("subgroups");
        if (single && multi)
            bad("give either \"subgroup_generators\" or \"subgroups\", not both");
        auto parse_set = [&](const nlohmann::json& set_j) {
            if (!set_j.is_array()) bad("a subgroup generator list must be an array");
            std::vector<Element> gens;
            gens.reserve(set_j.size());
            for (const auto& g : set_j)
                gens.push_back(element_from_json(g, out.group, "subgroup generator"));
            return gens;
        };
        if (single) out.subgroup_generator_sets.push_back(parse_set(j.at("subgroup_generators")));
        if (multi) {
            const auto& sets_j = j.at("subgroups");
            if (!sets_j.is_array()) bad("\"subgroups\" must be an array of generator lists");
            for (const auto& s : sets_j) out.subgroup_generator_sets.push_back(parse_set(s));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed group file: ") + e.what());
    }
}

GroupFile load_group_file(const std::string& path) { return parse_group_file(load_json(path)); }

Subgroup select_subgroup(const GroupFile& f, std::int64_t index) {
    if (f.subgroup_generator_sets.empty()) bad("the group file defines no subgroup");
    if (index < 0 || index >= static_cast<std::int64_t>(f.subgroup_generator_sets.size()))
        bad("subgroup index " + std::to_string(index) + " out of range; the file defines " +
            std::to_string(f.subgroup_generator_sets.size()));
    return subgroup_closure(f.group, f.subgroup_generator_sets[static_cast<std::size_t>(index)]);
}

// ---------------------------------------------------------------------------
// Norm files.

NormFile parse_norm_file(const nlohmann::json& j) {
    try {
        if (!j.is_object()) bad("norm file must be a JSON object");
        GroupFile gf = parse_group_file(j.at("group"));
        if (gf.subgroup_generator_sets.size() > 1)
            bad("a norm file must define at most one subgroup");
        Subgroup domain = gf.subgroup_generator_sets.empty()
                              ? Subgroup::whole(gf.group)
                              : subgroup_closure(gf.group, gf.subgroup_generator_sets[0]);

        const auto& values_j = j.at("values");
        if (!values_j.is_object()) bad("\"values\" must be an object keyed by elements");
        std::map<Element, Rational> table;
        for (const auto& [key, val] : values_j.items()) {
            Element e = element_from_key(key, gf.group);
            if (!table.emplace(e, rational_from_json(val)).second)
                bad("duplicate value for element " + element_str(e));
        }
        Pseudonorm norm(domain, table);
        return NormFile{gf.group, std::move(domain), std::move(norm)};
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed norm file: ") + e.what());
    }
}

NormFile load_norm_file(const std::string& path) { return parse_norm_file(load_json(path)); }

nlohmann::ordered_json norm_to_json(const Pseudonorm& norm) {
    const Subgroup& domain = norm.carrier();
    nlohmann::ordered_json group;
    group["orders"] = domain.parent().orders();
    if (!domain.is_whole_group()) {
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const Element& g : domain.generators()) gens.push_back(g);
        group["subgroup_generators"] = std::move(gens);
    }
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    const auto& elems = domain.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        values[element_str(elems[i])] = norm.value_at(i).str();

    nlohmann::ordered_json out;
    out["group"] = std::move(group);
    out["values"] = std::move(values);
    return out;
}

void save_norm_file(const std::string& path, const Pseudonorm& norm) {
    save_text(path, norm_to_json(norm).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Homomorphism files.

Homomorphism parse_hom_file(const nlohmann::json& j) {
    try {
        if (!j.is_object()) bad("homomorphism file must be a JSON object");
        GroupFile source = parse_group_file(j.at("source"));
        GroupFile target = parse_group_file(j.at("target"));
        const auto& images_j = j.at("images");
        if (!images_j.is_array()) bad("\"images\" must be an array of elements");
        std::vector<Element> images;
        images.reserve(images_j.size());
        for (const auto& im : images_j)
            images.push_back(element_from_json(im, target.group, "homomorphism image"));
        return Homomorphism(source.group, target.group, std::move(images));
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed homomorphism file: ") + e.what());
    }
}

Homomorphism load_hom_file(const std::string& path) { return parse_hom_file(load_json(path)); }

// ---------------------------------------------------------------------------
// Collections files.

namespace {

/// Canonical label order: integers first (numeric), then strings (lex).
struct LabelLess {
    bool operator()(const nlohmann::json& a, const nlohmann::json& b) const {
        const bool ai = a.is_number_integer();
        const bool bi = b.is_number_integer();
        if (ai != bi) return ai;
        if (ai) return a.get<std::int64_t>() < b.get<std::int64_t>();
        return a.get<std::string>() < b.get<std::string>();
    }
};

} // namespace

CollectionsFile parse_collections_file(const nlohmann::json& j) {
    try {
        if (!j.is_object()) bad("collections file must be a JSON object");
        CollectionsFile out;
        out.k = int_from_json(j.at("k"), "k");

        std::map<nlohmann::json, std::int64_t, LabelLess> ids;
        auto check_label = [&](const nlohmann::json& lbl) {
            if (!lbl.is_number_integer() && !lbl.is_string())
                bad("labels must be integers or strings");
            ids.emplace(lbl, 0);
        };
        auto scan = [&](const char* key) {
            const auto& coll = j.at(key);
            if (!coll.is_array()) bad(std::string("\"") + key + "\" must be an array of sets");
            for (const auto& set_j : coll) {
                if (!set_j.is_array()) bad("each set must be an array of labels");
                for (const auto& lbl : set_j) check_label(lbl);
            }
        };
        scan("A");
        scan("B");

        std::int64_t next = 0;
        for (auto& [lbl, id] : ids) {
            id = next++;
            out.labels.push_back(lbl);
        }
        auto convert = [&](const char* key) {
            std::vector<std::vector<std::int64_t>> sets;
            for (const auto& set_j : j.at(key)) {
                std::vector<std::int64_t> set;
                set.reserve(set_j.size());
                for (const auto& lbl : set_j) set.push_back(ids.at(lbl));
                sets.push_back(std::move(set));
            }
            return sets;
        };
        out.A = convert("A");
        out.B = convert("B");
        return out;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed collections file: ") + e.what());
    }
}

CollectionsFile load_collections_file(const std::string& path) {
    return parse_collections_file(load_json(path));
}

nlohmann::ordered_json labels_to_json(const CollectionsFile& f,
                                      const std::vector<std::int64_t>& picks) {
    std::vector<std::int64_t> sorted = picks;
    std::sort(sorted.begin(), sorted.end());
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::int64_t id : sorted) {
        if (id < 0 || id >= static_cast<std::int64_t>(f.labels.size()))
            throw std::logic_error("pick refers to an unknown label id");
        out.push_back(nlohmann::ordered_json(f.labels[static_cast<std::size_t>(id)]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrix files.

DoublyStochasticMatrix parse_matrix_file(const nlohmann::json& j) {
    try {
        if (!j.is_object()) bad("matrix file must be a JSON object");
        const auto& m_j = j.at("matrix");
        if (!m_j.is_array()) bad("\"matrix\" must be an array of rows");
        std::vector<std::vector<Rational>> rows;
        rows.reserve(m_j.size());
        for (const auto& row_j : m_j) {
            if (!row_j.is_array()) bad("each matrix row must be an array");
            std::vector<Rational> row;
            row.reserve(row_j.size());
            for (const auto& cell : row_j) row.push_back(rational_from_json(cell));
            rows.push_back(std::move(row));
        }
        return DoublyStochasticMatrix(std::move(rows));
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed matrix file: ") + e.what());
    }
}

DoublyStochasticMatrix load_matrix_file(const std::string& path) {
    return parse_matrix_file(load_json(path));
}

nlohmann::ordered_json birkhoff_to_json(const BirkhoffDecomposition& D) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const BirkhoffTerm& t : D.terms) {
        nlohmann::ordered_json term;
        term["weight"] = t.weight.str();
        term["permutation"] = t.perm;
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json out;
    out["terms"] = std::move(terms);
    return out;
}

// ---------------------------------------------------------------------------
// CSV reports.

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string double_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string certificate_str(const RhoCertificate& cert, std::size_t mu_index) {
    auto name = [&](std::size_t alpha) {
        return alpha == mu_index ? std::string("mu") : "g" + std::to_string(alpha + 1);
    };
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> tally;
    for (const auto& pr : cert.pairs) ++tally[pr];

    std::string out = "ux=" + element_str(cert.rx.u) + ";uy=" + element_str(cert.ry.u) + ";pairs=";
    if (tally.empty()) {
        out += "none";
    } else {
        bool first = true;
        for (const auto& [pr, count] : tally) {
            if (!first) out += "+";
            first = false;
            out += "(" + name(pr.first) + "," + name(pr.second) + ")";
            if (count > 1) out += "x" + std::to_string(count);
        }
    }
    return out;
}

void write_extension_csv(const std::string& path, const ExtendedNorm& ext,
                         std::size_t mu_index) {
    std::ostringstream out;
    out << "element,value,certificate\n";
    const auto& elems = ext.norm.carrier().elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        out << csv_escape(element_str(elems[i])) << "," << ext.norm.value_at(i).str() << ","
            << csv_escape(certificate_str(ext.certificates[i], mu_index)) << "\n";
    }
    save_text(path, out.str());
}

void write_norm_csv(const std::string& path, const Pseudonorm& norm) {
    std::ostringstream out;
    out << "element,value,certificate\n";
    const auto& elems = norm.carrier().elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        out << csv_escape(element_str(elems[i])) << "," << norm.value_at(i).str() << ",\n";
    save_text(path, out.str());
}

std::string lattice_point_str(const std::vector<std::int64_t>& numerators, std::int64_t denom) {
    std::string out = "[";
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (i) out += ",";
        out += Rational(numerators[i], denom).str();
    }
    out += "]";
    return out;
}

nlohmann::ordered_json lattice_to_json(const LatticeExtension& ext) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < ext.points.size(); ++i)
        values[lattice_point_str(ext.points[i], ext.group.denom)] = ext.values[i].str();
    nlohmann::ordered_json out;
    out["dim"] = ext.group.dim;
    out["denominator"] = ext.group.denom;
    out["window"] = ext.window;
    out["values"] = std::move(values);
    return out;
}

std::map<std::vector<std::int64_t>, Rational> lattice_table_from_json(const nlohmann::json& j,
                                                                      std::int64_t dim) {
    try {
        if (!j.is_object()) bad("lattice table file must be a JSON object");
        const auto& values_j = j.at("values");
        if (!values_j.is_object()) bad("\"values\" must be an object keyed by integer points");
        std::map<std::vector<std::int64_t>, Rational> table;
        for (const auto& [key, val] : values_j.items()) {
            std::vector<std::int64_t> point = ints_from_key(key);
            if (point.size() != static_cast<std::size_t>(dim))
                bad("lattice table key " + key + " must have " + std::to_string(dim) +
                    " coordinates");
            if (!table.emplace(std::move(point), rational_from_json(val)).second)
                bad("duplicate lattice table key " + key);
        }
        return table;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed lattice table file: ") + e.what());
    }
}

void write_lattice_csv(const std::string& path, const LatticeExtension& ext) {
    std::ostringstream out;
    out << "element,value,certificate\n";
    for (std::size_t i = 0; i < ext.points.size(); ++i) {
        out << csv_escape(lattice_point_str(ext.points[i], ext.group.denom)) << ","
            << ext.values[i].str() << "," << csv_escape(ext.certificates[i]) << "\n";
    }
    save_text(path, out.str());
}

void write_winding_csv(const std::string& path, const std::vector<DiscontinuityRow>& rows,
                       const std::vector<WindingSampleSummary>& samples) {
    std::ostringstream out;
    out << "k,norm_e_k,norm_2e_k,ratio,triangle_samples,triangle_max_violation,"
           "identity_samples,identity_max_err\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const DiscontinuityRow& r = rows[i];
        out << r.k << "," << double_str(r.e_norm) << "," << double_str(r.two_e_norm) << ","
            << double_str(r.ratio);
        if (i < samples.size()) {
            const WindingSampleSummary& s = samples[i];
            out << "," << s.triangle_samples << "," << double_str(s.triangle_max_violation)
                << "," << s.identity_samples << "," << double_str(s.identity_max_err);
        } else {
            out << ",0,0,0,0";
        }
        out << "\n";
    }
    save_text(path, out.str());
}

} // namespace normext::io
