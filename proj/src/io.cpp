#include "cobalt/io.hpp"

#include <fstream>

namespace cobalt {

namespace {

std::vector<Scalar> scalar_vector(const Json& j) {
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json scalar_vector_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols) {
    std::vector<Scalar> entries = scalar_vector(j);
    if (entries.size() != rows * cols) throw FormatError("matrix entry count mismatch");
    return Matrix(rows, cols, std::move(entries));
}

Json matrix_to_json(const Matrix& m) { return scalar_vector_json(m.entries()); }

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    return j.at(key).get<T>();
}

const Json& sub(const Json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw FormatError("scalar literal must be a string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError("bad scalar literal '" + j.get<std::string>() + "': " + e.what());
    }
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order;
    j["table"] = g.table;
    j["names"] = g.names;
    return j;
}

FiniteGroup group_from_json(const Json& j) {
    int order = field<int>(j, "order");
    auto table = field<std::vector<int>>(j, "table");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return group_from_table(order, std::move(table), std::move(names));
}

Json crossed_module_to_json(const CrossedModule& x) {
    Json j;
    j["base"] = group_to_json(x.base);
    j["fiber"] = group_to_json(x.fiber);
    j["boundary"] = x.boundary;
    j["action"] = x.action;
    return j;
}

CrossedModule crossed_module_from_json(const Json& j) {
    CrossedModule x;
    x.base = group_from_json(sub(j, "base"));
    x.fiber = group_from_json(sub(j, "fiber"));
    x.boundary = field<std::vector<int>>(j, "boundary");
    x.action = field<std::vector<std::vector<int>>>(j, "action");
    return x;
}

Json cocycle_to_json(const Cocycle& a) {
    Json j;
    j["group"] = group_to_json(a.group);
    j["table"] = scalar_vector_json(a.values);
    return j;
}

Cocycle cocycle_from_json(const Json& j) {
    Cocycle a;
    a.group = group_from_json(sub(j, "group"));
    a.values = scalar_vector(sub(j, "table"));
    if (a.values.size() != static_cast<size_t>(a.group.order) * a.group.order)
        throw FormatError("cocycle table size mismatch");
    return a;
}

Json character_to_json(const TwoCharacter& c) {
    Json j;
    j["group"] = group_to_json(c.group);
    if (c.is_two_group()) j["crossed_module"] = crossed_module_to_json(*c.two_group);
    j["lines"] = c.line_labels;
    j["psi"] = scalar_vector_json(c.psi);
    if (c.is_two_group()) j["holonomy"] = scalar_vector_json(c.holonomy);
    return j;
}

TwoCharacter character_from_json(const Json& j) {
    TwoCharacter c;
    c.group = group_from_json(sub(j, "group"));
    if (j.contains("crossed_module")) {
        c.two_group = crossed_module_from_json(j.at("crossed_module"));
        if (!c.two_group->base.same_as(c.group))
            throw FormatError("crossed module base differs from group");
    }
    if (j.contains("lines")) c.line_labels = j.at("lines").get<std::vector<std::string>>();
    else c.line_labels.assign(c.group.order, "K");
    c.psi = scalar_vector(sub(j, "psi"));
    if (c.psi.size() != static_cast<size_t>(c.group.order) * c.group.order)
        throw FormatError("psi table size mismatch");
    if (c.is_two_group()) {
        c.holonomy = scalar_vector(sub(j, "holonomy"));
        if (c.holonomy.size() !=
            static_cast<size_t>(c.two_group->fiber.order) * c.group.order)
            throw FormatError("holonomy table size mismatch");
    }
    return c;
}

Json projrep_to_json(const ProjRep& r) {
    Json j;
    j["group"] = group_to_json(r.group);
    j["cocycle"] = scalar_vector_json(r.cocycle.values);
    j["dim"] = r.dim;
    Json mats = Json::array();
    for (const Matrix& m : r.mats) mats.push_back(matrix_to_json(m));
    j["mats"] = mats;
    return j;
}

ProjRep projrep_from_json(const Json& j) {
    ProjRep r;
    r.group = group_from_json(sub(j, "group"));
    r.cocycle.group = r.group;
    r.cocycle.values = scalar_vector(sub(j, "cocycle"));
    if (r.cocycle.values.size() != static_cast<size_t>(r.group.order) * r.group.order)
        throw FormatError("cocycle table size mismatch");
    r.dim = field<int>(j, "dim");
    const Json& mats = sub(j, "mats");
    if (static_cast<int>(mats.size()) != r.group.order)
        throw FormatError("matrix count differs from group order");
    for (const auto& m : mats) r.mats.push_back(matrix_from_json(m, r.dim, r.dim));
    return r;
}

Json fixed_point_to_json(const HomotopyFixedPoint& p) {
    Json j;
    j["character"] = character_to_json(p.character);
    j["dim"] = p.dim;
    Json maps = Json::array();
    for (const Matrix& m : p.maps) maps.push_back(matrix_to_json(m));
    j["maps"] = maps;
    return j;
}

HomotopyFixedPoint fixed_point_from_json(const Json& j) {
    HomotopyFixedPoint p;
    p.character = character_from_json(sub(j, "character"));
    p.dim = field<int>(j, "dim");
    const Json& maps = sub(j, "maps");
    if (static_cast<int>(maps.size()) != p.character.group.order)
        throw FormatError("map count differs from group order");
    for (const auto& m : maps) p.maps.push_back(matrix_from_json(m, p.dim, p.dim));
    return p;
}

Json frobenius_to_json(const FrobeniusAlgebra& a) {
    Json j;
    j["dim"] = a.dim;
    j["mult"] = scalar_vector_json(a.mult);
    j["unit"] = scalar_vector_json(a.unit);
    j["counit"] = scalar_vector_json(a.counit);
    return j;
}

FrobeniusAlgebra frobenius_from_json(const Json& j) {
    FrobeniusAlgebra a;
    a.dim = field<int>(j, "dim");
    if (a.dim < 1) throw FormatError("algebra dim must be positive");
    a.mult = scalar_vector(sub(j, "mult"));
    a.unit = scalar_vector(sub(j, "unit"));
    a.counit = scalar_vector(sub(j, "counit"));
    size_t d = a.dim;
    if (a.mult.size() != d * d * d || a.unit.size() != d || a.counit.size() != d)
        throw FormatError("algebra tensor sizes do not match dim");
    return a;
}

Json module_to_json(const AlgModule& m) {
    Json j;
    j["algebra"] = frobenius_to_json(m.algebra);
    j["dim"] = m.dim;
    Json act = Json::array();
    for (const Matrix& a : m.action) act.push_back(matrix_to_json(a));
    j["action"] = act;
    return j;
}

AlgModule module_from_json(const Json& j) {
    AlgModule m;
    m.algebra = frobenius_from_json(sub(j, "algebra"));
    m.dim = field<int>(j, "dim");
    const Json& act = sub(j, "action");
    if (static_cast<int>(act.size()) != m.algebra.dim)
        throw FormatError("action count differs from algebra dim");
    for (const auto& a : act) m.action.push_back(matrix_from_json(a, m.dim, m.dim));
    return m;
}

Json modular_to_json(const ModularData& m) {
    Json j;
    j["dim"] = m.dim;
    j["S"] = matrix_to_json(m.S);
    j["T"] = matrix_to_json(m.T);
    return j;
}

ModularData modular_from_json(const Json& j) {
    ModularData m;
    m.dim = field<int>(j, "dim");
    if (m.dim < 1) throw FormatError("modular dim must be positive");
    m.S = matrix_from_json(sub(j, "S"), m.dim, m.dim);
    m.T = matrix_from_json(sub(j, "T"), m.dim, m.dim);
    return m;
}

Json boundary_condition_to_json(const BoundaryCondition& bc) {
    Json j;
    j["dim"] = bc.dim;
    j["v"] = scalar_vector_json(bc.v);
    j["phi"] = scalar_vector_json(bc.phi);
    return j;
}

BoundaryCondition boundary_condition_from_json(const Json& j) {
    BoundaryCondition bc;
    bc.dim = field<int>(j, "dim");
    if (bc.dim < 0) throw FormatError("boundary condition dim must be nonnegative");
    bc.v = scalar_vector(sub(j, "v"));
    bc.phi = scalar_vector(sub(j, "phi"));
    if (bc.v.size() != static_cast<size_t>(bc.dim) || bc.phi.size() != static_cast<size_t>(bc.dim))
        throw FormatError("boundary condition vectors do not match dim");
    return bc;
}

Json anomaly_to_json(const SemitrivializedAnomaly& w) {
    Json j;
    Json model;
    model["objects"] = w.model.objects;
    Json mors = Json::array();
    for (const auto& m : w.model.morphisms)
        mors.push_back(Json{{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
    model["morphisms"] = mors;
    model["identities"] = w.model.identities;
    Json comp = Json::array();
    for (const auto& [pair, c] : w.model.composition)
        comp.push_back(Json::array({pair.first, pair.second, c}));
    model["composition"] = comp;
    j["model"] = model;
    j["lines"] = w.lines;
    Json psi = Json::array();
    for (const auto& [pair, s] : w.psi)
        psi.push_back(Json::array({pair.first, pair.second, scalar_to_json(s)}));
    j["psi"] = psi;
    Json diffs = Json::array();
    for (const auto& d : w.diffeos)
        diffs.push_back(Json{{"name", d.name},
                             {"from", d.from},
                             {"to", d.to},
                             {"factor", scalar_to_json(d.factor)}});
    j["diffeos"] = diffs;
    return j;
}

SemitrivializedAnomaly anomaly_from_json(const Json& j) {
    SemitrivializedAnomaly w;
    const Json& model = sub(j, "model");
    w.model.objects = field<std::vector<std::string>>(model, "objects");
    for (const auto& m : sub(model, "morphisms")) {
        CobModel::Mor mor;
        mor.name = field<std::string>(m, "name");
        mor.src = field<int>(m, "src");
        mor.tgt = field<int>(m, "tgt");
        int nobj = static_cast<int>(w.model.objects.size());
        if (mor.src < 0 || mor.src >= nobj || mor.tgt < 0 || mor.tgt >= nobj)
            throw FormatError("morphism endpoints out of range");
        w.model.morphisms.push_back(mor);
    }
    w.model.identities = field<std::vector<int>>(model, "identities");
    int nmor = static_cast<int>(w.model.morphisms.size());
    for (const auto& entry : sub(model, "composition")) {
        if (!entry.is_array() || entry.size() != 3) throw FormatError("bad composition entry");
        int second = entry[0].get<int>(), first = entry[1].get<int>(), comp = entry[2].get<int>();
        if (second < 0 || second >= nmor || first < 0 || first >= nmor || comp < 0 || comp >= nmor)
            throw FormatError("composition entry out of range");
        w.model.composition[{second, first}] = comp;
    }
    w.lines = field<std::vector<std::string>>(j, "lines");
    for (const auto& entry : sub(j, "psi")) {
        if (!entry.is_array() || entry.size() != 3) throw FormatError("bad psi entry");
        w.psi[{entry[0].get<int>(), entry[1].get<int>()}] = scalar_from_json(entry[2]);
    }
    if (j.contains("diffeos"))
        for (const auto& d : j.at("diffeos")) {
            SemitrivializedAnomaly::Diffeo diff;
            diff.name = field<std::string>(d, "name");
            diff.from = field<int>(d, "from");
            diff.to = field<int>(d, "to");
            diff.factor = scalar_from_json(sub(d, "factor"));
            if (diff.from < 0 || diff.from >= nmor || diff.to < 0 || diff.to >= nmor)
                throw FormatError("diffeo endpoints out of range");
            w.diffeos.push_back(diff);
        }
    return w;
}

Json theory_to_json(const AnomalousTheory& z) {
    Json j;
    j["anomaly"] = anomaly_to_json(z.anomaly);
    j["spaces"] = z.dims;
    Json maps = Json::array();
    for (const Matrix& m : z.maps) maps.push_back(matrix_to_json(m));
    j["maps"] = maps;
    return j;
}

AnomalousTheory theory_from_json(const Json& j) {
    AnomalousTheory z;
    z.anomaly = anomaly_from_json(sub(j, "anomaly"));
    z.dims = field<std::vector<int>>(j, "spaces");
    if (z.dims.size() != z.anomaly.model.objects.size())
        throw FormatError("spaces count differs from object count");
    const Json& maps = sub(j, "maps");
    if (maps.size() != z.anomaly.model.morphisms.size())
        throw FormatError("map count differs from morphism count");
    for (size_t i = 0; i < maps.size(); ++i) {
        const auto& mor = z.anomaly.model.morphisms[i];
        z.maps.push_back(
            matrix_from_json(maps[i], z.dims[mor.tgt], z.dims[mor.src]));
    }
    return z;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace cobalt
