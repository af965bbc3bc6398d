#include "tlcp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "tlcp/errors.hpp"

namespace tlcp {

namespace {

std::string where(std::string_view origin) {
    return origin.empty() ? std::string() : std::string(origin) + ": ";
}

long require_integer(const Json& j, const std::string& field, std::string_view origin) {
    if (!j.is_number_integer())
        throw SchemaViolationError(where(origin) + field + " must be an integer");
    return j.get<long>();
}

Rational require_rational_string(const Json& j, const std::string& field,
                                 std::string_view origin) {
    if (j.is_number())
        throw SchemaViolationError(where(origin) + field +
                                   " must be a rational string, not a number");
    if (!j.is_string())
        throw SchemaViolationError(where(origin) + field + " must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where(origin) + field + ": " + e.what());
    }
}

void reject_unknown_keys(const Json& j, const std::vector<std::string>& known,
                         const std::string& context, std::string_view origin) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const std::string& k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw SchemaViolationError(where(origin) + context + ": unknown field \"" +
                                       item.key() + "\"");
    }
}

} // namespace

DenseTensor tensor_from_json(const Json& j, std::string_view origin) {
    if (!j.is_object())
        throw SchemaViolationError(where(origin) + "tensor file must be a JSON object");
    reject_unknown_keys(j, {"order", "dims", "entries", "default"}, "tensor file", origin);
    if (!j.contains("order"))
        throw SchemaViolationError(where(origin) + "missing field \"order\"");
    if (!j.contains("dims"))
        throw SchemaViolationError(where(origin) + "missing field \"dims\"");

    const long order = require_integer(j["order"], "order", origin);
    if (order < 1)
        throw SchemaViolationError(where(origin) + "order must be at least 1");

    const Json& jdims = j["dims"];
    if (!jdims.is_array() || static_cast<long>(jdims.size()) != order)
        throw SchemaViolationError(where(origin) +
                                   "dims must be an array of length equal to order");
    std::vector<int> dims;
    dims.reserve(jdims.size());
    for (std::size_t k = 0; k < jdims.size(); ++k) {
        const long d = require_integer(jdims[k], "dims[" + std::to_string(k) + "]", origin);
        if (d < 1)
            throw SchemaViolationError(where(origin) + "dims[" + std::to_string(k) +
                                       "] must be positive");
        dims.push_back(static_cast<int>(d));
    }

    Rational fill(0);
    if (j.contains("default")) fill = require_rational_string(j["default"], "default", origin);

    std::optional<Shape> shape;
    try {
        shape.emplace(std::move(dims));
    } catch (const Error& e) {
        throw SchemaViolationError(where(origin) + e.what());
    }

    DenseTensor t(*shape, fill);
    if (!j.contains("entries")) return t;

    const Json& jent = j["entries"];
    if (!jent.is_array())
        throw SchemaViolationError(where(origin) + "entries must be an array");
    std::vector<bool> seen(t.size(), false);
    for (std::size_t e = 0; e < jent.size(); ++e) {
        const std::string ctx = "entries[" + std::to_string(e) + "]";
        const Json& entry = jent[e];
        if (!entry.is_object())
            throw SchemaViolationError(where(origin) + ctx + " must be an object");
        reject_unknown_keys(entry, {"idx", "val"}, ctx, origin);
        if (!entry.contains("idx") || !entry.contains("val"))
            throw SchemaViolationError(where(origin) + ctx + " needs \"idx\" and \"val\"");

        const Json& jidx = entry["idx"];
        if (!jidx.is_array() || static_cast<long>(jidx.size()) != order)
            throw SchemaViolationError(where(origin) + ctx +
                                       ".idx must be an array of length equal to order");
        MultiIndex idx;
        idx.reserve(jidx.size());
        for (std::size_t k = 0; k < jidx.size(); ++k) {
            const long i =
                require_integer(jidx[k], ctx + ".idx[" + std::to_string(k) + "]", origin);
            if (i < 1 || i > shape->dims[k])
                throw SchemaViolationError(where(origin) + ctx + ".idx[" + std::to_string(k) +
                                           "] out of range [1, " +
                                           std::to_string(shape->dims[k]) + "]");
            idx.push_back(static_cast<int>(i));
        }
        const std::size_t pos = t.position(idx);
        if (seen[pos])
            throw SchemaViolationError(where(origin) + ctx + " duplicates an earlier index");
        seen[pos] = true;
        t[pos] = require_rational_string(entry["val"], ctx + ".val", origin);
    }
    return t;
}

Json tensor_to_json(const DenseTensor& t) {
    Json j = Json::object();
    j["order"] = t.order();
    j["dims"] = t.shape().dims;
    Json entries = Json::array();
    for (std::size_t p = 0; p < t.size(); ++p) {
        if (t[p] == 0) continue;
        Json e = Json::object();
        e["idx"] = t.index_at(p);
        e["val"] = to_string(t[p]);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["default"] = "0";
    return j;
}

DenseTensor parse_tensor(std::istream& in, std::string_view origin) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(where(origin) + e.what());
    }
    return tensor_from_json(j, origin);
}

DenseTensor parse_tensor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_tensor(in, path.string());
}

void write_tensor(const DenseTensor& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << tensor_to_json(t).dump(2) << '\n';
    if (!out) throw Error("write to " + path.string() + " failed");
}

Json matrix_to_json(const Matrix& a) {
    Json j = Json::object();
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    Json data = Json::array();
    for (int r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
        data.push_back(std::move(row));
    }
    j["data"] = std::move(data);
    return j;
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a_digest(buf.str());
}

namespace {

Json tensor_or_null(const std::optional<DenseTensor>& t) {
    return t ? tensor_to_json(*t) : Json(nullptr);
}

Json rational_pair(const std::pair<Rational, Rational>& p) {
    return Json::array({to_string(p.first), to_string(p.second)});
}

Json index_list(const std::vector<MultiIndex>& v) {
    Json j = Json::array();
    for (const MultiIndex& i : v) j.push_back(i);
    return j;
}

} // namespace

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["holds"] = v.holds;
    j["witness"] = tensor_or_null(v.witness);
    j["violating"] = index_list(v.violating);
    j["witness_value"] = v.witness_value ? Json(to_string(*v.witness_value)) : Json(nullptr);
    return j;
}

Json classification_to_json(const ClassificationReport& r) {
    Json j = Json::object();
    for (TensorClass c : kAllTensorClasses)
        j[std::string(class_name(c))] = verdict_to_json(r.result(c));
    return j;
}

Json solution_to_json(const Solution& s) {
    Json j = Json::object();
    j["z"] = tensor_to_json(s.z);
    j["w"] = tensor_to_json(s.w);
    return j;
}

Json lemke_to_json(const LemkeResult& r) {
    Json j = Json::object();
    j["kind"] = r.kind == LemkeResult::Kind::FoundSolution ? "solution" : "ray";
    j["solution"] = r.solution ? solution_to_json(*r.solution) : Json(nullptr);
    j["ray_base"] = tensor_or_null(r.ray_base);
    j["ray_direction"] = tensor_or_null(r.ray_direction);
    j["pivots"] = r.pivots;
    return j;
}

Json piece_to_json(const SolutionPiece& p) {
    Json j = Json::object();
    j["pattern"] = p.pattern;
    j["support"] = index_list(p.support);
    j["status"] = p.status == SolutionPiece::Status::Point ? "point" : "polyhedron";
    Json vs = Json::array();
    for (const DenseTensor& v : p.vertices) vs.push_back(tensor_to_json(v));
    j["vertices"] = std::move(vs);
    Json rs = Json::array();
    for (const DenseTensor& r : p.rays) rs.push_back(tensor_to_json(r));
    j["rays"] = std::move(rs);
    j["dim"] = p.dim;
    return j;
}

Json solution_set_to_json(const SolutionSet& s) {
    Json j = Json::object();
    j["piece_count"] = s.pieces.size();
    j["empty"] = s.empty();
    j["bounded"] = s.bounded();
    Json ps = Json::array();
    for (const SolutionPiece& p : s.pieces) ps.push_back(piece_to_json(p));
    j["pieces"] = std::move(ps);
    return j;
}

Json convexity_to_json(const ConvexityReport& r) {
    Json j = Json::object();
    switch (r.verdict) {
        case ConvexityReport::Verdict::Empty: j["verdict"] = "empty"; break;
        case ConvexityReport::Verdict::Singleton: j["verdict"] = "singleton"; break;
        case ConvexityReport::Verdict::Convex: j["verdict"] = "convex"; break;
        case ConvexityReport::Verdict::NonConvex: j["verdict"] = "nonconvex"; break;
    }
    j["convex"] = r.is_convex();
    j["piece_count"] = r.piece_count;
    j["vertex_generators"] = r.vertex_generators;
    j["ray_generators"] = r.ray_generators;
    j["violating_pair"] =
        r.violating_pair ? Json::array({tensor_to_json(r.violating_pair->first),
                                        tensor_to_json(r.violating_pair->second)})
                         : Json(nullptr);
    j["cross_values"] = r.cross_values ? rational_pair(*r.cross_values) : Json(nullptr);
    return j;
}

Json witness_to_json(const NonConvexWitness& w) {
    Json j = Json::object();
    j["q"] = tensor_to_json(w.q);
    j["x1"] = tensor_to_json(w.x1);
    j["x2"] = tensor_to_json(w.x2);
    j["cross_values"] = rational_pair(w.cross_values);
    j["strict_index"] = w.strict_index;
    j["generator"] = tensor_to_json(w.generator);
    return j;
}

Json uniqueness_to_json(const UniquenessResult& r) {
    Json j = Json::object();
    j["kind"] = r.kind == UniquenessResult::Kind::Unique ? "unique" : "multiple";
    j["solution"] = tensor_or_null(r.solution);
    j["pair"] = r.pair ? Json::array({tensor_to_json(r.pair->first),
                                      tensor_to_json(r.pair->second)})
                       : Json(nullptr);
    return j;
}

Json harness_to_json(const HarnessReport& r) {
    Json j = Json::object();
    j["seed"] = r.options.seed;
    j["count"] = r.options.count;
    j["m"] = r.options.m;
    j["n"] = r.options.n;
    j["entry_lo"] = r.options.entry_lo;
    j["entry_hi"] = r.options.entry_hi;
    j["q_trials"] = r.options.q_trials;
    j["tensors"] = r.tensors;
    j["column_sufficient"] = r.column_sufficient;
    j["column_sufficient_on_nonneg"] = r.column_sufficient_on_nonneg;
    j["p_class"] = r.p_class;
    j["nondegenerate"] = r.nondegenerate;
    j["convexity_checks"] = r.convexity_checks;
    j["witness_constructions"] = r.witness_constructions;
    j["uniqueness_checks"] = r.uniqueness_checks;
    j["failures"] = r.failures;
    j["ok"] = r.ok();
    return j;
}

Json report_envelope(std::string_view command,
                     const std::vector<std::filesystem::path>& inputs) {
    Json j = Json::object();
    j["command"] = std::string(command);
    Json ins = Json::array();
    for (const std::filesystem::path& p : inputs) {
        Json f = Json::object();
        f["path"] = p.generic_string();
        f["digest"] = file_digest(p);
        ins.push_back(std::move(f));
    }
    j["inputs"] = std::move(ins);
    return j;
}

} // namespace tlcp
