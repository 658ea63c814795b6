#include "hhs/instance.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::size_t lineOfByte(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

Rational parseCoord(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw ParseError(0, where + ": expected a rational string");
    }
    try {
        return rationalFromString(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, where + ": " + e.what());
    }
}

// Deterministic across platforms (std::uniform_int_distribution is not).
std::int64_t uniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

constexpr std::int64_t kCoordRange = 1 << 20;

}  // namespace

Instance parseInstance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(lineOfByte(text, e.byte), e.what());
    }
    if (!doc.is_object()) throw ParseError(0, "top level must be an object");
    if (!doc.contains("points")) throw ParseError(0, "missing field 'points'");
    if (!doc.contains("halfplanes")) throw ParseError(0, "missing field 'halfplanes'");
    const json& pts = doc["points"];
    const json& hps = doc["halfplanes"];
    if (!pts.is_array() || pts.empty()) throw ParseError(0, "'points' must be a nonempty array");
    if (!hps.is_array() || hps.empty()) throw ParseError(0, "'halfplanes' must be a nonempty array");

    Instance inst;
    inst.points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const json& p = pts[i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2) throw ParseError(0, where + ": expected [x,y]");
        inst.points.push_back(Point{parseCoord(p[0], where), parseCoord(p[1], where)});
    }
    inst.halfplanes.reserve(hps.size());
    for (std::size_t i = 0; i < hps.size(); ++i) {
        const json& h = hps[i];
        const std::string where = "halfplanes[" + std::to_string(i) + "]";
        if (!h.is_array() || h.size() != 3) throw ParseError(0, where + ": expected [nx,ny,c]");
        HalfPlane hp{parseCoord(h[0], where), parseCoord(h[1], where), parseCoord(h[2], where)};
        if (sgn(hp.nx) == 0 && sgn(hp.ny) == 0) throw ParseError(0, where + ": zero normal");
        inst.halfplanes.push_back(std::move(hp));
    }
    return inst;
}

std::string serializeInstance(const Instance& inst) {
    ordered_json doc;
    ordered_json pts = ordered_json::array();
    for (const Point& p : inst.points) {
        pts.push_back({rationalToString(p.x), rationalToString(p.y)});
    }
    ordered_json hps = ordered_json::array();
    for (const HalfPlane& h : inst.halfplanes) {
        hps.push_back({rationalToString(h.nx), rationalToString(h.ny), rationalToString(h.c)});
    }
    doc["points"] = std::move(pts);
    doc["halfplanes"] = std::move(hps);
    return doc.dump() + "\n";
}

HittingSet parseHittingSet(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(lineOfByte(text, e.byte), e.what());
    }
    if (!doc.is_object() || !doc.contains("status")) throw ParseError(0, "missing field 'status'");
    HittingSet hs;
    std::string status = doc["status"].get<std::string>();
    if (status == "infeasible") {
        hs.status = HittingSet::Status::Infeasible;
        return hs;
    }
    if (status != "optimal") throw ParseError(0, "status must be 'optimal' or 'infeasible'");
    hs.status = HittingSet::Status::Optimal;
    if (!doc.contains("indices") || !doc["indices"].is_array()) {
        throw ParseError(0, "missing field 'indices'");
    }
    for (const json& v : doc["indices"]) {
        if (!v.is_number_integer()) throw ParseError(0, "indices must be integers");
        hs.pointIds.push_back(v.get<int>());
    }
    if (doc.contains("size") && doc["size"].get<std::size_t>() != hs.pointIds.size()) {
        throw ParseError(0, "size does not match indices");
    }
    return hs;
}

std::string serializeHittingSet(const HittingSet& hs) {
    ordered_json doc;
    if (hs.status == HittingSet::Status::Infeasible) {
        doc["status"] = "infeasible";
    } else {
        doc["status"] = "optimal";
        doc["size"] = hs.pointIds.size();
        doc["indices"] = hs.pointIds;
    }
    return doc.dump() + "\n";
}

Instance generate(int numPoints, int numHalfplanes, std::uint64_t seed, bool ensureFeasible) {
    if (numPoints < 1 || numHalfplanes < 1) {
        throw BadIndexError("generate requires counts >= 1");
    }
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.points.reserve(numPoints);
    for (int i = 0; i < numPoints; ++i) {
        std::int64_t x = uniformInt(rng, -kCoordRange, kCoordRange);
        std::int64_t y = uniformInt(rng, -kCoordRange, kCoordRange);
        inst.points.push_back(Point{rational(x), rational(y)});
    }
    inst.halfplanes.reserve(numHalfplanes);
    for (int i = 0; i < numHalfplanes; ++i) {
        std::int64_t nx = uniformInt(rng, -kCoordRange, kCoordRange);
        std::int64_t ny = 0;
        while (ny == 0) ny = uniformInt(rng, -kCoordRange, kCoordRange);
        const Point& anchor = inst.points[static_cast<std::size_t>(uniformInt(rng, 0, numPoints - 1))];
        Rational dot = rational(nx) * anchor.x + rational(ny) * anchor.y;
        Rational c;
        if (ensureFeasible) {
            c = dot - rational(uniformInt(rng, 0, 4));
        } else {
            c = dot + rational(uniformInt(rng, -(std::int64_t{1} << 40), std::int64_t{1} << 40));
        }
        inst.halfplanes.push_back(HalfPlane{rational(nx), rational(ny), std::move(c)});
    }
    return inst;
}

std::optional<int> verifyHittingSet(const Instance& inst, std::span<const int> pointIds) {
    for (int id : pointIds) {
        if (id < 0 || id >= static_cast<int>(inst.points.size())) {
            throw BadIndexError("point id " + std::to_string(id) + " out of range");
        }
    }
    for (std::size_t h = 0; h < inst.halfplanes.size(); ++h) {
        bool hit = false;
        for (int id : pointIds) {
            if (inst.halfplanes[h].contains(inst.points[id])) {
                hit = true;
                break;
            }
        }
        if (!hit) return static_cast<int>(h);
    }
    return std::nullopt;
}

}  // namespace hhs
