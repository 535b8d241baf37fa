#include "pbundle/cw_complex.hpp"

#include <deque>
#include <map>
#include <set>
#include <string>

#include "pbundle/errors.hpp"

namespace pbundle {

namespace {

std::map<std::string, Index> indexByName(const std::vector<std::string>& names,
                                         const char* kind) {
    std::map<std::string, Index> idx;
    for (size_t i = 0; i < names.size(); ++i) {
        auto [it, fresh] = idx.emplace(names[i], static_cast<Index>(i));
        if (!fresh)
            throw ValidationError(ValidationCode::DuplicateLabel,
                                  std::string("duplicate ") + kind + " label \"" + names[i] + "\"");
    }
    return idx;
}

std::map<std::string, Index> edgeIndex(const CwComplex2& m) {
    std::map<std::string, Index> idx;
    for (size_t i = 0; i < m.edges.size(); ++i) {
        auto [it, fresh] = idx.emplace(m.edges[i].name, static_cast<Index>(i));
        if (!fresh)
            throw ValidationError(ValidationCode::DuplicateLabel,
                                  "duplicate edge label \"" + m.edges[i].name + "\"");
    }
    return idx;
}

}  // namespace

ValidationReport validate(const CwComplex2& m) {
    auto vidx = indexByName(m.vertices, "vertex");
    auto eidx = edgeIndex(m);
    std::set<std::string> faceNames;
    for (const Face& f : m.faces)
        if (!faceNames.insert(f.name).second)
            throw ValidationError(ValidationCode::DuplicateLabel,
                                  "duplicate face label \"" + f.name + "\"");

    if (m.basepoint.empty())
        throw ValidationError(ValidationCode::MissingBasepoint, "no basepoint given");
    if (!vidx.count(m.basepoint))
        throw ValidationError(ValidationCode::MissingBasepoint,
                              "basepoint \"" + m.basepoint + "\" is not a vertex");

    for (const Edge& e : m.edges) {
        if (!vidx.count(e.src))
            throw ValidationError(ValidationCode::DanglingReference,
                                  "edge \"" + e.name + "\" starts at unknown vertex \"" + e.src + "\"");
        if (!vidx.count(e.dst))
            throw ValidationError(ValidationCode::DanglingReference,
                                  "edge \"" + e.name + "\" ends at unknown vertex \"" + e.dst + "\"");
    }

    for (const Face& f : m.faces) {
        std::string at = m.basepoint;
        bool first = true;
        for (const Letter& letter : f.word) {
            if (letter.second != 1 && letter.second != -1)
                throw DomainError("face \"" + f.name + "\": orientation must be +1 or -1");
            auto it = eidx.find(letter.first);
            if (it == eidx.end())
                throw ValidationError(ValidationCode::DanglingReference,
                                      "face \"" + f.name + "\" uses unknown edge \"" + letter.first + "\"");
            const Edge& e = m.edges[static_cast<size_t>(it->second)];
            const std::string& from = letter.second == 1 ? e.src : e.dst;
            const std::string& to = letter.second == 1 ? e.dst : e.src;
            if (first) {
                at = from;
                first = false;
            } else if (at != from) {
                throw ValidationError(ValidationCode::NonClosedWord,
                                      "face \"" + f.name + "\": word breaks at edge \"" + letter.first + "\"");
            }
            at = to;
        }
        if (!f.word.empty()) {
            const Edge& start = m.edges[static_cast<size_t>(eidx.at(f.word.front().first))];
            const std::string& origin = f.word.front().second == 1 ? start.src : start.dst;
            if (at != origin)
                throw ValidationError(ValidationCode::NonClosedWord,
                                      "face \"" + f.name + "\": word does not close up");
        }
    }

    // breadth-first sweep from the basepoint
    std::set<std::string> seen{m.basepoint};
    std::deque<std::string> queue{m.basepoint};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const Edge& e : m.edges) {
            const std::string* other = nullptr;
            if (e.src == cur) other = &e.dst;
            else if (e.dst == cur) other = &e.src;
            else continue;
            if (seen.insert(*other).second) queue.push_back(*other);
        }
    }
    if (seen.size() != m.vertices.size())
        throw DisconnectedError("complex \"" + m.name + "\" is not connected (" +
                                std::to_string(m.vertices.size() - seen.size()) +
                                " unreachable vertices)");

    ValidationReport report;
    report.vertex_count = static_cast<Index>(m.vertices.size());
    report.edge_count = static_cast<Index>(m.edges.size());
    report.face_count = static_cast<Index>(m.faces.size());
    report.euler_characteristic = eulerCharacteristic(m);
    report.connected = true;
    return report;
}

long eulerCharacteristic(const CwComplex2& m) {
    return static_cast<long>(m.vertices.size()) - static_cast<long>(m.edges.size()) +
           static_cast<long>(m.faces.size());
}

std::pair<IntMatrix, IntMatrix> boundaryMatrices(const CwComplex2& m) {
    validate(m);
    std::map<std::string, Index> vidx;
    for (size_t i = 0; i < m.vertices.size(); ++i) vidx[m.vertices[i]] = static_cast<Index>(i);
    std::map<std::string, Index> eidx;
    for (size_t i = 0; i < m.edges.size(); ++i) eidx[m.edges[i].name] = static_cast<Index>(i);

    IntMatrix d1 = IntMatrix::Zero(static_cast<Index>(m.vertices.size()),
                                   static_cast<Index>(m.edges.size()));
    for (size_t j = 0; j < m.edges.size(); ++j) {
        d1(vidx[m.edges[j].dst], static_cast<Index>(j)) += 1;
        d1(vidx[m.edges[j].src], static_cast<Index>(j)) -= 1;
    }

    IntMatrix d2 = IntMatrix::Zero(static_cast<Index>(m.edges.size()),
                                   static_cast<Index>(m.faces.size()));
    for (size_t j = 0; j < m.faces.size(); ++j)
        for (const Letter& letter : m.faces[j].word)
            d2(eidx[letter.first], static_cast<Index>(j)) += letter.second;

    return {std::move(d1), std::move(d2)};
}

CwComplex2 buildSphere() {
    CwComplex2 m;
    m.name = "S^2";
    m.vertices = {"v"};
    m.faces = {Face{"f", {}}};
    m.basepoint = "v";
    return m;
}

CwComplex2 buildOrientableSurface(long genus) {
    if (genus < 0) throw DomainError("orientable surface: genus must be nonnegative");
    if (genus == 0) return buildSphere();
    CwComplex2 m;
    m.name = "Sigma_" + std::to_string(genus);
    m.vertices = {"v"};
    m.basepoint = "v";
    Word word;
    for (long i = 1; i <= genus; ++i) {
        std::string a = "a" + std::to_string(i);
        std::string b = "b" + std::to_string(i);
        m.edges.push_back(Edge{a, "v", "v"});
        m.edges.push_back(Edge{b, "v", "v"});
        word.push_back({a, 1});
        word.push_back({b, 1});
        word.push_back({a, -1});
        word.push_back({b, -1});
    }
    m.faces = {Face{"f", std::move(word)}};
    return m;
}

CwComplex2 buildNonOrientableSurface(long crosscaps) {
    if (crosscaps < 1) throw DomainError("non-orientable surface: need at least one crosscap");
    CwComplex2 m;
    m.name = "N_" + std::to_string(crosscaps);
    m.vertices = {"v"};
    m.basepoint = "v";
    Word word;
    for (long i = 1; i <= crosscaps; ++i) {
        std::string a = "a" + std::to_string(i);
        m.edges.push_back(Edge{a, "v", "v"});
        word.push_back({a, 1});
        word.push_back({a, 1});
    }
    m.faces = {Face{"f", std::move(word)}};
    return m;
}

CwComplex2 buildWedgeOfCircles(long circles) {
    if (circles < 0) throw DomainError("wedge of circles: count must be nonnegative");
    CwComplex2 m;
    m.name = "Wedge_" + std::to_string(circles);
    m.vertices = {"v"};
    m.basepoint = "v";
    for (long i = 1; i <= circles; ++i)
        m.edges.push_back(Edge{"a" + std::to_string(i), "v", "v"});
    return m;
}

CwComplex2 buildStandard(const StandardSpace& spec) {
    return std::visit(
        [](const auto& s) -> CwComplex2 {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OrientableSurface>)
                return buildOrientableSurface(s.genus);
            else if constexpr (std::is_same_v<T, NonOrientableSurface>)
                return buildNonOrientableSurface(s.crosscaps);
            else if constexpr (std::is_same_v<T, SphereSpec>)
                return buildSphere();
            else
                return buildWedgeOfCircles(s.circles);
        },
        spec);
}

GroupPresentation fundamentalGroupPresentation(const CwComplex2& m) {
    validate(m);
    std::set<std::string> reached{m.basepoint};
    std::set<std::string> treeEdges;
    std::deque<std::string> queue{m.basepoint};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const Edge& e : m.edges) {
            const std::string* other = nullptr;
            if (e.src == cur) other = &e.dst;
            else if (e.dst == cur) other = &e.src;
            else continue;
            if (reached.insert(*other).second) {
                treeEdges.insert(e.name);
                queue.push_back(*other);
            }
        }
    }
    GroupPresentation p;
    for (const Edge& e : m.edges)
        if (!treeEdges.count(e.name)) p.generators.push_back(e.name);
    for (const Face& f : m.faces) {
        Word relator;
        for (const Letter& letter : f.word)
            if (!treeEdges.count(letter.first)) relator.push_back(letter);
        p.relators.push_back(std::move(relator));
    }
    return p;
}

std::optional<ClosedSurface> recognizeClosedSurface(const CwComplex2& m) {
    if (m.faces.size() != 1) return std::nullopt;
    std::map<std::string, std::pair<int, int>> uses;  // edge -> (count, signed sum)
    for (const Letter& letter : m.faces.front().word) {
        auto& u = uses[letter.first];
        u.first += 1;
        u.second += letter.second;
    }
    if (uses.size() != m.edges.size()) return std::nullopt;
    bool orientable = true;
    for (const auto& [name, u] : uses) {
        if (u.first != 2) return std::nullopt;
        if (u.second != 0) orientable = false;
    }
    long chi = eulerCharacteristic(m);
    if (orientable) {
        if (chi > 2 || chi % 2 != 0) return std::nullopt;
        return ClosedSurface{OrientableSurface{(2 - chi) / 2}};
    }
    long crosscaps = 2 - chi;
    if (crosscaps < 1) return std::nullopt;
    return ClosedSurface{NonOrientableSurface{crosscaps}};
}

}  // namespace pbundle
