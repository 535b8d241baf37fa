#pragma once

#include "pbundle/errors.hpp"
#include "pbundle/int_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pbundle {

// One oriented traversal of an edge: +1 forward (src -> dst), -1 backward.
using Letter = std::pair<std::string, int>;
using Word = std::vector<Letter>;

struct Edge {
    std::string name, src, dst;
};

struct Face {
    std::string name;
    Word word; // empty word = constant attaching map at the basepoint
};

struct CwComplex2 {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::string basepoint;
};

struct ValidationReport {
    Index vertex_count = 0, edge_count = 0, face_count = 0;
    long euler_characteristic = 0;
    bool connected = true; // validation throws otherwise; kept for reporting
};

// Checks labels, references, closedness of attaching words, basepoint, and
// path-connectedness of the 1-skeleton. Throws ValidationError with a
// distinct code per defect (DisconnectedError for the connectivity one).
ValidationReport validate(const CwComplex2& m);

// d1: |V| x |E|, column of edge e = target - source indicator.
// d2: |E| x |F|, entry (e, f) = signed count of occurrences of e in f's word.
std::pair<IntMatrix, IntMatrix> boundaryMatrices(const CwComplex2& m);

long eulerCharacteristic(const CwComplex2& m);

struct OrientableSurface {
    long genus = 0; // >= 0
};
struct NonOrientableSurface {
    long crosscaps = 1; // >= 1
};
struct SphereSpec {};
struct WedgeOfCircles {
    long circles = 0; // >= 0
};
using StandardSpace =
    std::variant<OrientableSurface, NonOrientableSurface, SphereSpec, WedgeOfCircles>;
using ClosedSurface = std::variant<OrientableSurface, NonOrientableSurface>;

/* One-vertex models: Sigma_g has 2g edges and one face with word
 * prod_i a_i b_i a_i^-1 b_i^-1 (genus 0 degenerates to the sphere model:
 * no edges, one empty-word face, name "S^2"); N_k has k edges and word
 * a_1 a_1 ... a_k a_k; a wedge has n edges and no faces. */
CwComplex2 buildStandard(const StandardSpace& spec);

CwComplex2 buildOrientableSurface(long genus);
CwComplex2 buildNonOrientableSurface(long crosscaps);
CwComplex2 buildSphere();
CwComplex2 buildWedgeOfCircles(long n);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

// Generators = edges outside a breadth-first spanning tree rooted at the
// basepoint (input order); relators = face words with tree letters deleted.
GroupPresentation fundamentalGroupPresentation(const CwComplex2& m);

/* Detects the closed-surface polygon pattern: a single face whose word uses
 * every edge of the complex exactly twice. Such a complex is a closed
 * surface; it is orientable iff each edge occurs with opposite signs, and
 * the Euler characteristic then pins down the genus / crosscap count.
 * Returns nullopt for anything else (never guesses). */
std::optional<ClosedSurface> recognizeClosedSurface(const CwComplex2& m);

} // namespace pbundle
