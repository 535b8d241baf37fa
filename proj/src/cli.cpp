#include "pbundle/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "pbundle/errors.hpp"
#include "pbundle/homology.hpp"
#include "pbundle/json_io.hpp"

namespace pbundle {

namespace {

struct Style {
    bool ascii = false;
    const char* iso() const { return ascii ? "=" : "≅"; }
    std::string bundleSet(const std::string& base) const {
        return (ascii ? "B_G(" : "\U0001D4D1_G(") + base + ")";
    }
    std::string group(const FgAbelianGroup& g) const { return renderGroup(g, ascii); }
};

struct SourceOptions {
    std::string complex_path;
    std::string surface_spec;
    long wedge = -1;
};

long parseCount(const std::string& text, const char* what) {
    if (text.empty()) throw UsageError(std::string(what) + ": missing number");
    long value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw UsageError(std::string(what) + ": expected a number, got \"" + text + "\"");
        value = value * 10 + (c - '0');
        if (value > 1000000) throw UsageError(std::string(what) + ": number out of range");
    }
    return value;
}

StandardSpace parseSurfaceSpec(const std::string& spec) {
    if (spec == "sphere") return SphereSpec{};
    size_t eq = spec.find('=');
    if (eq != std::string::npos) {
        std::string key = spec.substr(0, eq);
        std::string val = spec.substr(eq + 1);
        if (key == "genus") return OrientableSurface{parseCount(val, "--surface genus")};
        if (key == "crosscaps") {
            long k = parseCount(val, "--surface crosscaps");
            if (k < 1) throw UsageError("--surface crosscaps: need at least 1");
            return NonOrientableSurface{k};
        }
    }
    throw UsageError("--surface expects genus=G, crosscaps=K, or sphere");
}

CwComplex2 resolveComplex(const SourceOptions& src) {
    int given = (src.complex_path.empty() ? 0 : 1) + (src.surface_spec.empty() ? 0 : 1) +
                (src.wedge >= 0 ? 1 : 0);
    if (given != 1) throw UsageError("give exactly one of --complex, --surface, --wedge");
    if (!src.complex_path.empty()) return loadComplexFile(src.complex_path);
    if (src.wedge >= 0) return buildWedgeOfCircles(src.wedge);
    return buildStandard(parseSurfaceSpec(src.surface_spec));
}

void addSourceOptions(CLI::App* sub, SourceOptions& src) {
    sub->add_option("--complex", src.complex_path, "complex description file (JSON)");
    sub->add_option("--surface", src.surface_spec, "genus=G, crosscaps=K, or sphere");
    sub->add_option("--wedge", src.wedge, "wedge of N circles")->check(CLI::NonNegativeNumber);
}

std::string joinTags(const std::vector<std::string>& a, const std::vector<std::string>& b = {}) {
    std::string out;
    for (const std::string& t : a) {
        if (!out.empty()) out += "; ";
        out += t;
    }
    for (const std::string& t : b) {
        if (!out.empty()) out += "; ";
        out += t;
    }
    return out;
}

void printClassification(std::ostream& out, const ClassificationResult& r,
                         const ValidationReport& v, const Style& st) {
    out << "complex " << r.complex_name << ": vertices " << v.vertex_count << ", edges "
        << v.edge_count << ", faces " << v.face_count << ", chi " << v.euler_characteristic
        << "\n";
    out << "group " << r.group_name << "\n";
    out << "H^2(M; pi1 G) = " << st.group(r.kernel_term.group) << "\n";
    out << "H^1(M; pi0 G) = " << st.group(r.quotient_term.group) << "\n";
    out << "verdict: " << verdictName(r.verdict) << "\n";
    if (r.classified_group) {
        out << st.bundleSet(r.complex_name) << " " << st.iso() << " "
            << st.group(*r.classified_group) << "\n";
    } else {
        out << st.bundleSet(r.complex_name) << ": extension of H^1 by H^2, structure undetermined\n";
    }
    switch (r.cardinality.kind) {
        case Cardinality::Finite: out << "cardinality: " << r.cardinality.value << "\n"; break;
        case Cardinality::Infinite: out << "cardinality: infinite\n"; break;
        case Cardinality::Unknown: out << "cardinality: unknown\n"; break;
    }
    out << "citations: " << joinTags(r.citations, r.applied_shortcuts) << "\n";
}

void printOracleReport(std::ostream& out, const OracleReport& rep, const Style& st) {
    if (!rep.applicable) {
        out << "[n/a]  " << rep.subject << "\n";
        return;
    }
    out << (rep.agreement ? "[ok]   " : "[FAIL] ") << rep.subject << ": engine "
        << renderOracleValue(rep.engine_value, st.ascii) << ", oracle "
        << renderOracleValue(rep.oracle_value, st.ascii) << "\n";
}

std::string surfaceDisplayName(const StandardSpace& spec) {
    if (std::holds_alternative<SphereSpec>(spec)) return "S^2";
    if (const auto* o = std::get_if<OrientableSurface>(&spec))
        return o->genus == 0 ? "S^2" : "Sigma_" + std::to_string(o->genus);
    if (const auto* n = std::get_if<NonOrientableSurface>(&spec))
        return "N_" + std::to_string(n->crosscaps);
    return "Wedge";
}

struct Flags {
    bool json = false;
    bool ascii = false;
};

void addOutputFlags(CLI::App* sub, Flags& f) {
    sub->add_flag("--json", f.json, "machine-readable output");
    sub->add_flag("--ascii", f.ascii, "ASCII-only group notation");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"principal bundle classification over 2-dimensional CW-complexes"};
    app.require_subcommand(1);

    SourceOptions classifySrc, cohomSrc, homSrc, validateSrc, oracleSrc;
    Flags classifyFlags, cohomFlags, homFlags, validateFlags, surfaceFlags, sphereFlags,
        oracleFlags, catalogFlags;
    std::string classifyGroup, cohomCoeff, surfaceSpec, surfaceCoeff, sphereGroup, oracleGroup;
    int cohomDegree = -1;
    int sphereDim = 2;

    CLI::App* classifyCmd = app.add_subcommand("classify", "classify principal G-bundles");
    addSourceOptions(classifyCmd, classifySrc);
    classifyCmd->add_option("--group", classifyGroup, "structure group")->required();
    addOutputFlags(classifyCmd, classifyFlags);

    CLI::App* cohomCmd = app.add_subcommand("cohomology", "cellular cohomology groups");
    addSourceOptions(cohomCmd, cohomSrc);
    cohomCmd->add_option("--coefficients", cohomCoeff, "coefficient group (discrete)")->required();
    cohomCmd->add_option("--degree", cohomDegree, "single degree 0..3 (default: all)");
    addOutputFlags(cohomCmd, cohomFlags);

    CLI::App* homCmd = app.add_subcommand("homology", "integral homology groups");
    addSourceOptions(homCmd, homSrc);
    addOutputFlags(homCmd, homFlags);

    CLI::App* validateCmd = app.add_subcommand("validate", "validate a complex description");
    addSourceOptions(validateCmd, validateSrc);
    addOutputFlags(validateCmd, validateFlags);

    CLI::App* surfaceCmd = app.add_subcommand("surface", "closed-form H^2 for a closed surface");
    surfaceCmd->add_option("--surface", surfaceSpec, "genus=G, crosscaps=K, or sphere")->required();
    surfaceCmd->add_option("--coefficients", surfaceCoeff, "coefficient group (discrete)")->required();
    addOutputFlags(surfaceCmd, surfaceFlags);

    CLI::App* sphereCmd = app.add_subcommand("sphere", "bundle classes over S^1 or S^2");
    sphereCmd->add_option("--group", sphereGroup, "structure group")->required();
    sphereCmd->add_option("--degree", sphereDim, "sphere dimension, 1 or 2 (default 2)");
    addOutputFlags(sphereCmd, sphereFlags);

    CLI::App* oracleCmd = app.add_subcommand("oracle", "independent cross-checks");
    addSourceOptions(oracleCmd, oracleSrc);
    oracleCmd->add_option("--group", oracleGroup, "structure group")->required();
    addOutputFlags(oracleCmd, oracleFlags);

    CLI::App* catalogCmd = app.add_subcommand("catalog", "built-in structure groups");
    addOutputFlags(catalogCmd, catalogFlags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classifyCmd) {
            Style st{classifyFlags.ascii};
            CwComplex2 m = resolveComplex(classifySrc);
            ValidationReport report = validate(m);
            ClassificationResult r = classify(m, parseGroupSpec(classifyGroup));
            if (classifyFlags.json)
                emit(out, resultToJson(r));
            else
                printClassification(out, r, report, st);
            return 0;
        }

        if (*cohomCmd) {
            Style st{cohomFlags.ascii};
            CwComplex2 m = resolveComplex(cohomSrc);
            GroupDescriptor cg = parseGroupSpec(cohomCoeff);
            if (!cg.pi1.trivial())
                throw UsageError("--coefficients must name a discrete group (pi1 = 0)");
            FgAbelianGroup pi = cg.pi0;
            if (cohomCmd->count("--degree") && (cohomDegree < 0 || cohomDegree > 3))
                throw UsageError("--degree must be between 0 and 3");
            std::vector<int> degrees;
            if (cohomCmd->count("--degree"))
                degrees.push_back(cohomDegree);
            else
                degrees = {0, 1, 2, 3};
            if (cohomFlags.json) {
                Json j;
                j["complex"] = m.name;
                j["coefficients"] = groupToJson(pi);
                j["groups"] = Json::array();
                for (int d : degrees) {
                    Json entry;
                    entry["degree"] = d;
                    entry["group"] = groupToJson(cohomologyUct(m, pi, d).group);
                    j["groups"].push_back(std::move(entry));
                }
                emit(out, j);
            } else {
                for (int d : degrees)
                    out << "H^" << d << "(" << m.name << "; " << st.group(pi)
                        << ") = " << st.group(cohomologyUct(m, pi, d).group) << "\n";
            }
            return 0;
        }

        if (*homCmd) {
            Style st{homFlags.ascii};
            CwComplex2 m = resolveComplex(homSrc);
            HomologyProfile h = integralHomology(m);
            if (homFlags.json) {
                Json j;
                j["complex"] = m.name;
                j["h0"] = groupToJson(h.h0);
                j["h1"] = groupToJson(h.h1);
                j["h2"] = groupToJson(h.h2);
                emit(out, j);
            } else {
                out << "H_0(" << m.name << ") = " << st.group(h.h0) << "\n";
                out << "H_1(" << m.name << ") = " << st.group(h.h1) << "\n";
                out << "H_2(" << m.name << ") = " << st.group(h.h2) << "\n";
            }
            return 0;
        }

        if (*validateCmd) {
            CwComplex2 m = resolveComplex(validateSrc);
            ValidationReport report = validate(m);
            if (validateFlags.json) {
                Json j;
                j["complex"] = m.name;
                j["valid"] = true;
                j["connected"] = report.connected;
                j["vertices"] = report.vertex_count;
                j["edges"] = report.edge_count;
                j["faces"] = report.face_count;
                j["euler_characteristic"] = report.euler_characteristic;
                emit(out, j);
            } else {
                out << "complex " << m.name << ": valid\n";
                out << "vertices " << report.vertex_count << ", edges " << report.edge_count
                    << ", faces " << report.face_count << "\n";
                out << "euler characteristic: " << report.euler_characteristic << "\n";
                out << "connected: yes\n";
            }
            return 0;
        }

        if (*surfaceCmd) {
            Style st{surfaceFlags.ascii};
            StandardSpace spec = parseSurfaceSpec(surfaceSpec);
            GroupDescriptor cg = parseGroupSpec(surfaceCoeff);
            if (!cg.pi1.trivial())
                throw UsageError("--coefficients must name a discrete group (pi1 = 0)");
            ClosedSurface surface = std::holds_alternative<NonOrientableSurface>(spec)
                                        ? ClosedSurface{std::get<NonOrientableSurface>(spec)}
                                        : ClosedSurface{OrientableSurface{
                                              std::holds_alternative<SphereSpec>(spec)
                                                  ? 0
                                                  : std::get<OrientableSurface>(spec).genus}};
            FgAbelianGroup value = surfaceClosedForm(surface, cg.pi0);
            const char* tagUsed = std::holds_alternative<NonOrientableSurface>(surface)
                                      ? tag::kNonOrientable
                                      : tag::kOrientable;
            std::string name = surfaceDisplayName(spec);
            if (surfaceFlags.json) {
                Json j;
                j["surface"] = name;
                j["coefficients"] = groupToJson(cg.pi0);
                j["h2"] = groupToJson(value);
                j["citations"] = Json::array({tagUsed});
                emit(out, j);
            } else {
                out << "H^2(" << name << "; " << st.group(cg.pi0) << ") = " << st.group(value)
                    << "\n";
                out << "citations: " << tagUsed << "\n";
            }
            return 0;
        }

        if (*sphereCmd) {
            Style st{sphereFlags.ascii};
            if (sphereDim != 1 && sphereDim != 2)
                throw UsageError("--degree must be 1 or 2 for the sphere formula");
            GroupDescriptor g = parseGroupSpec(sphereGroup);
            FgAbelianGroup value = classifySphere(g, sphereDim);
            std::string base = sphereDim == 1 ? "S^1" : "S^2";
            if (sphereFlags.json) {
                Json j;
                j["group"] = g.name;
                j["sphere"] = base;
                j["classified_group"] = groupToJson(value);
                j["citations"] = Json::array({tag::kSphere});
                emit(out, j);
            } else {
                out << st.bundleSet(base) << " " << st.iso() << " " << st.group(value) << " for G = "
                    << g.name << "\n";
                out << "citations: " << tag::kSphere << "\n";
            }
            return 0;
        }

        if (*oracleCmd) {
            Style st{oracleFlags.ascii};
            CwComplex2 m = resolveComplex(oracleSrc);
            GroupDescriptor g = parseGroupSpec(oracleGroup);
            std::vector<OracleReport> reports;
            std::vector<FgAbelianGroup> coefficientRuns;
            if (!g.pi1.trivial()) coefficientRuns.push_back(g.pi1);
            if (!g.pi0.trivial() && !(g.pi0 == g.pi1)) coefficientRuns.push_back(g.pi0);
            if (coefficientRuns.empty()) coefficientRuns.push_back(FgAbelianGroup{});
            for (const FgAbelianGroup& pi : coefficientRuns) {
                std::vector<OracleReport> batch = uctVsDirect(m, pi);
                reports.insert(reports.end(), batch.begin(), batch.end());
            }
            if (g.pi0.finite() && !g.pi0.trivial()) reports.push_back(h1HomCounting(m, g.pi0));
            reports.push_back(finiteClassEnumeration(m, g));

            int checked = 0, agreed = 0, skipped = 0;
            for (const OracleReport& rep : reports) {
                if (!rep.applicable) {
                    ++skipped;
                    continue;
                }
                ++checked;
                if (rep.agreement) ++agreed;
            }
            if (oracleFlags.json) {
                Json j;
                j["complex"] = m.name;
                j["group"] = g.name;
                j["reports"] = Json::array();
                for (const OracleReport& rep : reports) j["reports"].push_back(oracleReportToJson(rep));
                j["all_agree"] = checked == agreed;
                emit(out, j);
            } else {
                for (const OracleReport& rep : reports) printOracleReport(out, rep, st);
                out << "summary: " << checked << " checked, " << agreed << " agree, " << skipped
                    << " skipped\n";
            }
            return checked == agreed ? 0 : 1;
        }

        if (*catalogCmd) {
            std::vector<CatalogEntry> entries = catalogEntries();
            if (catalogFlags.json) {
                Json j;
                j["entries"] = Json::array();
                for (const CatalogEntry& e : entries) {
                    Json row;
                    row["family"] = e.family;
                    row["constraint"] = e.constraint;
                    row["pi0"] = e.pi0;
                    row["pi1"] = e.pi1;
                    j["entries"].push_back(std::move(row));
                }
                emit(out, j);
            } else {
                out << std::left << std::setw(8) << "family" << std::setw(12) << "constraint"
                    << std::setw(6) << "pi0" << "pi1\n";
                for (const CatalogEntry& e : entries)
                    out << std::left << std::setw(8) << e.family << std::setw(12) << e.constraint
                        << std::setw(6) << e.pi0 << e.pi1 << "\n";
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable: require_subcommand guarantees a dispatch
}

}  // namespace pbundle
