#include "pbundle/group_descriptor.hpp"

#include <cctype>
#include <regex>
#include <string>

#include "pbundle/errors.hpp"
#include "pbundle/json_io.hpp"

namespace pbundle {

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Int digitsToInt(const std::string& digits) {
    Int n = 0;
    for (char c : digits) n = n * 10 + (c - '0');
    return n;
}

long digitsToLong(const std::string& digits, const std::string& where) {
    Int n = digitsToInt(digits);
    if (n > 1000000) throw ParseError(where + ": parameter is implausibly large");
    return static_cast<long>(n);
}

GroupDescriptor catalogAtom(std::string name, FgAbelianGroup pi0, FgAbelianGroup pi1) {
    GroupDescriptor g;
    g.name = std::move(name);
    g.pi0 = std::move(pi0);
    g.pi1 = std::move(pi1);
    g.provenance = Provenance::Catalog;
    return g;
}

GroupDescriptor parseAtom(const std::string& atom) {
    static const std::regex lieGroup(R"(^(U|SU|SO|Sp)\((\d+)\)$)");
    static const std::regex torus(R"(^T\^(\d+)$)");
    static const std::regex cyclicGroup(R"(^Z/(\d+)$)");

    if (atom == "0") return catalogAtom("0", FgAbelianGroup{}, FgAbelianGroup{});
    if (atom == "Z") return catalogAtom("Z", kZ, FgAbelianGroup{});

    std::smatch match;
    if (std::regex_match(atom, match, lieGroup)) {
        const std::string family = match[1];
        long n = digitsToLong(match[2], family);
        if (family == "U") {
            if (n < 1) throw ParseError("U(n) needs n >= 1");
            return catalogAtom(atom, FgAbelianGroup{}, kZ);
        }
        if (family == "SU") {
            if (n < 2) throw ParseError("SU(n) needs n >= 2 (SU(1) is the trivial group; write \"0\")");
            return catalogAtom(atom, FgAbelianGroup{}, FgAbelianGroup{});
        }
        if (family == "Sp") {
            if (n < 1) throw ParseError("Sp(n) needs n >= 1");
            return catalogAtom(atom, FgAbelianGroup{}, FgAbelianGroup{});
        }
        if (n == 3 || n >= 5) return catalogAtom(atom, FgAbelianGroup{}, cyclic(2));
        throw ParseError("SO(" + std::to_string(n) +
                         ") is not in the catalog (only SO(3) and SO(n) for n >= 5 are); "
                         "pass an explicit descriptor instead");
    }
    if (std::regex_match(atom, match, torus)) {
        long k = digitsToLong(match[1], "T^k");
        if (k < 1) throw ParseError("T^k needs k >= 1 (write \"0\" for the trivial group)");
        return catalogAtom(atom, FgAbelianGroup{}, freeAbelian(k));
    }
    if (std::regex_match(atom, match, cyclicGroup)) {
        Int m = digitsToInt(match[1]);
        if (m < 1) throw ParseError("Z/m needs m >= 1 (\"Z/0\" is not accepted; write \"Z\")");
        return catalogAtom(atom, cyclic(m), FgAbelianGroup{});
    }
    throw ParseError("unrecognized group \"" + atom + "\"");
}

}  // namespace

GroupDescriptor productDescriptor(const GroupDescriptor& a, const GroupDescriptor& b) {
    GroupDescriptor g;
    g.name = a.name + " x " + b.name;
    g.pi0 = directSum(a.pi0, b.pi0);
    g.pi1 = directSum(a.pi1, b.pi1);
    g.pi0_discrete = (a.pi0_discrete && b.pi0_discrete) || g.pi0.trivial();
    g.pi0_abelian = a.pi0_abelian && b.pi0_abelian;
    g.trivial_action = a.trivial_action && b.trivial_action;
    g.provenance = Provenance::Product;
    return g;
}

GroupDescriptor coveringQuotient(const FgAbelianGroup& gamma) {
    if (!gamma.finite())
        throw DomainError("coveringQuotient: the deck group must be finite");
    GroupDescriptor g;
    g.name = "G~/" + renderGroup(gamma, true);
    g.pi1 = gamma;
    g.provenance = Provenance::CoveringQuotient;
    return g;
}

GroupDescriptor parseGroupSpec(const std::string& text) {
    std::string s = trimmed(text);
    if (s.empty()) throw ParseError("empty group expression");
    if (s.front() == '{') {
        Json j;
        try {
            j = Json::parse(s);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("group descriptor JSON: ") + e.what());
        }
        return descriptorFromJson(j);
    }
    std::string packed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) packed.push_back(c);
    // no atom name contains the letter x, so it can only be the product sign
    std::vector<std::string> atoms;
    size_t pos = 0;
    while (true) {
        size_t next = packed.find('x', pos);
        atoms.push_back(packed.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    for (const std::string& atom : atoms)
        if (atom.empty()) throw ParseError("malformed product in \"" + text + "\"");
    GroupDescriptor g = parseAtom(atoms[0]);
    for (size_t i = 1; i < atoms.size(); ++i) g = productDescriptor(g, parseAtom(atoms[i]));
    return g;
}

std::vector<CatalogEntry> catalogEntries() {
    return {
        {"U(n)", "n >= 1", "0", "Z"},
        {"SU(n)", "n >= 2", "0", "0"},
        {"Sp(n)", "n >= 1", "0", "0"},
        {"SO(3)", "", "0", "Z/2"},
        {"SO(n)", "n >= 5", "0", "Z/2"},
        {"T^k", "k >= 1", "0", "Z^k"},
        {"Z/m", "m >= 1", "Z/m", "0"},
        {"Z", "", "Z", "0"},
        {"0", "", "0", "0"},
    };
}

}  // namespace pbundle
