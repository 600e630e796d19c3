#include "algeo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "algeo/builtins.hpp"

namespace algeo {

namespace {

using nlohmann::json;

std::vector<StructureTriple> parse_triples(const json &arr, const FieldSpec &field,
                                           const char *what) {
    if (!arr.is_array())
        throw ParseError(std::string(what) + " must be an array of {i,j,k,c} objects");
    std::vector<StructureTriple> out;
    for (const auto &t : arr) {
        if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("k") ||
            !t.contains("c"))
            throw ParseError(std::string(what) + " entries need fields i, j, k, c");
        out.push_back({t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>(),
                       Scalar::from_string(field, t.at("c").get<std::string>())});
    }
    return out;
}

} // namespace

AlgebraPtr parse_algebra(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("json parse error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!doc.is_object())
        throw ParseError("algebra file must be a json object");
    for (const char *key : {"name", "field", "dimension", "mu"})
        if (!doc.contains(key))
            throw ParseError(std::string("algebra file misses required field '") + key + "'");

    const json &fj = doc.at("field");
    if (!fj.is_object() || !fj.contains("kind"))
        throw ParseError("field must be an object with a 'kind'");
    std::string kind = fj.at("kind").get<std::string>();
    FieldSpec field;
    if (kind == "rational") {
        field = FieldSpec::rationals();
    } else if (kind == "prime") {
        if (!fj.contains("modulus"))
            throw ParseError("prime field needs a 'modulus'");
        field = FieldSpec::prime(fj.at("modulus").get<std::uint64_t>());
    } else {
        throw ParseError("field kind must be 'rational' or 'prime', got '" + kind + "'");
    }

    int dim = doc.at("dimension").get<int>();
    std::vector<std::string> basis;
    if (doc.contains("basis"))
        basis = doc.at("basis").get<std::vector<std::string>>();

    auto mu = parse_triples(doc.at("mu"), field, "mu");
    std::optional<std::vector<StructureTriple>> brk;
    if (doc.contains("bracket") && !doc.at("bracket").is_null()) {
        const json &bj = doc.at("bracket");
        if (bj.is_string()) {
            if (bj.get<std::string>() != "commutator")
                throw ParseError("bracket keyword must be \"commutator\"");
            // default: leave unset, the torsion layer derives mu_-
        } else {
            brk = parse_triples(bj, field, "bracket");
        }
    }
    return AlgebraSpec::create(doc.at("name").get<std::string>(), field, dim, std::move(basis),
                               mu, brk);
}

AlgebraPtr load_algebra(const std::string &path_or_builtin) {
    if (AlgebraPtr b = builtins::by_name(path_or_builtin))
        return b;
    std::ifstream in(path_or_builtin);
    if (!in)
        throw ParseError("no builtin algebra and no readable file named '" + path_or_builtin +
                         "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string input_digest(const AlgebraPtr &alg) {
    std::string text = alg->canonical_text();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace algeo
