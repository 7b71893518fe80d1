#include "toric/documents.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace toric {

VarNames VarNames::affine(std::size_t nvars) {
    VarNames out;
    for (std::size_t i = 0; i < nvars; ++i)
        out.names.push_back("x" + std::to_string(i + 1));
    return out;
}

VarNames VarNames::projective(std::size_t base_nvars) {
    VarNames out = affine(base_nvars);
    out.names.push_back("x0");
    return out;
}

VarNames VarNames::projective_extended(std::size_t base_nvars) {
    VarNames out = projective(base_nvars);
    out.names.push_back("x" + std::to_string(base_nvars + 1));
    return out;
}

std::string VarNames::monomial(const ExponentVector& e) const {
    check_invariant(e.size() == names.size(), "naming arity mismatch");
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (any)
            os << '*';
        os << names[i];
        if (e[i] != 1)
            os << '^' << e[i];
        any = true;
    }
    if (!any)
        os << '1';
    return os.str();
}

std::string VarNames::binomial(const Binomial& b) const {
    std::string out = monomial(b.plus());
    if (!b.is_monomial())
        out += " - " + monomial(b.minus());
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok)
        tokens.push_back(tok);
    return tokens;
}

Int parse_int(const std::string& tok, std::size_t lineno) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": not an integer: " + tok);
    }
}

}  // namespace

AffineSemigroup parse_semigroup_document(std::istream& in) {
    std::size_t dim = 0;
    std::vector<ExponentVector> gens;
    std::string label;
    std::string line;
    std::size_t lineno = 0;
    bool saw_dim = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const std::string& key = tokens[0];
        if (key == "dim") {
            if (tokens.size() != 2)
                throw InputError("line " + std::to_string(lineno) + ": dim needs one integer");
            Int d = parse_int(tokens[1], lineno);
            if (d < 1 || d > 64)
                throw InputError("line " + std::to_string(lineno) + ": dim out of range");
            dim = d.convert_to<std::size_t>();
            saw_dim = true;
        } else if (key == "gen") {
            if (!saw_dim)
                throw InputError("line " + std::to_string(lineno) + ": gen before dim");
            if (tokens.size() != dim + 1)
                throw InputError("line " + std::to_string(lineno) + ": gen needs " +
                                 std::to_string(dim) + " integers");
            ExponentVector g(dim);
            for (std::size_t c = 0; c < dim; ++c) {
                g[c] = parse_int(tokens[c + 1], lineno);
                if (g[c] < 0)
                    throw InputError("line " + std::to_string(lineno) +
                                     ": generator entries must be non-negative");
            }
            gens.push_back(std::move(g));
        } else if (key == "label") {
            std::size_t at = line.find("label") + 5;
            while (at < line.size() && line[at] == ' ')
                ++at;
            label = at < line.size() ? line.substr(at) : std::string{};
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_dim)
        throw InputError("semigroup document: missing dim");
    if (gens.empty())
        throw InputError("semigroup document: missing gen lines");
    return AffineSemigroup(dim, std::move(gens), std::move(label));
}

AffineSemigroup parse_semigroup_document(const std::string& text) {
    std::istringstream is(text);
    return parse_semigroup_document(is);
}

AffineSemigroup load_semigroup_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file: " + path);
    return parse_semigroup_document(in);
}

std::string write_semigroup_document(const AffineSemigroup& s) {
    std::ostringstream os;
    os << "dim " << s.dim() << '\n';
    for (const auto& g : s.generators()) {
        os << "gen";
        for (std::size_t c = 0; c < s.dim(); ++c)
            os << ' ' << g[c];
        os << '\n';
    }
    if (!s.label().empty())
        os << "label " << s.label() << '\n';
    return os.str();
}

BinomialIdeal parse_ideal_document(std::istream& in) {
    std::size_t nvars = 0;
    bool saw_vars = false;
    std::vector<Binomial> gens;
    std::string line;
    std::size_t lineno = 0;

    auto read_vector = [&](const std::vector<std::string>& tokens, std::size_t from,
                           std::size_t count) {
        ExponentVector e(count);
        for (std::size_t i = 0; i < count; ++i) {
            e[i] = parse_int(tokens[from + i], lineno);
            if (e[i] < 0)
                throw InputError("line " + std::to_string(lineno) + ": negative exponent");
        }
        return e;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const std::string& key = tokens[0];
        if (key == "vars") {
            if (tokens.size() != 2)
                throw InputError("line " + std::to_string(lineno) + ": vars needs one integer");
            Int v = parse_int(tokens[1], lineno);
            if (v < 1 || v > 64)
                throw InputError("line " + std::to_string(lineno) + ": vars out of range");
            nvars = v.convert_to<std::size_t>();
            saw_vars = true;
        } else if (key == "binom") {
            if (!saw_vars)
                throw InputError("line " + std::to_string(lineno) + ": binom before vars");
            if (tokens.size() != 2 * nvars + 2 || tokens[nvars + 1] != "-")
                throw InputError("line " + std::to_string(lineno) +
                                 ": binom needs '<plus> - <minus>' with " +
                                 std::to_string(nvars) + " integers each");
            auto b = Binomial::difference(read_vector(tokens, 1, nvars),
                                          read_vector(tokens, nvars + 2, nvars));
            if (!b)
                throw InputError("line " + std::to_string(lineno) + ": binomial is zero");
            gens.push_back(*b);
        } else if (key == "mono") {
            if (!saw_vars)
                throw InputError("line " + std::to_string(lineno) + ": mono before vars");
            if (tokens.size() != nvars + 1)
                throw InputError("line " + std::to_string(lineno) + ": mono needs " +
                                 std::to_string(nvars) + " integers");
            gens.push_back(Binomial::monomial(read_vector(tokens, 1, nvars)));
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_vars)
        throw InputError("ideal document: missing vars");
    return BinomialIdeal(nvars, std::move(gens));
}

BinomialIdeal parse_ideal_document(const std::string& text) {
    std::istringstream is(text);
    return parse_ideal_document(is);
}

std::string write_ideal_document(const BinomialIdeal& ideal) {
    std::ostringstream os;
    os << "vars " << ideal.nvars() << '\n';
    for (const auto& g : ideal.generators()) {
        if (g.is_monomial()) {
            os << "mono";
            for (std::size_t i = 0; i < ideal.nvars(); ++i)
                os << ' ' << g.plus()[i];
        } else {
            os << "binom";
            for (std::size_t i = 0; i < ideal.nvars(); ++i)
                os << ' ' << g.plus()[i];
            os << " -";
            for (std::size_t i = 0; i < ideal.nvars(); ++i)
                os << ' ' << g.minus()[i];
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json semigroup_to_json(const AffineSemigroup& s) {
    nlohmann::json j;
    j["dim"] = s.dim();
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : s.generators()) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < s.dim(); ++c)
            row.push_back(g[c].str());
        gens.push_back(row);
    }
    j["generators"] = gens;
    if (!s.label().empty())
        j["label"] = s.label();
    return j;
}

nlohmann::json binomial_to_json(const Binomial& b) {
    nlohmann::json j;
    nlohmann::json plus = nlohmann::json::array();
    for (std::size_t i = 0; i < b.nvars(); ++i)
        plus.push_back(b.plus()[i].str());
    j["plus"] = plus;
    if (b.is_monomial()) {
        j["monomial"] = true;
    } else {
        nlohmann::json minus = nlohmann::json::array();
        for (std::size_t i = 0; i < b.nvars(); ++i)
            minus.push_back(b.minus()[i].str());
        j["minus"] = minus;
    }
    return j;
}

nlohmann::json basis_to_json(const std::vector<Binomial>& elems, const VarNames& names) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : elems) {
        nlohmann::json e = binomial_to_json(b);
        e["display"] = names.binomial(b);
        j.push_back(e);
    }
    return j;
}

ExponentVector parse_point(const std::string& text, std::size_t dim) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '(' || c == ')')
            c = ' ';
    auto tokens = tokenize(cleaned);
    if (tokens.size() != dim)
        throw InputError("point needs " + std::to_string(dim) + " coordinates: " + text);
    ExponentVector out(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        out[c] = parse_int(tokens[c], 0);
        if (out[c] < 0)
            throw InputError("point coordinates must be non-negative: " + text);
    }
    return out;
}

}  // namespace toric
