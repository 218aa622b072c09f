#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "simwaring/collection.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"

namespace simwaring {

/// On-disk form of a collection: a variable count, monomial strings, and
/// optional labels (JSON form only).
struct CollectionFile {
    int vars = 0;
    std::vector<std::string> monomials;
    std::vector<std::string> labels;
};

/// Plain-text format: first line `vars n`, then one monomial per line.
/// `#` starts a comment; blank lines are skipped.
inline CollectionFile read_collection_text(std::istream& in) {
    CollectionFile file;
    std::string line;
    bool saw_vars = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;
        if (!saw_vars) {
            if (first != "vars")
                throw parse_error("collection file must start with a `vars n` line");
            if (!(tokens >> file.vars) || file.vars <= 0)
                throw parse_error("`vars` needs a positive integer");
            std::string extra;
            if (tokens >> extra) throw parse_error("unexpected token after `vars n`: " + extra);
            saw_vars = true;
            continue;
        }
        std::string extra;
        if (tokens >> extra)
            throw parse_error("one monomial per line, found extra token: " + extra);
        file.monomials.push_back(first);
    }
    if (!saw_vars) throw parse_error("collection file must start with a `vars n` line");
    if (file.monomials.empty()) throw parse_error("collection file lists no monomials");
    return file;
}

/// JSON format: {"vars": n, "monomials": [...], "labels": [...]} with labels
/// optional.
inline CollectionFile read_collection_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid collection JSON: ") + e.what());
    }
    CollectionFile file;
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("monomials"))
        throw parse_error("collection JSON needs `vars` and `monomials`");
    if (!doc["vars"].is_number_integer() || doc["vars"].get<int>() <= 0)
        throw parse_error("`vars` needs a positive integer");
    file.vars = doc["vars"].get<int>();
    if (!doc["monomials"].is_array() || doc["monomials"].empty())
        throw parse_error("`monomials` needs a non-empty array of strings");
    for (const auto& entry : doc["monomials"]) {
        if (!entry.is_string()) throw parse_error("`monomials` entries must be strings");
        file.monomials.push_back(entry.get<std::string>());
    }
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || doc["labels"].size() != file.monomials.size())
            throw parse_error("`labels` must be an array matching `monomials`");
        for (const auto& entry : doc["labels"]) file.labels.push_back(entry.get<std::string>());
    }
    return file;
}

inline CollectionFile read_collection_file(const std::string& path, bool json = false) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open collection file: " + path);
    return json ? read_collection_json(in) : read_collection_text(in);
}

inline Collection to_collection(const CollectionFile& file) {
    std::vector<Monomial> monomials;
    monomials.reserve(file.monomials.size());
    for (const auto& text : file.monomials) monomials.push_back(Monomial::parse(text, file.vars));
    return Collection(file.vars, std::move(monomials));
}

} // namespace simwaring
