#include "osq/matroid_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "osq/rational_matrix.hpp"

namespace osq {

namespace {

Matroid from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("matroid file: expected an object");
    const bool has_circuits = j.contains("circuits");
    const bool has_matrix = j.contains("matrix");
    if (has_circuits && has_matrix)
        throw std::invalid_argument("matroid file: specify either circuits or matrix, not both");
    if (!has_circuits && !has_matrix)
        throw std::invalid_argument("matroid file: missing circuits or matrix");

    if (has_matrix) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : j.at("matrix")) {
            std::vector<std::string> r;
            for (const auto& entry : row) {
                if (entry.is_string())
                    r.push_back(entry.get<std::string>());
                else if (entry.is_number_integer())
                    r.push_back(std::to_string(entry.get<long long>()));
                else
                    throw std::invalid_argument("matrix entries must be rational strings");
            }
            rows.push_back(std::move(r));
        }
        return circuits_from_matrix(RationalMatrix::from_strings(rows));
    }

    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("matroid file: missing ground set size n");
    const int n = j.at("n").get<int>();
    std::vector<Subset> circuits;
    for (const auto& c : j.at("circuits")) {
        Subset s = 0;
        for (const auto& entry : c) {
            if (!entry.is_number_integer())
                throw std::invalid_argument("circuit labels must be integers");
            const long long label = entry.get<long long>();
            if (label < 1 || label > n)
                throw std::invalid_argument("circuit label out of range: " +
                                            std::to_string(label));
            const Subset bit = Subset{1} << (label - 1);
            if (s & bit)
                throw std::invalid_argument("duplicate label in circuit: " +
                                            std::to_string(label));
            s |= bit;
        }
        circuits.push_back(s);
    }
    return Matroid(n, std::move(circuits));
}

}  // namespace

Matroid load_matroid_text(const std::string& json_text) {
    return from_json(nlohmann::json::parse(json_text));
}

Matroid load_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matroid file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_matroid_text(buf.str());
}

}  // namespace osq
