#include "mzv/table.hpp"

#include "mzv/errors.hpp"
#include "mzv/relations.hpp"

#include <map>
#include <sstream>

namespace mzv {

std::vector<std::string> default_table_rows() {
    return {"pow2", "dk", "dn", "dnc", "ohno", "link", "duality"};
}

long long zagier_dim(int k) {
    std::vector<long long> d{1, 0, 1};
    for (int i = 3; i <= k; ++i) d.push_back(d[i - 2] + d[i - 3]);
    return d[k];
}

TableResult compute_rank_table(const TableSpec& spec) {
    if (spec.kmin < 3 || spec.kmin > spec.kmax)
        throw DomainError("weight range must satisfy 3 <= kmin <= kmax");
    int cap = spec.allow_heavy ? 12 : 10;
    if (spec.kmax > cap)
        throw DomainError("weight " + std::to_string(spec.kmax) +
                          " exceeds the cap; pass --allow-heavy for weights 11-12");

    TableResult out;
    for (int k = spec.kmin; k <= spec.kmax; ++k) out.weights.push_back(k);

    // relation sets are shared between family rows and union rows
    std::map<std::pair<std::string, int>, RelationSet> cache;
    auto get = [&](const std::string& fam, int k) -> const RelationSet& {
        auto key = std::make_pair(fam, k);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, generate(family_from_name(fam), k)).first;
        return it->second;
    };
    auto family_rank = [&](const std::string& fam, int k) {
        return static_cast<long long>(
            rank(relation_matrix(get(fam, k)), spec.seed, spec.jobs).rank);
    };
    auto union_rank = [&](const std::string& f1, const std::string& f2, int k) {
        return static_cast<long long>(
            rank_union({&get(f1, k), &get(f2, k)}, spec.seed, spec.jobs).rank);
    };

    for (const std::string& row : spec.rows) {
        std::vector<long long> values;
        for (int k : out.weights) {
            if (row == "pow2")
                values.push_back(1LL << (k - 2));
            else if (row == "dk" || row == "d_k")
                values.push_back(zagier_dim(k));
            else if (row == "dn" || row == "dnc" || row == "ohno" || row == "link" ||
                     row == "duality")
                values.push_back(family_rank(row, k));
            else if (row == "union-dnc-ohno")
                values.push_back(union_rank("dnc", "ohno", k));
            else if (row == "union-dnc-link")
                values.push_back(union_rank("dnc", "link", k));
            else if (row == "union-ohno-link")
                values.push_back(union_rank("ohno", "link", k));
            else
                throw DomainError("unknown table row: " + row);
        }
        out.rows.emplace_back(row == "d_k" ? "dk" : row, std::move(values));
    }
    return out;
}

std::string render_tsv(const TableResult& t) {
    std::ostringstream os;
    os << "weight";
    for (int k : t.weights) os << '\t' << k;
    os << '\n';
    for (const auto& [name, values] : t.rows) {
        os << name;
        for (long long v : values) os << '\t' << v;
        os << '\n';
    }
    return os.str();
}

std::string render_json(const TableResult& t) {
    std::ostringstream os;
    os << "{\n  \"weights\": [";
    for (std::size_t i = 0; i < t.weights.size(); ++i)
        os << (i ? ", " : "") << t.weights[i];
    os << "],\n  \"rows\": {\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    \"" << t.rows[r].first << "\": [";
        for (std::size_t i = 0; i < t.rows[r].second.size(); ++i)
            os << (i ? ", " : "") << t.rows[r].second[i];
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  }\n}\n";
    return os.str();
}

} // namespace mzv
