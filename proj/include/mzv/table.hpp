#ifndef MZV_TABLE_HPP
#define MZV_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mzv {

// Row names: pow2, dk, dn, dnc, ohno, link, duality,
// union-dnc-ohno, union-dnc-link, union-ohno-link.
struct TableSpec {
    std::vector<std::string> rows;
    int kmin = 3;
    int kmax = 10;
    bool allow_heavy = false; // required for weights 11 and 12
    std::uint64_t seed = 0;
    int jobs = 0;
};

struct TableResult {
    std::vector<int> weights;
    std::vector<std::pair<std::string, std::vector<long long>>> rows;
};

std::vector<std::string> default_table_rows();

// d_0 = 1, d_1 = 0, d_2 = 1, d_k = d_{k-2} + d_{k-3}
long long zagier_dim(int k);

TableResult compute_rank_table(const TableSpec& spec);

std::string render_tsv(const TableResult& t);
std::string render_json(const TableResult& t);

} // namespace mzv

#endif
