#include "grasspack/export_io.hpp"

#include <ostream>

#include "grasspack/bounds.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

long long to_ll(const BigInt& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw error("export: entry does not fit a 64-bit integer");
    return x.convert_to<long long>();
}

}  // namespace

nlohmann::json packing_to_json(const Packing& packing, const std::string& family, int level,
                               int threads) {
    nlohmann::json j;
    j["meta"] = {{"format_version", "1"}, {"tool", "grasspack"}};
    j["family"] = {{"name", family},
                   {"i", level},
                   {"m", packing.ambient_dim()},
                   {"n", packing.dim()},
                   {"N", packing.size()}};
    nlohmann::json subs = nlohmann::json::array();
    for (const Subspace& s : packing.members()) {
        const ScaledIntMatrix& g = s.generator();
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < g.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < g.cols(); ++c) row.push_back(to_ll(g.at(r, c)));
            rows.push_back(std::move(row));
        }
        subs.push_back({{"rows", std::move(rows)}, {"sqrt2_exponent", g.sqrt2_exponent()}});
    }
    j["subspaces"] = std::move(subs);

    const PairStats& st = packing.stats(threads);
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& [d2, cnt] : st.histogram) hist.push_back({{"d2", d2.str()}, {"pairs", cnt}});
    const Fraction bound = rankin_bound(packing.ambient_dim(), packing.dim());
    j["summary"] = {{"min_d2", st.min_d2.str()},
                    {"histogram", std::move(hist)},
                    {"rankin_bound", bound.str()},
                    {"meets_rankin_bound", Fraction(st.min_d2) == bound}};
    return j;
}

Packing packing_from_json(const nlohmann::json& j) {
    if (j.at("meta").at("format_version").get<std::string>() != "1")
        throw error("import: unsupported format_version");
    const int m = j.at("family").at("m").get<int>();
    const int n = j.at("family").at("n").get<int>();
    std::vector<Subspace> members;
    for (const auto& sub : j.at("subspaces")) {
        const auto& rows = sub.at("rows");
        std::vector<BigInt> entries;
        entries.reserve(static_cast<std::size_t>(n) * m);
        for (const auto& row : rows)
            for (const auto& e : row) entries.emplace_back(e.get<long long>());
        members.emplace_back(ScaledIntMatrix(static_cast<int>(rows.size()), m, std::move(entries),
                                             sub.at("sqrt2_exponent").get<unsigned>()));
    }
    return Packing(m, n, std::move(members));
}

void packing_to_csv(std::ostream& os, const Packing& packing) {
    for (std::size_t idx = 0; idx < packing.size(); ++idx) {
        const ScaledIntMatrix& g = packing.at(idx).generator();
        for (int r = 0; r < g.rows(); ++r) {
            os << idx << ',' << r;
            for (int c = 0; c < g.cols(); ++c) os << ',' << g.at(r, c);
            os << '\n';
        }
    }
}

}  // namespace grasspack
