#include "grasspack/packing.hpp"

#include <mutex>

#include "grasspack/bounds.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/sweep.hpp"

namespace grasspack {

namespace {
std::mutex stats_mutex;
}

Packing::Packing(int ambient_dim, int dim, std::vector<Subspace> members)
    : m_(ambient_dim), n_(dim), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const Subspace& s = members_[i];
        if (s.ambient_dim() != m_ || s.dim() != n_)
            throw dimension_error("packing: member " + std::to_string(i) +
                                  " has mismatched dimensions");
        auto& bucket = by_hash_[s.hash()];
        for (std::size_t j : bucket)
            if (members_[j] == s)
                throw error("packing: duplicate subspace at indices " + std::to_string(j) +
                            " and " + std::to_string(i));
        bucket.push_back(i);
    }
}

bool Packing::contains(const Subspace& s) const { return index_of(s) != npos; }

std::size_t Packing::index_of(const Subspace& s) const {
    auto it = by_hash_.find(s.hash());
    if (it == by_hash_.end()) return npos;
    for (std::size_t j : it->second)
        if (members_[j] == s) return j;
    return npos;
}

const PairStats& Packing::stats(int threads) const {
    std::lock_guard<std::mutex> lock(stats_mutex);
    if (!stats_) {
        if (members_.size() < 2) throw error("packing: need at least 2 subspaces for statistics");
        stats_ = std::make_shared<const PairStats>(pair_sweep_parallel(members_, threads));
    }
    return *stats_;
}

VerificationReport Packing::report(int threads) const {
    const PairStats& st = stats(threads);
    VerificationReport rep("packing G(" + std::to_string(m_) + "," + std::to_string(n_) +
                           "), N=" + std::to_string(members_.size()));
    rep.note("count", std::to_string(members_.size()));
    rep.note("min_d2", st.min_d2.str());
    {
        std::string h;
        for (const auto& [d2, cnt] : st.histogram)
            h += (h.empty() ? "" : ", ") + d2.str() + ": " + std::to_string(cnt);
        rep.note("histogram", "{" + h + "}");
    }
    Fraction bound = rankin_bound(m_, n_);
    rep.note("rankin_bound", bound.str());
    Fraction min(st.min_d2);
    rep.check("min distance within Rankin bound", min <= bound,
              min.str() + " vs " + bound.str());
    if (min == bound)
        rep.note("meets_rankin_bound", "true");
    else {
        rep.note("meets_rankin_bound", "false");
        rep.note("bound_deficit", (bound - min).str());
    }
    auto applies = bound_applicability(m_, n_, BigInt(members_.size()));
    rep.note("bound_applicable", applies.applicable ? "true" : "false");
    rep.note("bound_equality_possible", applies.equality_possible ? "true" : "false");
    return rep;
}

}  // namespace grasspack
