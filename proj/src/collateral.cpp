#include "xva/collateral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xva {

void NettingHierarchy::bind(const std::vector<Deal>& deals) {
    std::set<std::string> ns_ids;
    for (const auto& ns : netting_sets)
        if (!ns_ids.insert(ns.id).second)
            throw std::invalid_argument("NettingHierarchy: duplicate netting set '" + ns.id + "'");

    auto deal_by_id = [&](const std::string& id) -> const Deal& {
        for (const auto& d : deals)
            if (d.id == id)
                return d;
        throw std::invalid_argument("NettingHierarchy: unknown deal id '" + id + "'");
    };

    // deals carrying a csa_id join that CSA's perimeter
    for (const auto& d : deals) {
        if (!ns_ids.count(d.netting_set_id))
            throw std::invalid_argument("NettingHierarchy: deal '" + d.id +
                                        "' references unknown netting set '" + d.netting_set_id +
                                        "'");
        if (d.csa_id.empty())
            continue;
        bool found = false;
        for (auto& ns : netting_sets) {
            if (ns.id != d.netting_set_id)
                continue;
            for (auto& csa : ns.csas) {
                if (csa.id != d.csa_id)
                    continue;
                found = true;
                if (std::find(csa.deal_ids.begin(), csa.deal_ids.end(), d.id) == csa.deal_ids.end())
                    csa.deal_ids.push_back(d.id);
            }
        }
        if (!found)
            throw std::invalid_argument("NettingHierarchy: deal '" + d.id +
                                        "' references unknown CSA '" + d.csa_id +
                                        "' in netting set '" + d.netting_set_id + "'");
    }

    std::set<std::string> assigned;
    for (const auto& ns : netting_sets) {
        std::set<std::string> csa_ids;
        for (const auto& csa : ns.csas) {
            if (!csa_ids.insert(csa.id).second)
                throw std::invalid_argument("NettingHierarchy: duplicate CSA '" + csa.id +
                                            "' in netting set '" + ns.id + "'");
            if (csa.threshold_bank < 0.0 || csa.threshold_cpty < 0.0)
                throw std::invalid_argument("NettingHierarchy: negative threshold on CSA '" +
                                            csa.id + "'");
            for (const auto& did : csa.deal_ids) {
                const Deal& d = deal_by_id(did);
                if (d.netting_set_id != ns.id)
                    throw std::invalid_argument("NettingHierarchy: deal '" + did +
                                                "' assigned to CSA '" + csa.id +
                                                "' outside its netting set");
                if (!assigned.insert(did).second)
                    throw std::invalid_argument("NettingHierarchy: deal '" + did +
                                                "' mapped to more than one CSA");
            }
        }
        for (const auto& did : ns.uncovered_deal_ids) {
            const Deal& d = deal_by_id(did);
            if (d.netting_set_id != ns.id)
                throw std::invalid_argument("NettingHierarchy: uncovered deal '" + did +
                                            "' listed outside its netting set");
            if (assigned.count(did))
                throw std::invalid_argument("NettingHierarchy: deal '" + did +
                                            "' both in a CSA and uncovered");
        }
    }

    // deals in no CSA are uncovered
    for (const auto& d : deals) {
        if (assigned.count(d.id))
            continue;
        for (auto& ns : netting_sets) {
            if (ns.id != d.netting_set_id)
                continue;
            if (std::find(ns.uncovered_deal_ids.begin(), ns.uncovered_deal_ids.end(), d.id) ==
                ns.uncovered_deal_ids.end())
                ns.uncovered_deal_ids.push_back(d.id);
        }
    }
}

const NettingSet& NettingHierarchy::find(const std::string& id) const {
    for (const auto& ns : netting_sets)
        if (ns.id == id)
            return ns;
    throw std::invalid_argument("NettingHierarchy: unknown netting set '" + id + "'");
}

double csa_margin(CsaMode mode, double v, double threshold_bank, double threshold_cpty) {
    switch (mode) {
    case CsaMode::bilateral_full:
        return v;
    case CsaMode::unilateral_counterparty_posts:
        return std::max(v, 0.0);
    case CsaMode::unilateral_bank_posts:
        return std::min(v, 0.0);
    case CsaMode::threshold:
        return std::max(v - threshold_cpty, 0.0) + std::min(v + threshold_bank, 0.0);
    }
    return v;
}

std::vector<double> margin_paths(const ScenarioCube& cube, const CSATerms& csa) {
    std::size_t n = cube.grid.size();
    std::vector<std::size_t> deal_idx;
    deal_idx.reserve(csa.deal_ids.size());
    for (const auto& id : csa.deal_ids)
        deal_idx.push_back(cube.deal_index(id));

    std::vector<double> margin(cube.n_paths * n, 0.0);
    for (std::size_t p = 0; p < cube.n_paths; ++p) {
        for (std::size_t j = 0; j < n; ++j) {
            double netted = 0.0;
            for (std::size_t di : deal_idx)
                netted += cube.values[di][p * n + j];
            margin[p * n + j] = csa_margin(csa.mode, netted, csa.threshold_bank, csa.threshold_cpty);
        }
    }
    return margin;
}

FundingPositions funding_positions(const ScenarioCube& cube, const NettingHierarchy& hierarchy) {
    std::size_t n = cube.grid.size();
    std::size_t cells = cube.n_paths * n;

    FundingPositions out;
    out.le_margin.assign(cells, 0.0);
    out.le_funding.assign(cells, 0.0);

    for (const auto& ns : hierarchy.netting_sets) {
        std::vector<double> value(cells, 0.0);
        std::vector<double> margin(cells, 0.0);

        std::vector<std::size_t> ns_deals;
        for (std::size_t di = 0; di < cube.deal_ids.size(); ++di) {
            // netting-set membership is resolved through the hierarchy lists
            bool in_ns = false;
            for (const auto& csa : ns.csas)
                in_ns |= std::find(csa.deal_ids.begin(), csa.deal_ids.end(), cube.deal_ids[di]) !=
                         csa.deal_ids.end();
            in_ns |= std::find(ns.uncovered_deal_ids.begin(), ns.uncovered_deal_ids.end(),
                               cube.deal_ids[di]) != ns.uncovered_deal_ids.end();
            if (in_ns)
                ns_deals.push_back(di);
        }

        for (std::size_t di : ns_deals)
            for (std::size_t c = 0; c < cells; ++c)
                value[c] += cube.values[di][c];

        for (const auto& csa : ns.csas) {
            auto m = margin_paths(cube, csa);
            for (std::size_t c = 0; c < cells; ++c)
                margin[c] += m[c];
        }

        std::vector<double> funding(cells);
        for (std::size_t c = 0; c < cells; ++c)
            funding[c] = value[c] - margin[c];

        for (std::size_t c = 0; c < cells; ++c) {
            out.le_margin[c] += margin[c];
            out.le_funding[c] += funding[c];
        }
        out.netting_set_ids.push_back(ns.id);
        out.value.push_back(std::move(value));
        out.margin.push_back(std::move(margin));
        out.funding.push_back(std::move(funding));
    }
    return out;
}

} // namespace xva
