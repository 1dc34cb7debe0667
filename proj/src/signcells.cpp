#include "preriesz/signcells.hpp"

#include <algorithm>

#include "preriesz/errors.hpp"
#include "preriesz/lp.hpp"

namespace preriesz {

namespace {

struct Search {
    const QMatrix& f;
    std::size_t node_budget;
    LinSystem prefix;
    std::string pattern;
    std::vector<SignCell> cells;

    void expand() {
        if (node_budget-- == 0)
            throw CapacityError("sign cell search exceeded node budget");
        const LPOutcome probe = find_feasible(prefix);
        if (probe.status == LPStatus::Infeasible) return;
        const std::size_t depth = pattern.size();
        if (depth == f.rows()) {
            cells.push_back({pattern, *probe.primal});
            return;
        }
        const QVector row = f.row(depth);
        static constexpr char kSigns[] = {'+', '0', '-'};
        for (char s : kSigns) {
            pattern.push_back(s);
            const std::size_t added = push_sign(row, s);
            expand();
            prefix.rows.resize(prefix.rows.size() - added);
            pattern.pop_back();
        }
    }

    std::size_t push_sign(const QVector& row, char s) {
        switch (s) {
        case '+':
            prefix.rows.push_back({row, Rel::GE, Rat(1)});
            return 1;
        case '0':
            prefix.rows.push_back({row, Rel::EQ, Rat(0)});
            return 1;
        default:
            prefix.rows.push_back({negate(row), Rel::GE, Rat(1)});
            return 1;
        }
    }
};

} // namespace

std::vector<SignCell> sign_cells(const QMatrix& f, const Caps& caps) {
    if (f.rows() > caps.max_functionals)
        throw CapacityError("sign cell enumeration over more rows than the configured cap");
    Search search{f, caps.max_search_nodes, LinSystem{f.cols(), {}}, {}, {}};
    search.expand();
    std::sort(search.cells.begin(), search.cells.end(),
              [](const SignCell& a, const SignCell& b) {
                  auto key = [](char c) { return c == '+' ? 0 : c == '0' ? 1 : 2; };
                  for (std::size_t i = 0; i < a.pattern.size(); ++i)
                      if (a.pattern[i] != b.pattern[i])
                          return key(a.pattern[i]) < key(b.pattern[i]);
                  return false;
              });
    return search.cells;
}

} // namespace preriesz
