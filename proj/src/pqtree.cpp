#include "lindiag/pqtree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "lindiag/io.hpp"

namespace lindiag {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void collect_leaves(const PQNode& nd, std::vector<int>& out, int& max_degree) {
    if (nd.kind() == PQNode::Kind::leaf) {
        out.push_back(nd.label());
        return;
    }
    max_degree = std::max(max_degree, static_cast<int>(nd.children().size()));
    for (const auto& c : nd.children()) collect_leaves(c, out, max_degree);
}

std::int64_t mul_clamp(std::int64_t a, std::int64_t b, std::int64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap + 1;
    return a * b;
}

std::int64_t count_perms(const PQNode& nd, std::int64_t cap) {
    if (nd.kind() == PQNode::Kind::leaf) return 1;
    std::int64_t total = 1;
    for (const auto& c : nd.children()) {
        total = mul_clamp(total, count_perms(c, cap), cap);
        if (total > cap) return total;
    }
    if (nd.kind() == PQNode::Kind::p_node) {
        for (std::int64_t i = 2; i <= static_cast<std::int64_t>(nd.children().size()); ++i) {
            total = mul_clamp(total, i, cap);
            if (total > cap) return total;
        }
    } else {
        total = mul_clamp(total, 2, cap);
    }
    return total;
}

std::vector<std::vector<int>> enum_node(const PQNode& nd) {
    if (nd.kind() == PQNode::Kind::leaf) return {{nd.label()}};
    std::vector<std::vector<std::vector<int>>> kids;
    kids.reserve(nd.children().size());
    for (const auto& c : nd.children()) kids.push_back(enum_node(c));
    const int k = static_cast<int>(kids.size());

    auto concat_for = [&](const std::vector<int>& child_order, std::vector<std::vector<int>>& out) {
        std::vector<std::vector<int>> acc(1);
        for (const int idx : child_order) {
            std::vector<std::vector<int>> next;
            next.reserve(acc.size() * kids[static_cast<std::size_t>(idx)].size());
            for (const auto& prefix : acc) {
                for (const auto& middle : kids[static_cast<std::size_t>(idx)]) {
                    std::vector<int> seq = prefix;
                    seq.insert(seq.end(), middle.begin(), middle.end());
                    next.push_back(std::move(seq));
                }
            }
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    };

    std::vector<std::vector<int>> out;
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    if (nd.kind() == PQNode::Kind::p_node) {
        do {
            concat_for(order, out);
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        concat_for(order, out);
        std::reverse(order.begin(), order.end());
        concat_for(order, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Constrained shortest-tour DP. Each node stores, for every ordered pair of
// leaves (entry, exit) of its subtree, the cheapest path that visits all its
// leaves from entry to exit while respecting the subtree's constraints.

struct DpNode {
    const PQNode* node = nullptr;
    std::vector<DpNode> children;
    std::vector<int> leaves;        // global vertex ids, subtree order
    std::vector<int> child_offset;  // local offset of each child's leaf range
    std::vector<int> child_of;      // local leaf index -> child index
    std::vector<std::int64_t> cost;

    int size() const { return static_cast<int>(leaves.size()); }
    std::int64_t get(int s, int t) const {
        return cost[static_cast<std::size_t>(s) * static_cast<std::size_t>(size()) +
                    static_cast<std::size_t>(t)];
    }
};

using Table = std::vector<std::int64_t>;

// Left-to-right chain over an ordered child list: F[i][s][t] = cheapest path
// covering children 0..i entering at leaf s of child 0 and exiting at leaf t
// of child i.
std::vector<Table> chain_tables(const std::vector<const DpNode*>& ch, const TspInstance& inst) {
    const int n0 = ch[0]->size();
    std::vector<Table> f(ch.size());
    f[0] = ch[0]->cost;
    for (std::size_t i = 1; i < ch.size(); ++i) {
        const DpNode& prev = *ch[i - 1];
        const DpNode& cur = *ch[i];
        const int np = prev.size();
        const int nc = cur.size();
        Table out(static_cast<std::size_t>(n0) * static_cast<std::size_t>(nc), kInf);
        for (int s = 0; s < n0; ++s) {
            for (int e = 0; e < np; ++e) {
                const std::int64_t base = f[i - 1][static_cast<std::size_t>(s) * np + e];
                if (base >= kInf) continue;
                for (int s2 = 0; s2 < nc; ++s2) {
                    const std::int64_t mid = base + inst.d(prev.leaves[static_cast<std::size_t>(e)],
                                                           cur.leaves[static_cast<std::size_t>(s2)]);
                    for (int t = 0; t < nc; ++t) {
                        const std::int64_t inner = cur.cost[static_cast<std::size_t>(s2) * nc + t];
                        if (inner >= kInf) continue;
                        auto& slot = out[static_cast<std::size_t>(s) * nc + t];
                        if (mid + inner < slot) slot = mid + inner;
                    }
                }
            }
        }
        f[i] = std::move(out);
    }
    return f;
}

struct PChoice {
    std::vector<int> prev_exit;       // node-local leaf index
    std::vector<int> entry_in_child;  // child-local leaf index
};

// Subset DP over a P-node's children for one fixed entry leaf; g[mask][e] is
// the cheapest path that starts at the entry, covers exactly the children in
// mask, and currently ends at node-local leaf e.
Table pnode_dp(const DpNode& nd, int s_local, const TspInstance& inst, PChoice* rec) {
    const int nv = nd.size();
    const int k = static_cast<int>(nd.children.size());
    const std::size_t masks = std::size_t{1} << k;
    Table g(masks * static_cast<std::size_t>(nv), kInf);
    if (rec) {
        rec->prev_exit.assign(masks * static_cast<std::size_t>(nv), -1);
        rec->entry_in_child.assign(masks * static_cast<std::size_t>(nv), -1);
    }
    const int a = nd.child_of[static_cast<std::size_t>(s_local)];
    const int s_in = s_local - nd.child_offset[static_cast<std::size_t>(a)];
    const DpNode& ca = nd.children[static_cast<std::size_t>(a)];
    for (int t = 0; t < ca.size(); ++t) {
        g[(std::size_t{1} << a) * static_cast<std::size_t>(nv) +
          static_cast<std::size_t>(nd.child_offset[static_cast<std::size_t>(a)] + t)] =
            ca.cost[static_cast<std::size_t>(s_in) * ca.size() + t];
    }
    for (std::size_t mask = 1; mask < masks; ++mask) {
        if (!((mask >> a) & 1)) continue;
        for (int e = 0; e < nv; ++e) {
            const std::int64_t base = g[mask * static_cast<std::size_t>(nv) + static_cast<std::size_t>(e)];
            if (base >= kInf) continue;
            for (int c = 0; c < k; ++c) {
                if ((mask >> c) & 1) continue;
                const DpNode& cc = nd.children[static_cast<std::size_t>(c)];
                const std::size_t nm = mask | (std::size_t{1} << c);
                const int off = nd.child_offset[static_cast<std::size_t>(c)];
                for (int s2 = 0; s2 < cc.size(); ++s2) {
                    const std::int64_t mid = base + inst.d(nd.leaves[static_cast<std::size_t>(e)],
                                                           cc.leaves[static_cast<std::size_t>(s2)]);
                    for (int t2 = 0; t2 < cc.size(); ++t2) {
                        const std::int64_t inner = cc.cost[static_cast<std::size_t>(s2) * cc.size() + t2];
                        if (inner >= kInf) continue;
                        const std::size_t slot = nm * static_cast<std::size_t>(nv) +
                                                 static_cast<std::size_t>(off + t2);
                        if (mid + inner < g[slot]) {
                            g[slot] = mid + inner;
                            if (rec) {
                                rec->prev_exit[slot] = e;
                                rec->entry_in_child[slot] = s2;
                            }
                        }
                    }
                }
            }
        }
    }
    return g;
}

DpNode build_dp(const PQNode& nd, const TspInstance& inst) {
    DpNode out;
    out.node = &nd;
    if (nd.kind() == PQNode::Kind::leaf) {
        out.leaves = {nd.label()};
        out.cost = {0};
        return out;
    }
    for (const auto& c : nd.children()) out.children.push_back(build_dp(c, inst));
    for (const auto& c : out.children) {
        out.child_offset.push_back(out.size());
        for (const int leaf : c.leaves) {
            out.child_of.push_back(static_cast<int>(out.child_offset.size()) - 1);
            out.leaves.push_back(leaf);
        }
    }
    const int nv = out.size();
    out.cost.assign(static_cast<std::size_t>(nv) * static_cast<std::size_t>(nv), kInf);
    auto merge_chain = [&](const std::vector<const DpNode*>& ch, int entry_off, int exit_off) {
        const auto f = chain_tables(ch, inst);
        const int n0 = ch.front()->size();
        const int nl = ch.back()->size();
        for (int s = 0; s < n0; ++s) {
            for (int t = 0; t < nl; ++t) {
                const std::int64_t v = f.back()[static_cast<std::size_t>(s) * nl + t];
                auto& slot = out.cost[static_cast<std::size_t>(entry_off + s) * nv + (exit_off + t)];
                if (v < slot) slot = v;
            }
        }
    };
    if (nd.kind() == PQNode::Kind::q_node) {
        std::vector<const DpNode*> fwd;
        for (const auto& c : out.children) fwd.push_back(&c);
        merge_chain(fwd, out.child_offset.front(), out.child_offset.back());
        std::vector<const DpNode*> bwd(fwd.rbegin(), fwd.rend());
        merge_chain(bwd, out.child_offset.back(), out.child_offset.front());
    } else {
        const std::size_t full = (std::size_t{1} << out.children.size()) - 1;
        for (int s = 0; s < nv; ++s) {
            const Table g = pnode_dp(out, s, inst, nullptr);
            for (int t = 0; t < nv; ++t) {
                out.cost[static_cast<std::size_t>(s) * nv + t] =
                    g[full * static_cast<std::size_t>(nv) + static_cast<std::size_t>(t)];
            }
        }
    }
    return out;
}

std::vector<int> reconstruct(const DpNode& nd, int s, int t, const TspInstance& inst);

// Recovers per-child (entry, exit) pairs along one direction of a chain and
// stitches the child paths together.
std::vector<int> reconstruct_chain(const std::vector<const DpNode*>& ch, int s_in, int t_in,
                                   const TspInstance& inst) {
    const auto f = chain_tables(ch, inst);
    const int k = static_cast<int>(ch.size());
    std::vector<std::pair<int, int>> io(static_cast<std::size_t>(k), {-1, -1});
    io[static_cast<std::size_t>(k - 1)].second = t_in;
    for (int i = k - 1; i >= 1; --i) {
        const DpNode& prev = *ch[static_cast<std::size_t>(i - 1)];
        const DpNode& cur = *ch[static_cast<std::size_t>(i)];
        const int np = prev.size();
        const int nc = cur.size();
        const int exit_i = io[static_cast<std::size_t>(i)].second;
        const std::int64_t target = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(s_in) * nc + exit_i];
        bool found = false;
        for (int e = 0; e < np && !found; ++e) {
            const std::int64_t base = f[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s_in) * np + e];
            if (base >= kInf) continue;
            for (int s2 = 0; s2 < nc && !found; ++s2) {
                const std::int64_t inner = cur.cost[static_cast<std::size_t>(s2) * nc + exit_i];
                if (inner >= kInf) continue;
                if (base + inst.d(prev.leaves[static_cast<std::size_t>(e)],
                                  cur.leaves[static_cast<std::size_t>(s2)]) + inner == target) {
                    io[static_cast<std::size_t>(i)].first = s2;
                    io[static_cast<std::size_t>(i - 1)].second = e;
                    found = true;
                }
            }
        }
    }
    io[0].first = s_in;
    std::vector<int> seq;
    for (int i = 0; i < k; ++i) {
        const auto part = reconstruct(*ch[static_cast<std::size_t>(i)], io[static_cast<std::size_t>(i)].first,
                                      io[static_cast<std::size_t>(i)].second, inst);
        seq.insert(seq.end(), part.begin(), part.end());
    }
    return seq;
}

std::vector<int> reconstruct(const DpNode& nd, int s, int t, const TspInstance& inst) {
    if (nd.node->kind() == PQNode::Kind::leaf) return {nd.leaves.front()};
    const int nv = nd.size();
    if (nd.node->kind() == PQNode::Kind::q_node) {
        std::vector<const DpNode*> fwd;
        for (const auto& c : nd.children) fwd.push_back(&c);
        const int off0 = nd.child_offset.front();
        const int offl = nd.child_offset.back();
        const int n0 = fwd.front()->size();
        const int nl = fwd.back()->size();
        if (s >= off0 && s < off0 + n0 && t >= offl && t < offl + nl) {
            const auto f = chain_tables(fwd, inst);
            if (f.back()[static_cast<std::size_t>(s - off0) * nl + (t - offl)] == nd.get(s, t)) {
                return reconstruct_chain(fwd, s - off0, t - offl, inst);
            }
        }
        std::vector<const DpNode*> bwd(fwd.rbegin(), fwd.rend());
        return reconstruct_chain(bwd, s - offl, t - off0, inst);
    }
    // P-node: re-run the subset DP for this entry, recording choices.
    PChoice rec;
    const Table g = pnode_dp(nd, s, inst, &rec);
    const int k = static_cast<int>(nd.children.size());
    const int a = nd.child_of[static_cast<std::size_t>(s)];
    std::vector<std::tuple<int, int, int>> segments;  // (child, entry local, exit local)
    std::size_t mask = (std::size_t{1} << k) - 1;
    int e = t;
    while (mask != (std::size_t{1} << a)) {
        const std::size_t slot = mask * static_cast<std::size_t>(nv) + static_cast<std::size_t>(e);
        const int c = nd.child_of[static_cast<std::size_t>(e)];
        segments.emplace_back(c, rec.entry_in_child[slot],
                              e - nd.child_offset[static_cast<std::size_t>(c)]);
        const int prev = rec.prev_exit[slot];
        mask ^= std::size_t{1} << c;
        e = prev;
    }
    segments.emplace_back(a, s - nd.child_offset[static_cast<std::size_t>(a)],
                          e - nd.child_offset[static_cast<std::size_t>(a)]);
    std::reverse(segments.begin(), segments.end());
    std::vector<int> seq;
    for (const auto& [c, s_in, t_in] : segments) {
        const auto part = reconstruct(nd.children[static_cast<std::size_t>(c)], s_in, t_in, inst);
        seq.insert(seq.end(), part.begin(), part.end());
    }
    return seq;
}

}  // namespace

PQNode PQNode::leaf(int label) {
    if (label < 0) throw std::invalid_argument("leaf labels must be non-negative");
    PQNode n;
    n.kind_ = Kind::leaf;
    n.label_ = label;
    return n;
}

PQNode PQNode::p(std::vector<PQNode> children) {
    if (children.size() < 2) throw std::invalid_argument("internal node needs at least 2 children");
    PQNode n;
    n.kind_ = Kind::p_node;
    n.children_ = std::move(children);
    return n;
}

PQNode PQNode::q(std::vector<PQNode> children) {
    if (children.size() < 2) throw std::invalid_argument("internal node needs at least 2 children");
    if (children.size() == 2) return p(std::move(children));
    PQNode n;
    n.kind_ = Kind::q_node;
    n.children_ = std::move(children);
    return n;
}

PQTree::PQTree(PQNode root) : root_(std::move(root)) {
    collect_leaves(root_, leaves_, max_degree_);
    std::vector<int> sorted = leaves_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("leaf labels must be pairwise distinct");
    }
}

std::vector<std::vector<int>> permutations(const PQTree& t, std::int64_t cap) {
    if (count_perms(t.root(), cap) > cap) {
        throw std::length_error("tree admits more permutations than the enumeration cap");
    }
    auto out = enum_node(t.root());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains(const PQTree& t, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != t.leaf_count()) {
        throw std::invalid_argument("permutation length does not match leaf count");
    }
    std::vector<int> tree_leaves = t.leaves();
    std::vector<int> perm_sorted(perm.begin(), perm.end());
    std::sort(tree_leaves.begin(), tree_leaves.end());
    std::sort(perm_sorted.begin(), perm_sorted.end());
    if (tree_leaves != perm_sorted) {
        throw std::invalid_argument("permutation values do not match the tree's leaf set");
    }
    const int max_label = tree_leaves.empty() ? 0 : tree_leaves.back();
    std::vector<int> pos(static_cast<std::size_t>(max_label) + 1, -1);
    for (std::size_t k = 0; k < perm.size(); ++k) pos[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);

    struct Range {
        int lo, hi, count;
        bool ok;
    };
    auto check = [&](auto&& self, const PQNode& nd) -> Range {
        if (nd.kind() == PQNode::Kind::leaf) {
            const int p = pos[static_cast<std::size_t>(nd.label())];
            return {p, p, 1, true};
        }
        std::vector<Range> child_ranges;
        int lo = std::numeric_limits<int>::max();
        int hi = -1;
        int count = 0;
        for (const auto& c : nd.children()) {
            const Range r = self(self, c);
            if (!r.ok) return {0, 0, 0, false};
            child_ranges.push_back(r);
            lo = std::min(lo, r.lo);
            hi = std::max(hi, r.hi);
            count += r.count;
        }
        if (hi - lo + 1 != count) return {0, 0, 0, false};
        if (nd.kind() == PQNode::Kind::q_node) {
            bool forward = true, backward = true;
            for (std::size_t i = 0; i + 1 < child_ranges.size(); ++i) {
                if (child_ranges[i].hi + 1 != child_ranges[i + 1].lo) forward = false;
                if (child_ranges[i + 1].hi + 1 != child_ranges[i].lo) backward = false;
            }
            if (!forward && !backward) return {0, 0, 0, false};
        }
        return {lo, hi, count, true};
    };
    return check(check, t.root()).ok;
}

ConstrainedResult constrained_min_cons1(const BinaryMatrix& a, const PQTree& t,
                                        const tsp::SolverConfig& cfg) {
    const int n = a.cols();
    if (t.leaf_count() != n) {
        throw std::invalid_argument("tree leaf count must equal the matrix column count");
    }
    std::vector<int> sorted = t.leaves();
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i) {
            throw std::invalid_argument("tree leaves must be exactly the column indices");
        }
    }
    if (t.max_degree() > cfg.pq_degree_cap) {
        throw std::invalid_argument("tree degree exceeds the configured cap");
    }
    const TspInstance inst = build_plain(a);
    const PQNode rooted = PQNode::p({PQNode::leaf(n), t.root()});
    const DpNode dp = build_dp(rooted, inst);
    const int nv = dp.size();
    std::int64_t best = kInf;
    int bs = -1, bt = -1;
    for (int s = 0; s < nv; ++s) {
        for (int tt = 0; tt < nv; ++tt) {
            if (s == tt) continue;
            const std::int64_t path = dp.get(s, tt);
            if (path >= kInf) continue;
            const std::int64_t total = path + inst.d(dp.leaves[static_cast<std::size_t>(tt)],
                                                     dp.leaves[static_cast<std::size_t>(s)]);
            if (total < best) {
                best = total;
                bs = s;
                bt = tt;
            }
        }
    }
    const std::vector<int> tour = reconstruct(dp, bs, bt, inst);
    ColumnPermutation order = tour_to_permutation(tour, inst);
    const std::int64_t value = cons1(apply_permutation(a, order));
    return {std::move(order), value};
}

namespace {

struct PqParser {
    std::string_view s;
    std::size_t i = 0;
    std::unordered_set<int> seen{};

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw ParseError(msg + " at position " + std::to_string(pos + 1));
    }

    PQNode parse_node() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input", i);
        const char c = s[i];
        if (c == '(' || c == '[') {
            const std::size_t open_pos = i;
            const char close = c == '(' ? ')' : ']';
            ++i;
            std::vector<PQNode> children;
            while (true) {
                skip_ws();
                if (i >= s.size()) fail("missing closing bracket for node", open_pos);
                if (s[i] == close) {
                    ++i;
                    break;
                }
                if (s[i] == ')' || s[i] == ']') fail(std::string("mismatched '") + s[i] + "'", i);
                children.push_back(parse_node());
            }
            if (children.size() < 2) fail("internal node needs at least 2 children", open_pos);
            return c == '(' ? PQNode::p(std::move(children)) : PQNode::q(std::move(children));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            int value = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                value = value * 10 + (s[i] - '0');
                ++i;
            }
            if (!seen.insert(value).second) fail("duplicate leaf " + std::to_string(value), start);
            return PQNode::leaf(value);
        }
        fail(std::string("unexpected character '") + c + "'", i);
    }
};

void node_text(const PQNode& nd, std::string& out) {
    if (nd.kind() == PQNode::Kind::leaf) {
        out += std::to_string(nd.label());
        return;
    }
    out += nd.kind() == PQNode::Kind::p_node ? '(' : '[';
    for (std::size_t i = 0; i < nd.children().size(); ++i) {
        if (i > 0) out += ' ';
        node_text(nd.children()[i], out);
    }
    out += nd.kind() == PQNode::Kind::p_node ? ')' : ']';
}

}  // namespace

PQTree parse_pqtree(std::string_view text) {
    PqParser parser{text};
    PQNode root = parser.parse_node();
    parser.skip_ws();
    if (parser.i < text.size()) parser.fail("trailing input", parser.i);
    return PQTree(std::move(root));
}

std::string to_text(const PQTree& t) {
    std::string out;
    node_text(t.root(), out);
    return out;
}

}  // namespace lindiag
