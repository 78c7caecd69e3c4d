#include "operadkit/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace operadkit {

int GeneratorSet::add(const std::string& id, int arity, int degree, int rank)
{
    if (arity < 1)
        throw std::invalid_argument("generator arity must be positive");
    if (index_of(id) >= 0)
        throw std::invalid_argument("duplicate generator id: " + id);
    GeneratorSymbol s;
    s.id = id;
    s.arity = arity;
    s.degree = degree;
    s.rank = rank >= 0 ? rank : size();
    symbols_.push_back(std::move(s));
    return size() - 1;
}

const GeneratorSymbol& GeneratorSet::operator[](int i) const
{
    if (i < 0 || i >= size())
        throw std::out_of_range("generator index out of range");
    return symbols_[static_cast<size_t>(i)];
}

int GeneratorSet::index_of(const std::string& id) const
{
    for (int i = 0; i < size(); ++i)
        if (symbols_[static_cast<size_t>(i)].id == id)
            return i;
    return -1;
}

TreeMonomial identity_tree()
{
    return TreeMonomial{{TreeMonomial::kLeaf}};
}

TreeMonomial corolla(int gen, const GeneratorSet& gens)
{
    TreeMonomial t;
    t.code.push_back(gen);
    for (int i = 0; i < gens[gen].arity; ++i)
        t.code.push_back(TreeMonomial::kLeaf);
    return t;
}

bool is_identity(const TreeMonomial& t)
{
    return t.code.size() == 1 && t.code[0] == TreeMonomial::kLeaf;
}

namespace {

// Walks one subtree starting at pos; returns one past its end, or -1 when the
// code is malformed.
int walk_subtree(const std::vector<int>& code, const GeneratorSet& gens, int pos)
{
    if (pos < 0 || pos >= static_cast<int>(code.size()))
        return -1;
    int need = 1;
    int i = pos;
    while (need > 0) {
        if (i >= static_cast<int>(code.size()))
            return -1;
        const int entry = code[i];
        if (entry == TreeMonomial::kLeaf)
            need -= 1;
        else if (entry >= 0 && entry < gens.size())
            need += gens[entry].arity - 1;
        else
            return -1;
        ++i;
    }
    return i;
}

}  // namespace

bool valid_tree(const TreeMonomial& t, const GeneratorSet& gens)
{
    return walk_subtree(t.code, gens, 0) == static_cast<int>(t.code.size());
}

int tree_arity(const TreeMonomial& t, const GeneratorSet& gens)
{
    if (!valid_tree(t, gens))
        throw std::invalid_argument("malformed tree code");
    return static_cast<int>(
        std::count(t.code.begin(), t.code.end(), TreeMonomial::kLeaf));
}

int tree_weight(const TreeMonomial& t)
{
    return static_cast<int>(t.code.size())
        - static_cast<int>(
            std::count(t.code.begin(), t.code.end(), TreeMonomial::kLeaf));
}

int tree_degree(const TreeMonomial& t, const GeneratorSet& gens)
{
    int total = 0;
    for (int entry : t.code)
        if (entry != TreeMonomial::kLeaf)
            total += gens[entry].degree;
    return total;
}

int subtree_end(const TreeMonomial& t, const GeneratorSet& gens, int pos)
{
    const int end = walk_subtree(t.code, gens, pos);
    if (end < 0)
        throw std::invalid_argument("malformed tree code or bad position");
    return end;
}

std::vector<int> child_starts(const TreeMonomial& t, const GeneratorSet& gens, int pos)
{
    if (pos < 0 || pos >= static_cast<int>(t.code.size())
        || t.code[pos] == TreeMonomial::kLeaf)
        throw std::invalid_argument("child_starts: not an internal vertex");
    std::vector<int> starts;
    int cursor = pos + 1;
    for (int c = 0; c < gens[t.code[pos]].arity; ++c) {
        starts.push_back(cursor);
        cursor = subtree_end(t, gens, cursor);
    }
    return starts;
}

int leaf_position(const TreeMonomial& t, int slot)
{
    if (slot >= 0) {
        int seen = 0;
        for (int i = 0; i < static_cast<int>(t.code.size()); ++i)
            if (t.code[i] == TreeMonomial::kLeaf && seen++ == slot)
                return i;
    }
    throw std::out_of_range("leaf slot out of range");
}

TreeMonomial graft(const TreeMonomial& outer, int slot, const TreeMonomial& inner,
                   const GeneratorSet& gens)
{
    if (!valid_tree(outer, gens) || !valid_tree(inner, gens))
        throw std::invalid_argument("graft: malformed tree code");
    const int pos = leaf_position(outer, slot);
    TreeMonomial out;
    out.code.reserve(outer.code.size() + inner.code.size() - 1);
    out.code.insert(out.code.end(), outer.code.begin(), outer.code.begin() + pos);
    out.code.insert(out.code.end(), inner.code.begin(), inner.code.end());
    out.code.insert(out.code.end(), outer.code.begin() + pos + 1, outer.code.end());
    return out;
}

TreeMonomial substitute(const TreeMonomial& pattern,
                        const std::vector<TreeMonomial>& args,
                        const GeneratorSet& gens)
{
    if (static_cast<int>(args.size()) != tree_arity(pattern, gens))
        throw std::invalid_argument("substitute: argument count != pattern arity");
    TreeMonomial out;
    size_t next_arg = 0;
    for (int entry : pattern.code) {
        if (entry == TreeMonomial::kLeaf) {
            const auto& arg = args[next_arg++].code;
            out.code.insert(out.code.end(), arg.begin(), arg.end());
        }
        else {
            out.code.push_back(entry);
        }
    }
    return out;
}

std::vector<std::vector<int>> leaf_paths(const TreeMonomial& t, const GeneratorSet& gens)
{
    if (!valid_tree(t, gens))
        throw std::invalid_argument("malformed tree code");
    std::vector<std::vector<int>> paths;
    std::vector<int> stack;          // labels on the path to the cursor
    std::vector<int> remaining;      // children still to visit per stack entry
    for (int entry : t.code) {
        if (entry == TreeMonomial::kLeaf) {
            paths.push_back(stack);
            while (!remaining.empty() && --remaining.back() == 0) {
                remaining.pop_back();
                stack.pop_back();
            }
        }
        else {
            stack.push_back(entry);
            remaining.push_back(gens[entry].arity);
        }
    }
    return paths;
}

int path_lex_compare(const TreeMonomial& a, const TreeMonomial& b,
                     const GeneratorSet& gens)
{
    if (tree_arity(a, gens) != tree_arity(b, gens))
        throw std::invalid_argument("path_lex_compare: arity mismatch");
    const auto pa = leaf_paths(a, gens);
    const auto pb = leaf_paths(b, gens);
    for (size_t leaf = 0; leaf < pa.size(); ++leaf) {
        const auto& wa = pa[leaf];
        const auto& wb = pb[leaf];
        if (wa.size() != wb.size())
            return wa.size() > wb.size() ? 1 : -1;
        for (size_t i = 0; i < wa.size(); ++i) {
            const int ra = gens[wa[i]].rank;
            const int rb = gens[wb[i]].rank;
            if (ra != rb)
                return ra < rb ? 1 : -1;  // smaller rank = greater symbol
        }
    }
    if (a.code != b.code)  // unreachable for well-formed inputs; keeps totality
        return a.code < b.code ? -1 : 1;
    return 0;
}

std::vector<TreeMonomial> enumerate_monomials(const GeneratorSet& gens, int arity)
{
    if (arity < 1)
        return {};
    if (arity == 1)
        return {identity_tree()};
    std::vector<TreeMonomial> out;
    for (int g = 0; g < gens.size(); ++g) {
        const int k = gens[g].arity;
        if (k < 2 || k > arity)
            continue;
        // Split arity into k ordered positive parts and recurse.
        std::vector<int> parts(static_cast<size_t>(k), 1);
        parts[0] = arity - k + 1;
        while (true) {
            std::vector<std::vector<TreeMonomial>> child_choices;
            for (int part : parts)
                child_choices.push_back(enumerate_monomials(gens, part));
            std::vector<size_t> idx(static_cast<size_t>(k), 0);
            while (true) {
                std::vector<TreeMonomial> args;
                for (int c = 0; c < k; ++c)
                    args.push_back(child_choices[static_cast<size_t>(c)][idx[static_cast<size_t>(c)]]);
                out.push_back(substitute(corolla(g, gens), args, gens));
                int c = k - 1;
                while (c >= 0 && ++idx[static_cast<size_t>(c)] == child_choices[static_cast<size_t>(c)].size()) {
                    idx[static_cast<size_t>(c)] = 0;
                    --c;
                }
                if (c < 0)
                    break;
            }
            // Next composition: move one unit rightwards (colex successor).
            int j = k - 2;
            while (j >= 0 && parts[static_cast<size_t>(j)] == 1)
                --j;
            if (j < 0)
                break;
            parts[static_cast<size_t>(j)] -= 1;
            int tail = 1;
            for (int c = j + 1; c < k; ++c) {
                tail += parts[static_cast<size_t>(c)] - 1;
                parts[static_cast<size_t>(c)] = 1;
            }
            parts[static_cast<size_t>(j + 1)] = tail + 1;
        }
    }
    return out;
}

std::vector<int> encode(const TreeMonomial& t)
{
    return t.code;
}

TreeMonomial decode(const std::vector<int>& code, const GeneratorSet& gens)
{
    TreeMonomial t{code};
    if (!valid_tree(t, gens))
        throw std::invalid_argument("decode: malformed tree code");
    return t;
}

namespace {

std::string render_at(const TreeMonomial& t, const GeneratorSet& gens, int pos,
                      int& next_leaf, bool parenthesize)
{
    if (t.code[pos] == TreeMonomial::kLeaf)
        return "x" + std::to_string(++next_leaf);
    const GeneratorSymbol& g = gens[t.code[pos]];
    const std::vector<int> kids = child_starts(t, gens, pos);
    if (g.arity == 2) {
        std::string body = render_at(t, gens, kids[0], next_leaf, true);
        body += g.id;
        body += render_at(t, gens, kids[1], next_leaf, true);
        return parenthesize ? "(" + body + ")" : body;
    }
    std::string body = g.id + "(";
    for (size_t c = 0; c < kids.size(); ++c) {
        if (c > 0)
            body += ",";
        body += render_at(t, gens, kids[c], next_leaf, false);
    }
    return body + ")";
}

}  // namespace

std::string render_tree(const TreeMonomial& t, const GeneratorSet& gens)
{
    if (!valid_tree(t, gens))
        throw std::invalid_argument("render_tree: malformed tree code");
    int next_leaf = 0;
    return render_at(t, gens, 0, next_leaf, false);
}

}  // namespace operadkit
