#include "operadkit/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace operadkit {

namespace {

using nlohmann::json;

using NameMap = std::map<std::string, BasisRef>;

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw JsonError(std::string("not valid JSON: ") + e.what());
    }
}

void require_object(const json& j, const std::string& what,
                    const std::vector<std::string>& allowed,
                    const std::vector<std::string>& required)
{
    if (!j.is_object())
        throw JsonError(what + " must be a JSON object");
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key())
            == allowed.end())
            throw JsonError("unknown field \"" + item.key() + "\" in "
                            + what);
    }
    for (const std::string& key : required)
        if (!j.contains(key))
            throw JsonError(what + " is missing field \"" + key + "\"");
}

int parse_integer(const std::string& text, const std::string& what)
{
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end)
        throw JsonError(what + " is not an integer: \"" + text + "\"");
    return value;
}

Rational coefficient(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw JsonError(where + " must be a \"num/den\" string");
    try {
        return rational_from_string(j.get<std::string>());
    }
    catch (const std::invalid_argument& e) {
        throw JsonError(where + ": " + e.what());
    }
}

BasisRef resolve(const NameMap& names, const json& j,
                 const std::string& where)
{
    if (!j.is_string())
        throw JsonError(where + " must be a basis name string");
    const std::string name = j.get<std::string>();
    const auto it = names.find(name);
    if (it == names.end())
        throw JsonError(where + " references unknown basis name \"" + name
                        + "\"");
    return it->second;
}

Combination combination_from_json(const json& j, const NameMap& names,
                                  const std::string& where)
{
    if (!j.is_object())
        throw JsonError(where + " must be an object of name -> \"num/den\"");
    Combination out;
    for (const auto& item : j.items()) {
        const auto it = names.find(item.key());
        if (it == names.end())
            throw JsonError(where + " references unknown basis name \""
                            + item.key() + "\"");
        const Rational q =
            coefficient(item.value(), where + " entry \"" + item.key() + "\"");
        if (q != 0)
            out[it->second] = q;
    }
    return out;
}

ChainComplex complex_from_parts(const json& degrees, const json& dlist,
                                NameMap& names)
{
    ChainComplex c;
    if (!degrees.is_object())
        throw JsonError("\"degrees\" must be an object of degree -> names");
    for (const auto& item : degrees.items()) {
        const int degree = parse_integer(item.key(), "\"degrees\" key");
        if (!item.value().is_array())
            throw JsonError("\"degrees\" entry \"" + item.key()
                            + "\" must be an array of names");
        std::vector<std::string> list;
        for (const json& e : item.value()) {
            if (!e.is_string())
                throw JsonError("basis names under \"degrees\" entry \""
                                + item.key() + "\" must be strings");
            list.push_back(e.get<std::string>());
        }
        if (!list.empty())
            c.basis[degree] = std::move(list);
    }
    for (const auto& [degree, list] : c.basis)
        for (int k = 0; k < static_cast<int>(list.size()); ++k)
            if (!names.emplace(list[k], BasisRef{degree, k}).second)
                throw JsonError("duplicate basis name \"" + list[k] + "\"");

    if (!dlist.is_array())
        throw JsonError("\"d\" must be an array of [from, to, \"num/den\"]"
                        " triples");
    std::map<int, RatMatrix> mats;
    for (const json& e : dlist) {
        if (!e.is_array() || e.size() != 3)
            throw JsonError("\"d\" entries must be [from, to, \"num/den\"]"
                            " triples");
        const BasisRef from = resolve(names, e[0], "\"d\" source");
        const BasisRef to = resolve(names, e[1], "\"d\" target");
        if (to.degree != from.degree - 1)
            throw JsonError("\"d\" entry (" + e[0].get<std::string>() + ", "
                            + e[1].get<std::string>()
                            + ") does not drop degree by one");
        const Rational q = coefficient(e[2], "\"d\" coefficient");
        if (q == 0)
            continue;
        auto [it, created] = mats.try_emplace(
            from.degree, dim_in_degree(c, to.degree),
            dim_in_degree(c, from.degree));
        it->second.at(to.index, from.index) += q;
    }
    for (auto& [degree, m] : mats)
        if (!m.is_zero())
            c.d.emplace(degree, std::move(m));
    return c;
}

BilinearOp op_from_json(const json& j, const NameMap& names,
                        const std::string& what)
{
    if (!j.is_array())
        throw JsonError("\"" + what + "\" must be an array of [x, y, result]"
                        " triples");
    BilinearOp op;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw JsonError("\"" + what + "\" entries must be [x, y, result]"
                            " triples");
        const BasisRef x = resolve(names, e[0], "\"" + what + "\" input");
        const BasisRef y = resolve(names, e[1], "\"" + what + "\" input");
        const Combination value =
            combination_from_json(e[2], names, "\"" + what + "\" result");
        auto& slot = op.table[{x, y}];
        slot = combination_sum(slot, value);
        if (slot.empty())
            op.table.erase({x, y});
    }
    return op;
}

std::pair<int, int> parse_op_key(const std::string& key)
{
    const auto bad = [&] {
        return JsonError("bad operation key \"" + key
                         + "\" (expected \"(i,j)\")");
    };
    if (key.size() < 5 || key.front() != '(' || key.back() != ')')
        throw bad();
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw bad();
    int i = 0;
    int j = 0;
    try {
        i = parse_integer(key.substr(1, comma - 1), "operation index");
        j = parse_integer(key.substr(comma + 1, key.size() - comma - 2),
                          "operation index");
    }
    catch (const JsonError&) {
        throw bad();
    }
    if (i < 0 || j < 0 || i + j < 1)
        throw bad();
    return {i, j};
}

json complex_json(const ChainComplex& c)
{
    json degrees = json::object();
    for (const auto& [degree, list] : c.basis)
        if (!list.empty())
            degrees[std::to_string(degree)] = list;
    std::vector<std::tuple<std::string, std::string, std::string>> triples;
    for (const auto& [degree, m] : c.d)
        for (int col = 0; col < m.cols(); ++col)
            for (int row = 0; row < m.rows(); ++row)
                if (m.at(row, col) != 0)
                    triples.emplace_back(
                        basis_name(c, {degree, col}),
                        basis_name(c, {degree - 1, row}),
                        rational_to_string(m.at(row, col)));
    std::sort(triples.begin(), triples.end());
    json dlist = json::array();
    for (const auto& [from, to, coeff] : triples)
        dlist.push_back(json::array({from, to, coeff}));
    return json{{"degrees", degrees}, {"d", dlist}};
}

json combination_json(const ChainComplex& c, const Combination& value)
{
    json out = json::object();
    for (const auto& [ref, q] : value)
        out[basis_name(c, ref)] = rational_to_string(q);
    return out;
}

json op_json(const ChainComplex& c, const BilinearOp& op)
{
    std::vector<std::pair<std::vector<std::string>, json>> entries;
    for (const auto& [pair, value] : op.table) {
        if (value.empty())
            continue;
        entries.push_back({{basis_name(c, pair.first),
                            basis_name(c, pair.second)},
                           combination_json(c, value)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    json out = json::array();
    for (const auto& [names, value] : entries)
        out.push_back(json::array({names[0], names[1], value}));
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace

ChainComplex parse_complex(const std::string& text)
{
    const json j = parse_text(text);
    require_object(j, "complex", {"degrees", "d"}, {"degrees", "d"});
    NameMap names;
    return complex_from_parts(j.at("degrees"), j.at("d"), names);
}

DgAs2Algebra parse_algebra(const std::string& text)
{
    const json j = parse_text(text);
    require_object(j, "algebra", {"degrees", "d", "star", "bullet"},
                   {"degrees", "d"});
    NameMap names;
    DgAs2Algebra alg;
    alg.complex = complex_from_parts(j.at("degrees"), j.at("d"), names);
    if (j.contains("star"))
        alg.star = op_from_json(j.at("star"), names, "star");
    if (j.contains("bullet"))
        alg.bullet = op_from_json(j.at("bullet"), names, "bullet");
    return alg;
}

TransferredStructure parse_structure(const std::string& text)
{
    const json j = parse_text(text);
    require_object(j, "structure file", {"complex", "structure"},
                   {"complex", "structure"});
    const json& cj = j.at("complex");
    require_object(cj, "\"complex\"", {"degrees", "d"}, {"degrees", "d"});
    NameMap names;
    TransferredStructure t;
    t.small = complex_from_parts(cj.at("degrees"), cj.at("d"), names);

    const json& st = j.at("structure");
    if (!st.is_object())
        throw JsonError("\"structure\" must be an object keyed by \"(i,j)\"");
    for (const auto& item : st.items()) {
        const auto [i, jj] = parse_op_key(item.key());
        const int arity = i + jj + 1;
        if (!item.value().is_array())
            throw JsonError("\"structure\" entry \"" + item.key()
                            + "\" must be an array");
        TupleTable table;
        for (const json& e : item.value()) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_array())
                throw JsonError("entries under \"" + item.key()
                                + "\" must be [[names...], {name: coeff}]"
                                " pairs");
            if (static_cast<int>(e[0].size()) != arity)
                throw JsonError("entry under \"" + item.key() + "\" has "
                                + std::to_string(e[0].size())
                                + " inputs, expected "
                                + std::to_string(arity));
            std::vector<BasisRef> tuple;
            for (const json& name : e[0])
                tuple.push_back(
                    resolve(names, name, "input under \"" + item.key()
                                             + "\""));
            const Combination value = combination_from_json(
                e[1], names, "output under \"" + item.key() + "\"");
            auto& slot = table[tuple];
            slot = combination_sum(slot, value);
            if (slot.empty())
                table.erase(tuple);
        }
        t.ops[{i, jj}] = std::move(table);
        t.max_weight = std::max(t.max_weight, i + jj);
    }
    for (int w = 1; w <= t.max_weight; ++w)
        for (int i = 0; i <= w; ++i)
            t.ops.try_emplace({i, w - i});
    return t;
}

std::string complex_to_json(const ChainComplex& c)
{
    return dump(complex_json(c));
}

std::string algebra_to_json(const DgAs2Algebra& alg)
{
    json j = complex_json(alg.complex);
    if (!alg.star.table.empty())
        j["star"] = op_json(alg.complex, alg.star);
    if (!alg.bullet.table.empty())
        j["bullet"] = op_json(alg.complex, alg.bullet);
    return dump(j);
}

std::string structure_to_json(const TransferredStructure& t)
{
    json st = json::object();
    for (const auto& [index, table] : t.ops) {
        std::vector<std::pair<std::vector<std::string>, json>> entries;
        for (const auto& [tuple, value] : table) {
            if (value.empty())
                continue;
            std::vector<std::string> names;
            for (const BasisRef& ref : tuple)
                names.push_back(basis_name(t.small, ref));
            entries.push_back({std::move(names),
                               combination_json(t.small, value)});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) {
                      return a.first < b.first;
                  });
        json list = json::array();
        for (const auto& [names, value] : entries)
            list.push_back(json::array({json(names), value}));
        st["(" + std::to_string(index.first) + ","
           + std::to_string(index.second) + ")"] = std::move(list);
    }
    return dump(json{{"complex", complex_json(t.small)},
                     {"structure", std::move(st)}});
}

}  // namespace operadkit
