#include "cobkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cobkit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign parse_sign(const ordered_json& j, const char* side, std::size_t idx) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s == "+") return Sign::plus;
        if (s == "-" || s == "−") return Sign::minus;
    }
    throw ParseError(std::string(side) + "-point " + std::to_string(idx) +
                     ": sign must be \"+\" or \"-\"");
}

long long get_count(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    return j[key].get<long long>();
}

std::vector<int> get_index_array(const ordered_json& j, const char* what, std::size_t comp) {
    std::vector<int> out;
    if (j.is_null()) return out;
    if (!j.is_array())
        throw ParseError("component " + std::to_string(comp) + ": \"" + what +
                         "\" must be an array of indices");
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw ParseError("component " + std::to_string(comp) + ": \"" + what +
                             "\" must contain non-negative indices");
        out.push_back(e.get<int>());
    }
    return out;
}

// Fills the attachment table for one boundary side, reporting duplicated or
// out-of-range indices against that side's size.
void assign_side(std::vector<int>& table, const std::vector<int>& indices, int comp,
                 const char* side) {
    for (int idx : indices) {
        if (idx >= static_cast<int>(table.size()))
            throw ParseError(std::string(side) + "-index " + std::to_string(idx) +
                             " out of range");
        if (table[idx] >= 0)
            throw ParseError(std::string(side) + "-index " + std::to_string(idx) +
                             " appears twice");
        table[idx] = comp;
    }
}

void check_assigned(const std::vector<int>& table, const char* side) {
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] < 0)
            throw ParseError(std::string(side) + "-index " + std::to_string(i) +
                             " unassigned");
}

Cobordism2 parse_cob2(const ordered_json& j) {
    const int m = static_cast<int>(get_count(j, "in"));
    const int n = static_cast<int>(get_count(j, "out"));
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("\"components\" must be an array");

    std::vector<int> lm(m, -1), ln(n, -1);
    std::vector<long long> genus;
    int comp = 0;
    for (const auto& cj : j["components"]) {
        assign_side(lm, get_index_array(cj.value("in", ordered_json::array()), "in", comp),
                    comp, "in");
        assign_side(ln, get_index_array(cj.value("out", ordered_json::array()), "out", comp),
                    comp, "out");
        if (cj.contains("genus") &&
            (!cj["genus"].is_number_integer() || cj["genus"].get<long long>() < 0))
            throw ParseError("component " + std::to_string(comp) +
                             ": \"genus\" must be a non-negative integer");
        genus.push_back(cj.value("genus", 0LL));
        ++comp;
    }
    check_assigned(lm, "in");
    check_assigned(ln, "out");

    Cobordism2 c{m, n, comp, FinMap(m, comp, std::move(lm)), FinMap(n, comp, std::move(ln)),
                 std::move(genus)};
    if (auto violations = validate(c); !violations.empty()) throw ParseError(violations.front());
    return c;
}

SignedSet parse_signed_set(const ordered_json& j, const char* side) {
    if (!j.is_array())
        throw ParseError(std::string("\"") + side + "\" must be an array of signs");
    SignedSet s;
    for (std::size_t i = 0; i < j.size(); ++i) s.signs.push_back(parse_sign(j[i], side, i));
    return s;
}

Cobordism1 parse_cob1(const ordered_json& j) {
    if (!j.contains("in") || !j.contains("out"))
        throw ParseError("\"in\" and \"out\" sign lists are required");
    SignedSet m = parse_signed_set(j["in"], "in");
    SignedSet n = parse_signed_set(j["out"], "out");
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("\"components\" must be an array");
    const long long loop_count = j.contains("loops") ? get_count(j, "loops") : 0;

    std::vector<int> lm(m.size(), -1), ln(n.size(), -1);
    int comp = 0;
    for (const auto& cj : j["components"]) {
        auto ins = get_index_array(cj.value("in", ordered_json::array()), "in", comp);
        auto outs = get_index_array(cj.value("out", ordered_json::array()), "out", comp);
        if (ins.empty() && outs.empty())
            throw ParseError("component " + std::to_string(comp) +
                             " has no boundary points; represent loops with the \"loops\" count");
        assign_side(lm, ins, comp, "in");
        assign_side(ln, outs, comp, "out");
        ++comp;
    }
    check_assigned(lm, "in");
    check_assigned(ln, "out");

    const int comp_count = comp + static_cast<int>(loop_count);
    const int in_size = static_cast<int>(lm.size());
    const int out_size = static_cast<int>(ln.size());
    Cobordism1 c{std::move(m), std::move(n), comp_count,
                 FinMap(in_size, comp_count, std::move(lm)),
                 FinMap(out_size, comp_count, std::move(ln))};
    if (auto violations = validate(c); !violations.empty()) throw ParseError(violations.front());
    return c;
}

// Per-component boundary lists in canonical order: smallest boundary index
// first (incoming side counted before outgoing), closed components last.
struct CompRow {
    std::vector<int> ins;
    std::vector<int> outs;
    long long genus = 0;
};

std::vector<CompRow> canonical_rows(int m, int n, int comp_count, const FinMap& lm,
                                    const FinMap& ln, const std::vector<long long>* genus) {
    std::vector<CompRow> rows(comp_count);
    for (int i = 0; i < lm.dom; ++i) rows[lm(i)].ins.push_back(i);
    for (int i = 0; i < ln.dom; ++i) rows[ln(i)].outs.push_back(i);
    if (genus)
        for (int x = 0; x < comp_count; ++x) rows[x].genus = (*genus)[x];
    std::vector<std::pair<std::pair<int, long long>, int>> order;
    for (int x = 0; x < comp_count; ++x) {
        const auto& r = rows[x];
        std::pair<int, long long> key;
        if (!r.ins.empty())
            key = {r.ins.front(), 0};
        else if (!r.outs.empty())
            key = {m + r.outs.front(), 0};
        else
            key = {m + n, r.genus};  // closed components last, by genus
        order.push_back({key, x});
    }
    std::sort(order.begin(), order.end());
    std::vector<CompRow> sorted;
    sorted.reserve(rows.size());
    for (auto& [key, x] : order) sorted.push_back(std::move(rows[x]));
    return sorted;
}

}  // namespace

std::string serialize(const Cobordism2& c) {
    ordered_json j;
    j["kind"] = "cob2";
    j["in"] = c.m;
    j["out"] = c.n;
    j["components"] = ordered_json::array();
    for (const auto& row : canonical_rows(c.m, c.n, c.comp_count, c.l_m, c.l_n, &c.genus)) {
        ordered_json cj;
        cj["in"] = row.ins;
        cj["out"] = row.outs;
        cj["genus"] = row.genus;
        j["components"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

std::string serialize(const Cobordism1& c) {
    ordered_json j;
    j["kind"] = "cob1";
    j["in"] = ordered_json::array();
    for (Sign s : c.m.signs) j["in"].push_back(sign_str(s));
    j["out"] = ordered_json::array();
    for (Sign s : c.n.signs) j["out"].push_back(sign_str(s));
    j["components"] = ordered_json::array();
    for (const auto& row : canonical_rows(c.m.size(), c.n.size(), c.comp_count, c.l_m, c.l_n,
                                          nullptr)) {
        if (row.ins.empty() && row.outs.empty()) continue;  // folded into the loop count
        ordered_json cj;
        cj["in"] = row.ins;
        cj["out"] = row.outs;
        j["components"].push_back(std::move(cj));
    }
    j["loops"] = loops(c);
    return j.dump(2) + "\n";
}

std::string serialize(const AnyCobordism& c) {
    return std::visit([](const auto& value) { return serialize(value); }, c);
}

AnyCobordism parse_cobordism(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("\"kind\" must be \"cob2\" or \"cob1\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "cob2") return parse_cob2(j);
    if (kind == "cob1") return parse_cob1(j);
    throw ParseError("unknown kind \"" + kind + "\"");
}

AnyCobordism parse_cobordism_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_cobordism(buffer.str());
}

void write_cobordism_file(const std::string& path, const AnyCobordism& c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize(c);
}

std::string to_dot(const Cobordism2& c) {
    std::ostringstream out;
    out << "graph cobordism {\n  rankdir=LR;\n";
    for (int i = 0; i < c.m; ++i)
        out << "  in" << i << " [shape=circle,label=\"" << i << "\"];\n";
    for (int j = 0; j < c.n; ++j)
        out << "  out" << j << " [shape=doublecircle,label=\"" << j << "\"];\n";
    for (int x = 0; x < c.comp_count; ++x)
        out << "  c" << x << " [shape=box,label=\"g=" << c.genus[x] << "\"];\n";
    for (int i = 0; i < c.m; ++i) out << "  in" << i << " -- c" << c.l_m(i) << ";\n";
    for (int j = 0; j < c.n; ++j) out << "  c" << c.l_n(j) << " -- out" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const Cobordism1& c) {
    std::ostringstream out;
    out << "graph cobordism {\n  rankdir=LR;\n";
    for (int i = 0; i < c.m.size(); ++i)
        out << "  in" << i << " [shape=circle,label=\"" << i << sign_str(c.m.signs[i])
            << "\"];\n";
    for (int j = 0; j < c.n.size(); ++j)
        out << "  out" << j << " [shape=doublecircle,label=\"" << j << sign_str(c.n.signs[j])
            << "\"];\n";
    std::vector<char> hit(c.comp_count, 0);
    for (int v : c.l_m.tab) hit[v] = 1;
    for (int v : c.l_n.tab) hit[v] = 1;
    for (int x = 0; x < c.comp_count; ++x)
        if (hit[x]) out << "  c" << x << " [shape=point];\n";
    for (int i = 0; i < c.m.size(); ++i) out << "  in" << i << " -- c" << c.l_m(i) << ";\n";
    for (int j = 0; j < c.n.size(); ++j) out << "  c" << c.l_n(j) << " -- out" << j << ";\n";
    if (int l = loops(c); l > 0)
        out << "  loops [shape=plaintext,label=\"loops: " << l << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const AnyCobordism& c) {
    return std::visit([](const auto& value) { return to_dot(value); }, c);
}

}  // namespace cobkit
