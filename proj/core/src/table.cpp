#include "gridpatrol/table.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridpatrol/errors.hpp"

namespace gridpatrol {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad " + what +
                                    " '" + tok + "'");
    }
}

}  // namespace

std::vector<MemVal> TablePolicy::mem_values() const {
    std::set<MemVal> vals;
    for (const auto& e : entries) vals.insert(e.mem);
    return {vals.begin(), vals.end()};
}

int TablePolicy::bits() const {
    MemVal hi = 0;
    for (const auto& e : entries) hi = std::max({hi, e.mem, e.mem_out});
    int b = 0;
    while ((1LL << b) <= hi) ++b;
    return b;
}

bool TablePolicy::uses_offset_keys() const {
    return !entries.empty() && !entries.front().key.empty() &&
           entries.front().key.front() == '(';
}

Move TablePolicy::eval(const std::string& key, MemVal mem) const {
    auto it = index_.find({key, mem});
    if (it == index_.end()) {
        throw policy_undefined_error("no transition for sense '" + key + "' with memory " +
                                     std::to_string(mem));
    }
    const TableEntry& e = entries[it->second];
    return {e.step, e.mem_out};
}

void TablePolicy::rebuild_index() {
    index_.clear();
    for (size_t i = 0; i < entries.size(); ++i) {
        auto [it, fresh] = index_.insert({{entries[i].key, entries[i].mem}, i});
        if (!fresh) {
            throw std::invalid_argument("duplicate transition for sense '" + entries[i].key +
                                        "' with memory " + std::to_string(entries[i].mem));
        }
    }
}

TablePolicy parse_table(const std::string& text) {
    TablePolicy t;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        // key ; mem -> axis sign ; mem'
        size_t semi1 = line.find(';');
        size_t semi2 = (semi1 == std::string::npos) ? std::string::npos
                                                    : line.find(';', semi1 + 1);
        if (semi2 == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'key ; mem -> axis sign ; mem''");
        }
        TableEntry e;
        e.key = trim(line.substr(0, semi1));
        if (e.key.empty()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": empty sense key");
        }
        std::string mid = line.substr(semi1 + 1, semi2 - semi1 - 1);
        size_t arrow = mid.find("->");
        if (arrow == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": missing '->'");
        }
        e.mem = parse_int(trim(mid.substr(0, arrow)), line_no, "memory value");
        std::istringstream act(mid.substr(arrow + 2));
        std::string axis_tok, sign_tok, extra;
        if (!(act >> axis_tok >> sign_tok) || (act >> extra)) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": action must be 'axis sign'");
        }
        e.step.axis = static_cast<int>(parse_int(axis_tok, line_no, "axis"));
        e.step.sign = static_cast<int>(parse_int(sign_tok, line_no, "sign"));
        e.mem_out = parse_int(trim(line.substr(semi2 + 1)), line_no, "next memory value");

        if (e.step.axis < 1) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": axis must be >= 1");
        }
        if (e.step.sign != 1 && e.step.sign != -1) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": sign must be +1 or -1");
        }
        if (e.mem < 0 || e.mem_out < 0) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": memory values must be non-negative");
        }
        bool offset_key = e.key.front() == '(';
        if (!t.entries.empty() && offset_key != t.uses_offset_keys()) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": mixed sense key styles in one table");
        }
        t.entries.push_back(std::move(e));
    }
    t.rebuild_index();
    return t;
}

TablePolicy load_table_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open table file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_table(buf.str());
}

std::string serialize_table(const TablePolicy& t) {
    std::ostringstream out;
    for (const auto& e : t.entries) {
        out << e.key << " ; " << e.mem << " -> " << e.step.axis << ' '
            << (e.step.sign > 0 ? "+1" : "-1") << " ; " << e.mem_out << '\n';
    }
    return out.str();
}

GridPolicy policy_from_table(TablePolicy t, int V) {
    if (t.uses_offset_keys()) {
        throw std::invalid_argument("offset-keyed table cannot drive a grid simulation");
    }
    GridPolicy p;
    p.name = "table";
    p.V = V;
    p.mems = t.mem_values();
    if (p.mems.empty()) p.mems = {0};
    auto shared = std::make_shared<TablePolicy>(std::move(t));
    p.eval = [shared](const SenseData& s, MemVal mem) {
        return shared->eval(sense_key(s), mem);
    };
    return p;
}

}  // namespace gridpatrol
