#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridpatrol/policy.hpp"

namespace gridpatrol {

// One transition of a table-driven policy. Keys are canonical sensing strings:
// boundary-distance form "l1,r1|l2,r2|..." on grids, or an offset-set form
// "(0,0)(0,1)(1,0)" for general environments (distinguished by the leading
// parenthesis). mem values are small non-negative integers.
struct TableEntry {
    std::string key;
    MemVal mem = 0;
    Step step;
    MemVal mem_out = 0;
};

struct TablePolicy {
    std::vector<TableEntry> entries;  // file order, preserved by serialization

    // distinct source-memory values, sorted; the state set a verification
    // sweep uses as start memories
    std::vector<MemVal> mem_values() const;
    // smallest b with every mem value < 2^b
    int bits() const;
    bool uses_offset_keys() const;

    // throws policy_undefined_error when (key, mem) has no entry
    Move eval(const std::string& key, MemVal mem) const;

    void rebuild_index();  // call after mutating entries directly

  private:
    std::map<std::pair<std::string, MemVal>, std::size_t> index_;
};

// Line format: `sense_key ; mem -> axis sign ; mem'`, '#' starts a comment.
// parse(serialize(parse(text))) reproduces the same policy bit-exactly.
TablePolicy parse_table(const std::string& text);  // throws std::invalid_argument
TablePolicy load_table_file(const std::string& path);
std::string serialize_table(const TablePolicy& t);

// Wrap a boundary-distance-keyed table for the grid simulator.
GridPolicy policy_from_table(TablePolicy t, int V);

}  // namespace gridpatrol
