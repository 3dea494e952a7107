#include "ydlab/model_io.hpp"

#include <fstream>
#include <sstream>

namespace ydlab {

namespace {

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
    std::size_t pos = 0;

    bool done() const { return pos >= rows.size(); }
    const std::vector<std::string>& peek() const { return rows[pos].second; }
    int line() const { return pos < rows.size() ? rows[pos].first : -1; }
    std::vector<std::string> next() { return rows[pos++].second; }
};

Lines tokenize(const std::string& text) {
    Lines out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.rows.push_back({lineno, std::move(toks)});
    }
    return out;
}

} // namespace

ModelFile parse_model_text(const std::string& text) {
    Lines in = tokenize(text);
    if (in.done()) throw parse_error(1, "empty model file");

    auto row = in.next();
    if (row[0] != "group" || row.size() != 2)
        throw parse_error(in.rows[in.pos - 1].first, "expected 'group <name>'");
    std::string gname = row[1];

    if (in.done()) throw parse_error(in.rows.back().first, "expected 'elements ...'");
    row = in.next();
    if (row[0] != "elements" || row.size() < 2)
        throw parse_error(in.rows[in.pos - 1].first, "expected 'elements <label>...'");
    std::vector<std::string> labels(row.begin() + 1, row.end());
    const int n = static_cast<int>(labels.size());
    auto label_index = [&](const std::string& l, int lineno) {
        for (int k = 0; k < n; ++k)
            if (labels[k] == l) return k;
        throw parse_error(lineno, "unknown element label '" + l + "'");
    };

    if (in.done() || in.peek()[0] != "table")
        throw parse_error(in.line(), "expected 'table'");
    in.next();
    std::vector<std::vector<int>> table;
    for (int r = 0; r < n; ++r) {
        if (in.done()) throw parse_error(in.rows.back().first, "table row missing");
        const int lineno = in.line();
        row = in.next();
        if (static_cast<int>(row.size()) != n)
            throw parse_error(lineno, "table row needs " + std::to_string(n) + " entries");
        std::vector<int> tr;
        for (const auto& tok : row) tr.push_back(label_index(tok, lineno));
        table.push_back(std::move(tr));
    }
    if (in.done() || in.peek()[0] != "end") throw parse_error(in.line(), "expected 'end' after table");
    const int table_end_line = in.line();
    in.next();

    Report val = validate_group_table(labels, table);
    if (!val.ok()) {
        std::string why;
        for (const auto& e : val.entries())
            if (!e.pass) {
                why = e.name + (e.detail.empty() ? "" : " at " + e.detail);
                break;
            }
        throw parse_error(table_end_line, "not a group table: " + why);
    }

    ModelFile out;
    out.group = make_group(gname, labels, table);

    if (in.done()) return out;
    const int set_line = in.line();
    row = in.next();
    if (row[0] != "set" || row.size() != 2) throw parse_error(set_line, "expected 'set <size>'");
    int m = 0;
    try {
        m = std::stoi(row[1]);
    } catch (...) {
        throw parse_error(set_line, "set size must be an integer");
    }
    if (m <= 0) throw parse_error(set_line, "set size must be positive");

    if (in.done() || in.peek()[0] != "action") throw parse_error(in.line(), "expected 'action'");
    in.next();
    std::vector<std::vector<int>> perm(n);
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
        if (in.done()) throw parse_error(in.rows.back().first, "action row missing");
        const int lineno = in.line();
        row = in.next();
        if (row.size() != static_cast<std::size_t>(m) + 1 || row[0].back() != ':')
            throw parse_error(lineno, "expected '<element>: <images of 0.." +
                                          std::to_string(m - 1) + ">'");
        const int g = label_index(row[0].substr(0, row[0].size() - 1), lineno);
        if (seen[g]) throw parse_error(lineno, "duplicate action row for element");
        seen[g] = true;
        std::vector<int> images;
        for (int k = 1; k <= m; ++k) {
            int v = -1;
            try {
                v = std::stoi(row[k]);
            } catch (...) {
                throw parse_error(lineno, "image must be an integer");
            }
            if (v < 0 || v >= m) throw parse_error(lineno, "image out of range");
            images.push_back(v);
        }
        perm[g] = std::move(images);
    }
    if (in.done() || in.peek()[0] != "end") throw parse_error(in.line(), "expected 'end' after action");
    const int action_end_line = in.line();
    in.next();

    Report aval = validate_group_action(out.group, m, perm);
    if (!aval.ok()) {
        std::string why;
        for (const auto& e : aval.entries())
            if (!e.pass) {
                why = e.name + (e.detail.empty() ? "" : " at " + e.detail);
                break;
            }
        throw parse_error(action_end_line, "not a group action: " + why);
    }
    out.action = make_group_action(gname + "-action", out.group, m, perm);
    return out;
}

ModelFile parse_model_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("ydlab: cannot open model file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return parse_model_text(os.str());
}

} // namespace ydlab
