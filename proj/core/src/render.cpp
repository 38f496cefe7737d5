#include "kschur/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kschur {

namespace {

std::string join_grid(const std::vector<std::vector<std::string>>& rows_bottom_up) {
    std::size_t width = 1;
    for (const auto& row : rows_bottom_up)
        for (const auto& cell : row) width = std::max(width, cell.size());
    std::ostringstream os;
    for (std::size_t i = rows_bottom_up.size(); i-- > 0;) {
        for (std::size_t j = 0; j < rows_bottom_up[i].size(); ++j) {
            if (j) os << ' ';
            os << std::string(width - rows_bottom_up[i][j].size(), ' ')
               << rows_bottom_up[i][j];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string render_shape(const Partition& p) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 1; i <= p.rows(); ++i)
        rows.emplace_back(p.part(i), "[]");
    return join_grid(rows);
}

std::string render_residues(const Core& c) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : c.residue_rows()) {
        std::vector<std::string> cells;
        for (int r : row) cells.push_back(std::to_string(r));
        rows.push_back(std::move(cells));
    }
    return join_grid(rows);
}

std::string render_tableau(const std::vector<std::vector<int>>& tableau_rows) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : tableau_rows) {
        std::vector<std::string> cells;
        for (int v : row) cells.push_back(v == 0 ? "." : std::to_string(v));
        rows.push_back(std::move(cells));
    }
    return join_grid(rows);
}

std::string render_abc(const Abc& a) {
    std::set<Cell> barred;
    for (const AbcRibbon& r : a.ribbons)
        if (r.size >= 2)
            for (const Cell& c : r.cells) barred.insert(c);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < a.grid.size(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < a.grid[i].size(); ++j) {
            int v = a.grid[i][j];
            if (v == 0) {
                cells.push_back(".");
            } else {
                std::string s = std::to_string(v);
                if (barred.count({static_cast<int>(i) + 1, static_cast<int>(j) + 1}))
                    s += "~";
                cells.push_back(std::move(s));
            }
        }
        rows.push_back(std::move(cells));
    }
    return join_grid(rows);
}

}  // namespace kschur
