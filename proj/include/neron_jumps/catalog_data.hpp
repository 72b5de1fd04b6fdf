#ifndef NERON_JUMPS_CATALOG_DATA_HPP
#define NERON_JUMPS_CATALOG_DATA_HPP

// Embedded data: minimal SNC dual graphs of the Kodaira types, the type VI
// genus-2 graph, and the full jump tables for genus 1 and genus 2.
// Each Kodaira graph lists its gluing vertex (a reduced rational leaf, or the
// elliptic component for type I) first.

#include <array>
#include <string_view>

namespace neron_jumps::data {

struct graph_text {
    std::string_view name;
    std::string_view text;
};

inline constexpr std::array kodaira_graphs{
    graph_text{"I", R"(graph I
vertex e genus=1 mult=1
)"},
    graph_text{"I*", R"(graph I*
vertex a genus=0 mult=1
vertex b genus=0 mult=1
vertex c genus=0 mult=1
vertex d genus=0 mult=1
vertex z genus=0 mult=2
edge a z
edge b z
edge c z
edge d z
)"},
    graph_text{"II", R"(graph II
vertex a genus=0 mult=1
vertex b genus=0 mult=2
vertex c genus=0 mult=3
vertex z genus=0 mult=6
edge a z
edge b z
edge c z
)"},
    graph_text{"III", R"(graph III
vertex a genus=0 mult=1
vertex b genus=0 mult=1
vertex c genus=0 mult=2
vertex z genus=0 mult=4
edge a z
edge b z
edge c z
)"},
    graph_text{"IV", R"(graph IV
vertex a genus=0 mult=1
vertex b genus=0 mult=1
vertex c genus=0 mult=1
vertex z genus=0 mult=3
edge a z
edge b z
edge c z
)"},
    graph_text{"II*", R"(graph II*
vertex v0 genus=0 mult=1
vertex v1 genus=0 mult=2
vertex v2 genus=0 mult=3
vertex v3 genus=0 mult=4
vertex v4 genus=0 mult=5
vertex v5 genus=0 mult=6
vertex v6 genus=0 mult=4
vertex v7 genus=0 mult=2
vertex v8 genus=0 mult=3
edge v0 v1
edge v1 v2
edge v2 v3
edge v3 v4
edge v4 v5
edge v5 v6
edge v6 v7
edge v5 v8
)"},
    graph_text{"III*", R"(graph III*
vertex v0 genus=0 mult=1
vertex v1 genus=0 mult=2
vertex v2 genus=0 mult=3
vertex v3 genus=0 mult=4
vertex v4 genus=0 mult=3
vertex v5 genus=0 mult=2
vertex v6 genus=0 mult=1
vertex v7 genus=0 mult=2
edge v0 v1
edge v1 v2
edge v2 v3
edge v3 v4
edge v4 v5
edge v5 v6
edge v3 v7
)"},
    graph_text{"IV*", R"(graph IV*
vertex v0 genus=0 mult=1
vertex v1 genus=0 mult=2
vertex v2 genus=0 mult=3
vertex v3 genus=0 mult=2
vertex v4 genus=0 mult=1
vertex v5 genus=0 mult=2
vertex v6 genus=0 mult=1
edge v0 v1
edge v1 v2
edge v2 v3
edge v3 v4
edge v2 v5
edge v5 v6
)"},
};

inline constexpr std::string_view type_vi_graph = R"(graph VI
vertex v1 genus=0 mult=1
vertex v2 genus=0 mult=2
vertex v3 genus=0 mult=3
vertex v4 genus=0 mult=4
vertex v5 genus=0 mult=2
vertex v6 genus=0 mult=2
vertex v7 genus=0 mult=1
edge v1 v2
edge v2 v3
edge v3 v4
edge v5 v4
edge v6 v4
edge v7 v4
)";

struct table_row {
    std::string_view name;
    int table;
    std::string_view jumps;
};

// Rows exactly as tabulated; a single value in a genus-2 row stands for a
// double jump. Genus-2 names that clash with genus-1 names carry "g2-";
// the two III_n rows carry their table number.
inline constexpr std::array table_rows{
    table_row{"I", 1, "0"},
    table_row{"I*", 1, "1/2"},
    table_row{"In", 1, "0"},
    table_row{"In*", 1, "1/2"},
    table_row{"II", 1, "1/6"},
    table_row{"II*", 1, "5/6"},
    table_row{"III", 1, "1/4"},
    table_row{"III*", 1, "3/4"},
    table_row{"IV", 1, "1/3"},
    table_row{"IV*", 1, "2/3"},

    table_row{"I0-0-0", 2, "0"},
    table_row{"I0-0-0*", 2, "1/2"},
    table_row{"g2-II", 2, "0, 1/2"},
    table_row{"g2-III", 2, "1/3, 2/3"},
    table_row{"g2-IV", 2, "1/6, 5/6"},
    table_row{"g2-V", 2, "1/6, 2/6"},
    table_row{"V*", 2, "4/6, 5/6"},
    table_row{"VI", 2, "1/4, 3/4"},
    table_row{"VII", 2, "1/8, 3/8"},
    table_row{"VII*", 2, "5/8, 7/8"},
    table_row{"VIII-1", 2, "1/10, 3/10"},
    table_row{"VIII-2", 2, "3/10, 9/10"},
    table_row{"VIII-3", 2, "1/10, 7/10"},
    table_row{"VIII-4", 2, "7/10, 9/10"},
    table_row{"IX-1", 2, "1/5, 3/5"},
    table_row{"IX-2", 2, "1/5, 2/5"},
    table_row{"IX-3", 2, "3/5, 4/5"},
    table_row{"IX-4", 2, "2/5, 4/5"},

    table_row{"I0-I0-m", 3, "0"},
    table_row{"I0*-I0*-m", 3, "1/2"},
    table_row{"I0-I0*-m", 3, "0, 1/2"},
    table_row{"2I0-m", 3, "0, 1/2"},
    table_row{"2I0*-m", 3, "1/4, 3/4"},
    table_row{"I0-II-m", 3, "0, 1/6"},
    table_row{"I0-II*-m", 3, "0, 5/6"},
    table_row{"I0-IV-m", 3, "0, 1/3"},
    table_row{"I0-IV*-m", 3, "0, 2/3"},
    table_row{"I0*-II-m", 3, "1/6, 3/6"},
    table_row{"I0*-II*-m", 3, "3/6, 5/6"},
    table_row{"I0*-II*-alpha", 3, "3/6, 5/6"},
    table_row{"I0*-IV-m", 3, "1/2, 1/3"},
    table_row{"I0*-IV*-m", 3, "1/2, 2/3"},
    table_row{"I0*-IV*-alpha", 3, "1/2, 2/3"},
    table_row{"I0-III-m", 3, "0, 1/4"},
    table_row{"I0-III*-m", 3, "0, 3/4"},
    table_row{"I0*-III-m", 3, "1/4, 2/4"},
    table_row{"I0*-III*-m", 3, "2/4, 3/4"},
    table_row{"I0*-III*-alpha", 3, "2/4, 3/4"},
    table_row{"2II-m", 3, "1/12, 7/12"},
    table_row{"2II*-m", 3, "5/12, 11/12"},
    table_row{"II-II-m", 3, "1/6, 1/6"},
    table_row{"II-II*-m", 3, "1/6, 5/6"},
    table_row{"II*-II*-m", 3, "5/6, 5/6"},
    table_row{"II*-II*-alpha", 3, "5/6, 5/6"},
    table_row{"II-IV-m", 3, "1/6, 2/6"},
    table_row{"II-IV*-m", 3, "1/6, 4/6"},
    table_row{"II*-IV-m", 3, "2/6, 5/6"},
    table_row{"II*-IV-alpha", 3, "2/6, 5/6"},
    table_row{"II*-IV*-m", 3, "4/6, 5/6"},
    table_row{"II*-IV*-alpha", 3, "4/6, 5/6"},
    table_row{"2IV-m", 3, "1/6, 4/6"},
    table_row{"2IV*-m", 3, "2/6, 5/6"},
    table_row{"IV-IV-m", 3, "1/3, 1/3"},
    table_row{"IV-IV*-m", 3, "1/3, 2/3"},
    table_row{"IV*-IV*-m", 3, "2/3, 2/3"},
    table_row{"IV*-IV*-alpha", 3, "2/3, 2/3"},
    table_row{"II-III-m", 3, "2/12, 3/12"},
    table_row{"II-III*-m", 3, "2/12, 9/12"},
    table_row{"II*-III-m", 3, "2/12, 10/12"},
    table_row{"II*-III-alpha", 3, "3/12, 10/12"},
    table_row{"II*-III*-m", 3, "9/12, 10/12"},
    table_row{"II*-III*-alpha", 3, "9/12, 10/12"},
    table_row{"IV-III-m", 3, "3/12, 4/12"},
    table_row{"IV-III*-m", 3, "4/12, 9/12"},
    table_row{"IV-III*-alpha", 3, "4/12, 9/12"},
    table_row{"IV*-III-m", 3, "3/12, 8/12"},
    table_row{"IV*-III*-m", 3, "8/12, 9/12"},
    table_row{"IV*-III*-alpha", 3, "8/12, 9/12"},
    table_row{"2III-m", 3, "1/8, 5/8"},
    table_row{"2III*-m", 3, "3/8, 7/8"},
    table_row{"III-III-m", 3, "1/4, 1/4"},
    table_row{"III-III*-m", 3, "1/4, 3/4"},
    table_row{"III*-III*-m", 3, "3/4, 3/4"},
    table_row{"III*-III*-alpha", 3, "3/4, 3/4"},

    table_row{"In-0-0", 4, "0"},
    table_row{"In-I0-m", 4, "0"},
    table_row{"I0-In*-m", 4, "0, 1/2"},
    table_row{"In-I0*-m", 4, "0, 1/2"},
    table_row{"In-0-0*", 4, "1/2, 1/2"},
    table_row{"I0*-In*-m", 4, "1/2, 1/2"},
    table_row{"IIn-0", 4, "0, 1/2"},
    table_row{"IIn-0*", 4, "0, 1/2"},
    table_row{"II-In-m", 4, "0, 1/6"},
    table_row{"II*-In-m", 4, "0, 5/6"},
    table_row{"IV-In-m", 4, "0, 1/3"},
    table_row{"IV*-In-m", 4, "0, 2/3"},
    table_row{"II-In*-m", 4, "1/6, 3/6"},
    table_row{"II*-In*-m", 4, "3/6, 5/6"},
    table_row{"II*-In*-alpha", 4, "3/6, 5/6"},
    table_row{"IV-In*-m", 4, "2/6, 3/6"},
    table_row{"IV*-In*-m", 4, "3/6, 4/6"},
    table_row{"IV*-In*-alpha", 4, "3/6, 4/6"},
    table_row{"IV-IIn", 4, "0, 1/3"},
    table_row{"IV*-IIn", 4, "0, 2/3"},
    table_row{"II-IIn*", 4, "1/6, 3/6"},
    table_row{"II*-IIn*", 4, "3/6, 5/6"},
    table_row{"III-In-m", 4, "0, 1/4"},
    table_row{"III*-In-m", 4, "0, 3/4"},
    table_row{"III-In*-m", 4, "1/4, 2/4"},
    table_row{"III*-In*-m", 4, "2/4, 3/4"},
    table_row{"III*-In*-alpha", 4, "2/4, 3/4"},
    table_row{"III-IIn", 4, "0, 3/4"},
    table_row{"III*-IIn", 4, "0, 3/4"},
    table_row{"III-IIn*", 4, "1/4, 2/4"},
    table_row{"III*-IIn*", 4, "2/4, 3/4"},

    table_row{"In-p-0", 5, "0"},
    table_row{"In-Ip-m", 5, "0"},
    table_row{"In-p-0*", 5, "1/2"},
    table_row{"In*-Ip*-m", 5, "1/2"},
    table_row{"In-Ip*-m", 5, "0, 1/2"},
    table_row{"2In-m", 5, "0, 1/2"},
    table_row{"2In*-m", 5, "1/4, 3/4"},
    table_row{"In-p", 5, "0, 1/2"},
    table_row{"IIIn-t5", 5, "1/4, 3/4"},

    table_row{"In-p-q", 6, "0"},
    table_row{"In-p-q*", 6, "1/2"},
    table_row{"IIn-p", 6, "0, 1/2"},
    table_row{"IIn-p*", 6, "0, 1/2"},
    table_row{"IIIn-t6", 6, "1/3, 2/3"},
    table_row{"IIIn*", 6, "1/6, 5/6"},
};

} // namespace neron_jumps::data

#endif // NERON_JUMPS_CATALOG_DATA_HPP
