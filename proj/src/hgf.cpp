#include "homc/hgf.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace homc {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), int(i) + 1});
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_hgf(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t nl = text.find('\n', start);
            if (nl == std::string::npos) {
                lines.push_back(text.substr(start));
                break;
            }
            lines.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }

    auto header = split_tokens(lines.empty() ? std::string() : lines[0]);
    if (header.size() != 3 || header[0].text != "hgf")
        throw ParseError("expected header 'hgf 1 <mode>'", 1, 1);
    if (header[1].text != "1")
        throw ParseError("unsupported format version '" + header[1].text + "'", 1,
                         header[1].col);
    Mode mode;
    if (header[2].text == "directed")
        mode = Mode::directed;
    else if (header[2].text == "undirected")
        mode = Mode::undirected;
    else
        throw ParseError("mode must be 'directed' or 'undirected'", 1, header[2].col);

    Graph g(mode);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        int ln = int(li) + 1;
        auto toks = split_tokens(lines[li]);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        const std::string& kind = toks[0].text;
        try {
            if (kind == "v") {
                if (toks.size() != 2)
                    throw ParseError("'v' takes exactly one identifier", ln, toks[0].col);
                g.add_vertex(toks[1].text);
            } else if (kind == "e") {
                if (toks.size() != 3)
                    throw ParseError("'e' takes exactly two identifiers", ln, toks[0].col);
                g.add_edge(toks[1].text, toks[2].text);
            } else {
                throw ParseError("unknown directive '" + kind + "'", ln, toks[0].col);
            }
        } catch (const InputError& e) {
            throw ParseError(e.what(), ln, toks[0].col);
        }
    }
    return g;
}

std::string serialize_hgf(const Graph& g) {
    std::ostringstream out;
    out << "hgf 1 " << (g.directed() ? "directed" : "undirected") << "\n";
    for (const auto& id : g.vertex_names()) out << "v " << id << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << g.vertex_name(u) << " " << g.vertex_name(v) << "\n";
    return out.str();
}

Graph load_hgf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Graph g = parse_hgf(buf.str());
    // Name graphs after the file stem; cosmetic only.
    std::size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    g.set_name(dot == std::string::npos ? base : base.substr(0, dot));
    return g;
}

void save_hgf_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << serialize_hgf(g);
}

}  // namespace homc
