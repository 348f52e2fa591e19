#include "sts/io.hpp"

#include <fstream>
#include <sstream>

#include "sts/combinatorics.hpp"

namespace sts {

std::string to_sts_text(const SteinerTripleSystem& s, const Headers& headers) {
    std::string out;
    for (const auto& [key, value] : headers) out += "# " + key + ": " + value + "\n";
    out += std::to_string(s.order()) + "\n";
    for (const Triple& t : s.blocks())
        out += std::to_string(t.p[0]) + " " + std::to_string(t.p[1]) + " " +
               std::to_string(t.p[2]) + "\n";
    return out;
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

SteinerTripleSystem parse_sts_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    Point n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) continue;
        long long v = 0;
        if (!parse_int(line, v) || v < 0 || v > kMaxOrder)
            throw Error("ParseError", "line " + std::to_string(lineno) + ": expected the order");
        n = static_cast<Point>(v);
        break;
    }
    if (n < 0) throw Error("ParseError", "missing order line");

    std::vector<Triple> blocks;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#')
            throw Error("ParseError",
                        "line " + std::to_string(lineno) + ": comments allowed only before the order");
        std::istringstream ls(line);
        std::string tok;
        long long v[3];
        for (int i = 0; i < 3; ++i) {
            if (!(ls >> tok) || !parse_int(tok, v[i]))
                throw Error("ParseError",
                            "line " + std::to_string(lineno) + ": expected three indices");
        }
        if (ls >> tok)
            throw Error("ParseError", "line " + std::to_string(lineno) + ": trailing tokens");
        for (int i = 0; i < 3; ++i)
            if (v[i] < 0 || v[i] >= n)
                throw Error("PointOutOfRange", "line " + std::to_string(lineno) + ": index " +
                                                   std::to_string(v[i]) + " outside [0," +
                                                   std::to_string(n) + ")");
        if (!(v[0] < v[1] && v[1] < v[2]))
            throw Error("ParseError",
                        "line " + std::to_string(lineno) + ": indices not strictly ascending");
        blocks.push_back(Triple{{static_cast<Point>(v[0]), static_cast<Point>(v[1]),
                                 static_cast<Point>(v[2])}});
    }

    // Count before coverage so a truncated file reads as WrongBlockCount.
    if (static_cast<std::int64_t>(blocks.size()) != third_binom2(n))
        throw Error("WrongBlockCount", "got " + std::to_string(blocks.size()) +
                                           " block lines, expected " +
                                           std::to_string(third_binom2(n)));
    return SteinerTripleSystem::validate(n, blocks);
}

SteinerTripleSystem read_sts_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileError", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sts_text(buf.str());
}

void write_sts_file(const std::filesystem::path& path, const SteinerTripleSystem& s,
                    const Headers& headers) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileError", "cannot write " + path.string());
    out << to_sts_text(s, headers);
}

nlohmann::ordered_json report_to_json(const InvariantReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["blocks"] = rep.block_count;
    j["alpha"] = rep.alpha;
    j["beta"] = rep.beta;
    j["gamma"] = rep.gamma;
    j["pasch_count"] = rep.pasch_count;
    j["flags"] = {{"projective", rep.flags.projective},
                  {"anti_pasch", rep.flags.anti_pasch},
                  {"strongly_anti_pasch", rep.flags.strongly_anti_pasch},
                  {"enough_pasch", rep.flags.enough_pasch}};
    j["bounds_ok"] = rep.bounds_ok;
    j["degenerate"] = rep.degenerate;
    return j;
}

std::string report_to_table(const InvariantReport& rep) {
    auto yesno = [](bool v) { return v ? "yes" : "no"; };
    std::ostringstream out;
    auto row = [&](const std::string& k, const std::string& v) {
        out << k;
        for (std::size_t i = k.size(); i < 20; ++i) out << ' ';
        out << v << "\n";
    };
    row("n", std::to_string(rep.n));
    row("blocks", std::to_string(rep.block_count));
    row("alpha", std::to_string(rep.alpha));
    row("beta", std::to_string(rep.beta));
    row("gamma", std::to_string(rep.gamma));
    row("pasch_count", std::to_string(rep.pasch_count));
    row("projective", yesno(rep.flags.projective));
    row("anti_pasch", yesno(rep.flags.anti_pasch));
    row("strongly_anti_pasch", yesno(rep.flags.strongly_anti_pasch));
    row("enough_pasch", yesno(rep.flags.enough_pasch));
    row("bounds_ok", yesno(rep.bounds_ok));
    row("degenerate", yesno(rep.degenerate));
    return out.str();
}

}  // namespace sts
