#include "kcx/template_io.hpp"

#include <fstream>
#include <sstream>

#include "kcx/dimacs.hpp"

namespace kcx {

void write_template(std::ostream& out, const TemplateDocument& doc) {
    out << "k " << doc.k << '\n';
    if (doc.palette.mode == PaletteMode::plain) {
        out << "palette plain " << doc.palette.size << '\n';
    } else {
        out << "palette list\n";
        for (const auto& [v, list] : doc.palette.lists) {
            out << "list " << v;
            for (Colour c : list)
                out << ' ' << c;
            out << '\n';
        }
    }
    for (auto [v, c] : doc.tmpl.precolour())
        out << "precolour " << v << ' ' << c << '\n';
    for (const auto& [v, list] : doc.tmpl.forbidden()) {
        out << "forbid " << v;
        for (Colour c : list)
            out << ' ' << c;
        out << '\n';
    }
}

std::string to_text(const TemplateDocument& doc) {
    std::ostringstream out;
    write_template(out, doc);
    return out.str();
}

TemplateDocument read_template(std::istream& in) {
    TemplateDocument doc;
    std::map<Vertex, Colour> precolour;
    std::map<Vertex, ColourSet> forbidden;
    bool have_k = false;
    bool have_palette = false;
    int line_no = 0;
    std::string line;
    auto fail = [&](const std::string& what) {
        throw ParseError("template line " + std::to_string(line_no) + ": " + what);
    };
    auto read_set = [&](std::istringstream& fields) {
        ColourSet set;
        Colour c = 0;
        while (fields >> c)
            set.insert(c);
        if (!fields.eof())
            fail("bad colour");
        return set;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string directive;
        if (!(fields >> directive))
            continue;
        auto expect_end = [&] {
            if (fields >> std::ws; !fields.eof())
                fail("unexpected trailing fields");
        };
        if (directive == "k") {
            if (!(fields >> doc.k) || doc.k < 1)
                fail("bad k");
            expect_end();
            have_k = true;
        } else if (directive == "palette") {
            std::string mode;
            fields >> mode;
            if (mode == "plain") {
                int size = 0;
                if (!(fields >> size) || size < 0)
                    fail("bad palette size");
                doc.palette = Palette::plain(size);
                expect_end();
            } else if (mode == "list") {
                doc.palette = Palette::with_lists({});
                expect_end();
            } else {
                fail("palette mode must be plain or list");
            }
            have_palette = true;
        } else if (directive == "list") {
            Vertex v = 0;
            if (!have_palette || doc.palette.mode != PaletteMode::list)
                fail("list line outside a list palette");
            if (!(fields >> v) || v < 0)
                fail("bad vertex");
            if (doc.palette.lists.contains(v))
                fail("duplicate list");
            doc.palette.lists[v] = read_set(fields);
        } else if (directive == "precolour") {
            Vertex v = 0;
            Colour c = 0;
            if (!(fields >> v >> c) || v < 0)
                fail("bad precolour line");
            expect_end();
            if (!precolour.emplace(v, c).second)
                fail("vertex pre-coloured twice");
        } else if (directive == "forbid") {
            Vertex v = 0;
            if (!(fields >> v) || v < 0)
                fail("bad vertex");
            auto set = read_set(fields);
            forbidden[v].insert(set.begin(), set.end());
        } else {
            fail("unknown directive '" + directive + "'");
        }
    }
    if (!have_k || !have_palette)
        throw ParseError("template: missing k or palette line");
    try {
        doc.tmpl = Template(std::move(precolour), std::move(forbidden));
    } catch (const MalformedTemplate& e) {
        throw ParseError(std::string("template: ") + e.what());
    }
    return doc;
}

TemplateDocument read_template_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_template(in);
}

}  // namespace kcx
