#include "monic/presentation.hpp"

#include "monic/errors.hpp"
#include "monic/padic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace monic {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::int64_t parse_positive_int(const std::string& s, int line_no, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw ParseError("expected a positive integer for " + what + ", found '" + s + "'",
                         line_no, 1);
    if (s.size() > 18) throw ParseError(what + " out of range", line_no, 1);
    return std::stoll(s);
}

}  // namespace

std::string CoefTag::str() const {
    switch (kind) {
        case CoefKind::Q: return "Q";
        case CoefKind::Fp: return "Fp " + std::to_string(p);
        default: return "Zp " + std::to_string(p);
    }
}

Presentation parse_presentation_text(std::string_view text, const std::string& source_name) {
    std::vector<std::string> gen_names;
    std::vector<std::int64_t> gen_weights;
    bool have_generators = false, have_order = false, have_coefficients = false;
    OrderKind order_kind = OrderKind::Deglex;
    std::vector<std::string> order_names;
    CoefTag tag;
    std::vector<std::pair<int, std::string>> relation_lines;
    bool in_relations = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        bool indented = std::isspace(static_cast<unsigned char>(line[0]));
        if (indented && in_relations) {
            relation_lines.emplace_back(line_no, line);
            continue;
        }
        in_relations = false;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value' line", line_no, 1);
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (key == "generators") {
            have_generators = true;
            for (const auto& tok : split_ws(value)) {
                auto sep = tok.find(':');
                if (sep == std::string::npos) {
                    gen_names.push_back(tok);
                    gen_weights.push_back(1);
                } else {
                    gen_names.push_back(tok.substr(0, sep));
                    gen_weights.push_back(
                        parse_positive_int(tok.substr(sep + 1), line_no, "generator weight"));
                    if (gen_weights.back() < 1)
                        throw ParseError("generator weight must be >= 1", line_no, 1);
                }
            }
            if (gen_names.empty()) throw ParseError("no generators listed", line_no, 1);
        } else if (key == "order") {
            have_order = true;
            auto toks = split_ws(value);
            if (toks.empty()) throw ParseError("missing order kind", line_no, 1);
            if (toks[0] == "deglex")
                order_kind = OrderKind::Deglex;
            else if (toks[0] == "degrevlex")
                order_kind = OrderKind::Degrevlex;
            else
                throw ParseError("unknown order kind '" + toks[0] + "' (expected deglex or degrevlex)",
                                 line_no, 1);
            order_names.assign(toks.begin() + 1, toks.end());
        } else if (key == "coefficients") {
            have_coefficients = true;
            auto toks = split_ws(value);
            if (toks.empty()) throw ParseError("missing coefficient ring", line_no, 1);
            if (toks[0] == "Q") {
                if (toks.size() != 1) throw ParseError("Q takes no parameter", line_no, 1);
                tag = CoefTag{CoefKind::Q, 0};
            } else if (toks[0] == "Fp" || toks[0] == "Zp") {
                if (toks.size() != 2)
                    throw ParseError(toks[0] + " needs a prime parameter", line_no, 1);
                std::int64_t p = parse_positive_int(toks[1], line_no, "prime");
                tag = CoefTag{toks[0] == "Fp" ? CoefKind::Fp : CoefKind::Zp, p};
            } else {
                throw ParseError("unknown coefficient ring '" + toks[0] +
                                 "' (expected Q, Fp p or Zp p)", line_no, 1);
            }
        } else if (key == "relations") {
            if (!blank(value))
                throw ParseError("relations must follow on indented lines", line_no, 1);
            in_relations = true;
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
    }

    if (!have_generators) throw ParseError("missing 'generators:' line in " + source_name, 1, 1);
    if (!have_order) throw ParseError("missing 'order:' line in " + source_name, 1, 1);
    if (!have_coefficients)
        throw ParseError("missing 'coefficients:' line in " + source_name, 1, 1);
    if (relation_lines.empty())
        throw ParseError("missing or empty 'relations:' section in " + source_name, 1, 1);

    Alphabet alphabet(gen_names, gen_weights);
    std::vector<int> small_to_large;
    for (const auto& name : order_names) {
        int idx = alphabet.index_of(name);
        if (idx < 0) throw ParseError("order lists unknown generator '" + name + "'", 1, 1);
        small_to_large.push_back(idx);
    }
    MonomialOrder order =
        MonomialOrder::from_precedence(order_kind, small_to_large, alphabet.size());

    Presentation pres;
    pres.ctx = make_context(std::move(alphabet), std::move(order));
    pres.coef = tag;
    if (tag.kind != CoefKind::Q) (void)PadicValuation(tag.p);  // primality check

    for (const auto& [lno, src] : relation_lines) {
        try {
            pres.relations.push_back(parse_poly(src, pres.ctx));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " [relation at line " + std::to_string(lno) +
                             " of " + source_name + "]", lno, e.col());
        }
        std::string trimmed = src;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
        pres.relation_sources.push_back(trimmed);
    }

    if (tag.kind == CoefKind::Zp) {
        PadicValuation val(tag.p);
        for (std::size_t i = 0; i < pres.relations.size(); ++i)
            for (const auto& t : pres.relations[i].terms())
                if (!val.in_Ov(t.coef))
                    throw HypothesisError("relation " + std::to_string(i + 1) + " of " +
                                          source_name + " has coefficient " + t.coef.str() +
                                          " outside O_v at p = " + std::to_string(tag.p));
    }
    return pres;
}

Presentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str(), path);
}

MonicSet<Rational> Presentation::rational_monic_set() const {
    return MonicSet<Rational>(ctx, relations);
}

MonicSet<Fp> Presentation::fp_monic_set() const {
    if (coef.kind != CoefKind::Fp)
        throw Error("presentation coefficients are " + coef.str() + ", not Fp");
    PadicValuation val(coef.p);
    std::vector<Poly<Fp>> converted;
    converted.reserve(relations.size());
    for (const auto& f : relations) converted.push_back(to_fp(f, val));
    return MonicSet<Fp>(ctx, std::move(converted));
}

}  // namespace monic
