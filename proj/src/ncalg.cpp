#include "qalg/ncalg.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace qalg {

namespace {

// Element of the free algebra on the generators: word -> coefficient.
// Scalars are the empty word.  Only small degrees ever appear.
using Word = std::vector<int>;
using NCElem = std::map<Word, RatFunc>;

NCElem nc_scalar(const RatFunc& c) {
    NCElem e;
    if (!is_zero(c)) e[{}] = c;
    return e;
}

NCElem nc_add(const NCElem& a, const NCElem& b) {
    NCElem r = a;
    for (const auto& [w, c] : b) {
        auto it = r.find(w);
        if (it == r.end())
            r.emplace(w, c);
        else {
            it->second += c;
            if (is_zero(it->second)) r.erase(it);
        }
    }
    return r;
}

NCElem nc_neg(const NCElem& a) {
    NCElem r;
    for (const auto& [w, c] : a) r.emplace(w, RatFunc(0) - c);
    return r;
}

NCElem nc_mul(const NCElem& a, const NCElem& b) {
    NCElem r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            if (w.size() > 4) throw NotQuadratic("term of degree > 4 in a relation");
            RatFunc c = ca * cb;
            auto it = r.find(w);
            if (it == r.end())
                r.emplace(std::move(w), c);
            else {
                it->second += c;
                if (is_zero(it->second)) r.erase(it);
            }
        }
    return r;
}

// expr := [sign] term ((+|-) term)*; term := factor (* factor)*;
// factor := primary [^ nat]; primary := number | alpha | gen | (expr)
class NCParser {
public:
    NCParser(std::string_view text, const VarSetPtr& gens, bool over_alpha)
        : lex_{text}, gens_(gens), over_alpha_(over_alpha) {}

    NCElem parse_side(char stop) {
        NCElem e = expr();
        if (lex_.peek() != stop)
            throw ParseError("unexpected input at position " + std::to_string(lex_.pos));
        return e;
    }
    void expect(char c) { lex_.expect(c); }
    bool at_end() { return lex_.eof(); }

private:
    NCElem expr() {
        bool neg = false;
        if (lex_.accept('-'))
            neg = true;
        else
            lex_.accept('+');
        NCElem acc = term();
        if (neg) acc = nc_neg(acc);
        for (;;) {
            if (lex_.accept('+'))
                acc = nc_add(acc, term());
            else if (lex_.accept('-'))
                acc = nc_add(acc, nc_neg(term()));
            else
                break;
        }
        return acc;
    }
    NCElem term() {
        NCElem acc = factor();
        while (lex_.accept('*')) acc = nc_mul(acc, factor());
        return acc;
    }
    NCElem factor() {
        NCElem base = primary();
        if (lex_.accept('^')) {
            unsigned e = lex_.natural();
            if (e > 16) throw ParseError("exponent too large");
            NCElem acc = nc_scalar(RatFunc(1));
            for (unsigned k = 0; k < e; ++k) acc = nc_mul(acc, base);
            base = acc;
        }
        return base;
    }
    NCElem primary() {
        if (lex_.accept('(')) {
            NCElem e = expr();
            lex_.expect(')');
            return e;
        }
        if (auto num = lex_.number()) return nc_scalar(RatFunc(*num));
        if (auto nm = lex_.name()) {
            if (*nm == "alpha") {
                if (!over_alpha_) throw ParseError("alpha is not a scalar of this field");
                return nc_scalar(RatFunc::alpha());
            }
            int g = gens_->index(*nm);
            if (g < 0) throw ParseError("unknown generator '" + *nm + "'");
            NCElem e;
            e[{g}] = RatFunc(1);
            return e;
        }
        throw ParseError("expected a number, name or '(' at position " + std::to_string(lex_.pos));
    }

    detail::Lexer lex_;
    VarSetPtr gens_;
    bool over_alpha_;
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

RelTensor tensor_of(const NCElem& e) {
    RelTensor t;
    t.fill(RatFunc(0));
    for (const auto& [w, c] : e) {
        if (w.size() != 2) throw NotQuadratic("relation has a term that is not x_i * x_j");
        t[static_cast<size_t>(4 * w[0] + w[1])] = c;
    }
    return t;
}

} // namespace

QuadAlgebra parse_algebra(std::string_view text) {
    QuadAlgebra alg;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));
        if (key == "gens") {
            if (alg.gens) throw ParseError("duplicate gens line");
            std::istringstream gs(value);
            std::vector<std::string> names;
            std::string n;
            while (gs >> n) names.push_back(n);
            if (names.size() != 4)
                throw ParseError("expected exactly four generators, got " +
                                 std::to_string(names.size()));
            alg.gens = make_varset(names);
        } else if (key == "field") {
            if (value == "Q")
                alg.over_alpha = false;
            else if (value == "Q(alpha)")
                alg.over_alpha = true;
            else
                throw ParseError("unknown field '" + value + "'");
        } else if (key == "rel") {
            if (!alg.gens) throw ParseError("rel before gens");
            NCParser p(value, alg.gens, alg.over_alpha);
            NCElem lhs = p.parse_side('=');
            p.expect('=');
            NCElem rhs = p.parse_side('\0');
            if (!p.at_end())
                throw ParseError("line " + std::to_string(lineno) + ": trailing input");
            alg.relations.push_back(tensor_of(nc_add(lhs, nc_neg(rhs))));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!alg.gens) throw ParseError("missing gens line");
    if (alg.relations.empty()) throw ParseError("no relations");
    return alg;
}

QuadAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

RatFunc pair_tensors(const RelTensor& a, const RelTensor& b) {
    RatFunc s(0);
    for (size_t m = 0; m < 16; ++m) s += a[m] * b[m];
    return s;
}

Mat<MPoly<RatFunc>> build_relation_matrix(const QuadAlgebra& alg) {
    int n = alg.gen_count();
    Mat<MPoly<RatFunc>> M(static_cast<int>(alg.relations.size()), n, MPoly<RatFunc>(alg.gens));
    for (size_t k = 0; k < alg.relations.size(); ++k)
        for (int j = 0; j < n; ++j) {
            MPoly<RatFunc> entry(alg.gens);
            for (int i = 0; i < n; ++i) {
                const RatFunc& c = alg.relations[k][static_cast<size_t>(4 * i + j)];
                if (!is_zero(c)) entry += c * MPoly<RatFunc>::variable(alg.gens, i);
            }
            M.at(static_cast<int>(k), j) = entry;
        }
    return M;
}

KoszulDual koszul_dual(const QuadAlgebra& alg) {
    Mat<RatFunc> rel(static_cast<int>(alg.relations.size()), 16, RatFunc(0));
    for (size_t k = 0; k < alg.relations.size(); ++k)
        for (int m = 0; m < 16; ++m) rel.at(static_cast<int>(k), m) = alg.relations[k][static_cast<size_t>(m)];
    if (rank(rel) != static_cast<int>(alg.relations.size()))
        throw RankDeficient("dependent relation set");
    KoszulDual d;
    d.zvars = make_varset({"z1", "z2", "z3", "z4"});
    // Canonical basis of the annihilator: reduced row echelon form over the
    // word coordinates, so the presentation does not depend on how the null
    // space was computed.
    auto ann = null_space(rel);
    Mat<RatFunc> dual_rows(static_cast<int>(ann.size()), 16, RatFunc(0));
    for (size_t k = 0; k < ann.size(); ++k)
        for (int m = 0; m < 16; ++m) dual_rows.at(static_cast<int>(k), m) = ann[k][static_cast<size_t>(m)];
    rref(dual_rows);
    for (int k = 0; k < dual_rows.rows(); ++k) {
        RelTensor t;
        for (int m = 0; m < 16; ++m) t[static_cast<size_t>(m)] = dual_rows.at(k, m);
        d.dual_relations.push_back(t);
    }
    QuadAlgebra dual;
    dual.gens = d.zvars;
    dual.over_alpha = alg.over_alpha;
    dual.relations = d.dual_relations;
    d.matrix_hat = build_relation_matrix(dual);
    return d;
}

namespace {

// Shared quotient construction: rows of `rel` span the subspace to kill,
// columns are words in decreasing order of priority (lowest flat index
// first).  Basis = non-pivot columns; rewrite sends every word there.
void quotient_from_rows(Mat<RatFunc> rel, std::vector<int>& basis, Mat<RatFunc>& rewrite) {
    int cols = rel.cols();
    std::vector<int> pivots = rref(rel);
    std::vector<int> pivot_row(static_cast<size_t>(cols), -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_row[static_cast<size_t>(pivots[r])] = static_cast<int>(r);
    basis.clear();
    for (int m = 0; m < cols; ++m)
        if (pivot_row[static_cast<size_t>(m)] < 0) basis.push_back(m);
    rewrite = Mat<RatFunc>(static_cast<int>(basis.size()), cols, RatFunc(0));
    for (size_t b = 0; b < basis.size(); ++b) rewrite.at(static_cast<int>(b), basis[b]) = RatFunc(1);
    for (int m = 0; m < cols; ++m) {
        int r = pivot_row[static_cast<size_t>(m)];
        if (r < 0) continue;
        // word m = -(rest of its reduced row), supported on basis words
        for (size_t b = 0; b < basis.size(); ++b)
            rewrite.at(static_cast<int>(b), m) = RatFunc(0) - rel.at(r, basis[b]);
    }
}

} // namespace

DegreeTwo degree_two_quotient(const QuadAlgebra& alg) {
    Mat<RatFunc> rel(static_cast<int>(alg.relations.size()), 16, RatFunc(0));
    for (size_t k = 0; k < alg.relations.size(); ++k)
        for (int m = 0; m < 16; ++m) rel.at(static_cast<int>(k), m) = alg.relations[k][static_cast<size_t>(m)];
    DegreeTwo q;
    quotient_from_rows(std::move(rel), q.basis, q.rewrite);
    return q;
}

DegreeThree degree_three_quotient(const QuadAlgebra& alg) {
    size_t nrel = alg.relations.size();
    Mat<RatFunc> rel(static_cast<int>(2 * 4 * nrel), 64, RatFunc(0));
    int row = 0;
    for (const auto& t : alg.relations)
        for (int k = 0; k < 4; ++k, ++row)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    rel.at(row, 16 * i + 4 * j + k) = t[static_cast<size_t>(4 * i + j)];
    for (const auto& t : alg.relations)
        for (int k = 0; k < 4; ++k, ++row)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    rel.at(row, 16 * k + 4 * i + j) = t[static_cast<size_t>(4 * i + j)];
    DegreeThree q;
    quotient_from_rows(std::move(rel), q.basis, q.rewrite);
    return q;
}

std::array<RelTensor, 4> normalizing_sequence_elements(const RatFunc& delta, const RatFunc& eps) {
    auto e = [](int i, int j, const RatFunc& c) {
        RelTensor t;
        t.fill(RatFunc(0));
        t[static_cast<size_t>(4 * i + j)] = c;
        return t;
    };
    auto add = [](RelTensor a, const RelTensor& b) {
        for (size_t m = 0; m < 16; ++m) a[m] += b[m];
        return a;
    };
    return {
        e(1, 1, RatFunc(1)),                          // x2^2
        e(2, 2, RatFunc(1)),                          // x3^2
        add(e(2, 3, RatFunc(1)), e(3, 2, delta)),     // x3x4 + delta x4x3
        add(e(0, 1, RatFunc(1)), e(1, 0, eps)),       // x1x2 + eps x2x1
    };
}

NormalizingReport check_normalizing_degreewise(const QuadAlgebra& alg, const RatFunc& delta,
                                               const RatFunc& eps) {
    DegreeThree a3 = degree_three_quotient(alg);
    auto seq = normalizing_sequence_elements(delta, eps);
    const size_t nb = a3.basis.size();

    // Image in the degree-3 quotient of n placed next to generator g.
    auto image = [&](const RelTensor& n, int g, bool gen_on_left) {
        std::vector<RatFunc> out(nb, RatFunc(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const RatFunc& c = n[static_cast<size_t>(4 * i + j)];
                if (is_zero(c)) continue;
                int w = gen_on_left ? 16 * g + 4 * i + j : 16 * i + 4 * j + g;
                for (size_t b = 0; b < nb; ++b) {
                    const RatFunc& r = a3.rewrite.at(static_cast<int>(b), w);
                    if (!is_zero(r)) out[b] += c * r;
                }
            }
        return out;
    };

    auto rank_rows = [&](const std::vector<std::vector<RatFunc>>& rows) {
        Mat<RatFunc> m(static_cast<int>(rows.size()), static_cast<int>(nb), RatFunc(0));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < nb; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        return rank(std::move(m));
    };

    NormalizingReport rep;
    for (size_t stage = 0; stage < 4; ++stage) {
        // Degree-3 part of the two-sided ideal of the earlier elements.
        std::vector<std::vector<RatFunc>> earlier;
        for (size_t j = 0; j < stage; ++j)
            for (int g = 0; g < 4; ++g) {
                earlier.push_back(image(seq[j], g, true));
                earlier.push_back(image(seq[j], g, false));
            }
        for (int side = 0; side < 2; ++side) {
            bool gen_on_left = side == 0;
            std::vector<std::vector<RatFunc>> target = earlier;
            // gen on left needs n*V on the right-hand side, and vice versa.
            for (int g = 0; g < 4; ++g) target.push_back(image(seq[stage], g, !gen_on_left));
            int base = rank_rows(target);
            for (int g = 0; g < 4; ++g) {
                std::vector<std::vector<RatFunc>> probe = target;
                probe.push_back(image(seq[stage], g, gen_on_left));
                if (rank_rows(probe) != base) {
                    rep.ok = false;
                    std::ostringstream os;
                    os << (gen_on_left ? "x" : "n") << (gen_on_left ? g + 1 : int(stage) + 1)
                       << " * " << (gen_on_left ? "n" : "x") << (gen_on_left ? int(stage) + 1 : g + 1)
                       << " escapes the stage-" << stage + 1 << " span";
                    rep.failures.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

} // namespace qalg
