#include "ydn/inputspec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ydn/errors.hpp"
#include "ydn/group.hpp"

namespace ydn {

namespace {

const char* kFormatTag = "ydnichols-input-v1";

[[noreturn]] void fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Splits at top level only, so commas inside "z(N,k)" stay put.
std::vector<std::string> split_entries(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_long(const std::string& tok0, int line) {
    std::string tok = trim(tok0);
    size_t i = tok.size() > 0 && (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) fail(line, "expected an integer, got '" + tok0 + "'");
    for (size_t j = i; j < tok.size(); ++j)
        if (!std::isdigit((unsigned char)tok[j])) fail(line, "expected an integer, got '" + tok0 + "'");
    try {
        return std::stol(tok);
    } catch (const std::exception&) {
        fail(line, "integer out of range: '" + tok0 + "'");
    }
}

// [-]INT | [-]INT/INT | [-]z(N,K); the only scalar forms in a document.
cyc parse_scalar(const std::string& tok0, int line, long& conductor_acc) {
    std::string tok = trim(tok0);
    if (tok.empty()) fail(line, "empty scalar entry");
    bool neg = false;
    if (tok[0] == '-') {
        neg = true;
        tok = trim(tok.substr(1));
    }
    cyc v;
    if (tok.rfind("z(", 0) == 0) {
        if (tok.back() != ')') fail(line, "malformed root literal '" + tok0 + "'");
        std::vector<std::string> args = split(tok.substr(2, tok.size() - 3), ',');
        if (args.size() != 2) fail(line, "root literal needs two arguments: '" + tok0 + "'");
        const long n = parse_long(args[0], line);
        const long k = parse_long(args[1], line);
        if (n < 1) fail(line, "root order must be positive in '" + tok0 + "'");
        v = cyc::root(n, k);
    } else if (tok.find('/') != std::string::npos) {
        std::vector<std::string> pq = split(tok, '/');
        if (pq.size() != 2) fail(line, "malformed fraction '" + tok0 + "'");
        const long p = parse_long(pq[0], line);
        const long q = parse_long(pq[1], line);
        if (q == 0) fail(line, "zero denominator in '" + tok0 + "'");
        v = cyc::rational(p, q);
    } else {
        v = cyc(parse_long(tok, line));
    }
    conductor_acc = lcm_long(conductor_acc, v.conductor());
    return neg ? -v : v;
}

// Rows ';'-separated, entries ','-separated, all rows the same length.
Mat parse_matrix(const std::string& body, int line, long& conductor_acc) {
    std::vector<std::vector<cyc>> rows;
    for (const std::string& r : split(body, ';')) {
        std::vector<cyc> row;
        for (const std::string& e : split_entries(r, ','))
            row.push_back(parse_scalar(e, line, conductor_acc));
        rows.push_back(std::move(row));
    }
    const int nr = (int)rows.size();
    const int nc = (int)rows[0].size();
    for (const auto& r : rows)
        if ((int)r.size() != nc) fail(line, "ragged matrix rows");
    Mat m = linalg::zero(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    return m;
}

// Length-prefixed canonical scalar, immune to separators inside str().
void put_scalar(std::ostringstream& os, const cyc& v) {
    const std::string s = v.str();
    os << s.size() << ":" << s << " ";
}

void put_matrix(std::ostringstream& os, const Mat& m) {
    os << m.rows() << "x" << m.cols() << " ";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) put_scalar(os, m(i, j));
}

}  // namespace

InputSpec parse_input(const std::string& text) {
    InputSpec spec;
    long stated_conductor = 0;
    long conductor_acc = 1;

    enum class Sect { top, diagonal, module };
    Sect sect = Sect::top;
    ModuleSpec cur;
    bool cur_has_degrees = false, cur_has_action = false, have_q = false;

    auto flush_module = [&](int line) {
        if (sect != Sect::module) return;
        if (!cur_has_degrees) fail(line, "module section is missing 'degrees'");
        if (!cur_has_action) fail(line, "module section is missing 'action'");
        spec.modules.push_back(cur);
        cur = ModuleSpec{};
        cur_has_degrees = cur_has_action = false;
    };

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;

        if (s == "[diagonal]") {
            flush_module(line);
            if (have_q || !spec.modules.empty())
                fail(line, "the diagonal shorthand must be the only module section");
            sect = Sect::diagonal;
            continue;
        }
        if (s == "[module]") {
            flush_module(line);
            if (have_q) fail(line, "cannot mix [module] sections with the diagonal shorthand");
            sect = Sect::module;
            continue;
        }
        if (s.front() == '[') fail(line, "unknown section '" + s + "'");

        const size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (val.empty()) fail(line, "empty value for '" + key + "'");

        if (sect == Sect::top) {
            if (key == "conductor") {
                if (stated_conductor) fail(line, "duplicate 'conductor'");
                stated_conductor = parse_long(val, line);
                if (stated_conductor < 1) fail(line, "conductor must be positive");
            } else if (key == "group") {
                if (!spec.invariant_factors.empty()) fail(line, "duplicate 'group'");
                for (const std::string& f : split(val, ',')) {
                    const long d = parse_long(f, line);
                    if (d < 1) fail(line, "invariant factors must be positive");
                    spec.invariant_factors.push_back(d);
                }
            } else {
                fail(line, "unknown key '" + key + "' outside a section");
            }
        } else if (sect == Sect::diagonal) {
            if (key != "q") fail(line, "unknown key '" + key + "' in [diagonal]");
            if (have_q) fail(line, "duplicate 'q'");
            Mat q = parse_matrix(val, line, conductor_acc);
            if (q.rows() != q.cols()) fail(line, "q must be square");
            for (int i = 0; i < q.rows(); ++i)
                for (int j = 0; j < q.cols(); ++j)
                    if (q(i, j).root_order() == 0) fail(line, "q entries must be roots of unity");
            ModuleSpec d;
            d.diagonal = true;
            d.q = q;
            spec.modules.push_back(std::move(d));
            have_q = true;
        } else {
            if (key == "degrees") {
                if (cur_has_degrees) fail(line, "duplicate 'degrees'");
                for (const std::string& t : split(val, ','))
                    cur.degrees.push_back((int)parse_long(t, line));
                if (cur.degrees.empty()) fail(line, "empty degree list");
                cur_has_degrees = true;
            } else if (key == "action") {
                if (cur_has_action) fail(line, "duplicate 'action'");
                for (const std::string& m : split(val, '|'))
                    cur.gen_action.push_back(parse_matrix(m, line, conductor_acc));
                cur_has_action = true;
            } else {
                fail(line, "unknown key '" + key + "' in [module]");
            }
        }
    }
    flush_module(line + 1);

    if (sect == Sect::diagonal && !have_q) fail(line + 1, "the [diagonal] section is missing 'q'");
    if (spec.modules.empty()) fail(line + 1, "no module data in the document");
    if (!have_q && spec.invariant_factors.empty())
        fail(line + 1, "explicit modules need a 'group' line");
    if (stated_conductor && stated_conductor % conductor_acc != 0)
        fail(line + 1, "stated conductor does not cover all root literals");
    spec.conductor = stated_conductor ? stated_conductor : conductor_acc;
    return spec;
}

InputSpec load_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_input(buf.str());
}

std::string normalized(const InputSpec& in) {
    std::ostringstream os;
    os << "conductor " << in.conductor << "\n";
    os << "group";
    for (long f : in.invariant_factors) os << " " << f;
    os << "\n";
    for (const ModuleSpec& m : in.modules) {
        if (m.diagonal) {
            os << "diagonal ";
            put_matrix(os, m.q);
            os << "\n";
        } else {
            os << "module";
            for (int d : m.degrees) os << " " << d;
            os << "\n";
            for (const Mat& a : m.gen_action) {
                os << "gen ";
                put_matrix(os, a);
                os << "\n";
            }
        }
    }
    return os.str();
}

std::uint64_t content_hash(const InputSpec& in) {
    const std::string payload = std::string(kFormatTag) + "\n" + normalized(in);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string content_hash_hex(const InputSpec& in) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = content_hash(in);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

BuiltModules build_modules(const InputSpec& in) {
    if (in.modules.empty()) throw input_error("no modules in the input");
    BuiltModules out;

    if (in.modules[0].diagonal) {
        DiagonalData dd = make_diagonal(in.modules[0].q);
        if (!in.invariant_factors.empty() && in.invariant_factors != dd.G->invariant_factors())
            throw input_error("stated group does not match the one defined by the q matrix");
        out.G = dd.G;
        out.entries = diagonal_tuple(dd);
        return out;
    }

    auto G = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_invariant_factors(in.invariant_factors));
    const int ngen = (int)in.invariant_factors.size();
    for (size_t mi = 0; mi < in.modules.size(); ++mi) {
        const ModuleSpec& ms = in.modules[mi];
        const std::string where = "module " + std::to_string(mi) + ": ";
        const int dim = (int)ms.degrees.size();
        if ((int)ms.gen_action.size() != ngen)
            throw input_error(where + "expected one action matrix per invariant factor");
        for (const Mat& a : ms.gen_action)
            if (a.rows() != dim || a.cols() != dim)
                throw input_error(where + "action matrix size does not match the degree list");
        for (int d : ms.degrees)
            if (d < 0 || d >= G->order()) throw input_error(where + "degree index out of range");

        YDModule M;
        M.G = G;
        M.degree = ms.degrees;
        M.action.resize(G->order());
        for (int g = 0; g < G->order(); ++g) {
            const std::vector<long> t = G->tuple_of(g);
            Mat a = linalg::identity(dim);
            for (int j = 0; j < ngen; ++j)
                for (long p = 0; p < t[j]; ++p) a = ms.gen_action[j] * a;
            M.action[g] = std::move(a);
        }
        try {
            yd_validate(M);
        } catch (const error& e) {
            throw input_error(where + e.what());
        }
        out.entries.push_back(std::move(M));
    }
    out.G = G;
    return out;
}

}  // namespace ydn
