#include "expunc/io.hpp"

#include <fstream>
#include <sstream>

namespace expunc {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    // Next non-empty, non-comment line split into tokens; empty at EOF.
    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<std::string> tok;
            for (std::string t; ls >> t;) tok.push_back(t);
            if (!tok.empty()) return tok;
        }
        return {};
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    }

    int to_int(const std::string& s) const {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) fail("expected integer, got '" + s + "'");
            return v;
        } catch (const std::logic_error&) {
            fail("expected integer, got '" + s + "'");
        }
    }

    Scalar to_scalar(const std::string& s) const {
        try {
            return Scalar::parse(s);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
};

Values read_values(LineReader& r, int n, const char* what) {
    Values vals(n);
    std::vector<char> seen(n, 0);
    for (int k = 0; k < n; ++k) {
        auto tok = r.next();
        if (tok.size() != 2) r.fail(std::string("expected 'i value' in ") + what + " block");
        int i = r.to_int(tok[0]);
        if (i < 0 || i >= n || seen[i]) r.fail(std::string("bad id in ") + what + " block");
        seen[i] = 1;
        vals[i] = r.to_scalar(tok[1]);
    }
    return vals;
}

void write_values(std::ostringstream& out, const char* tag, const Values& vals) {
    out << tag << '\n';
    for (std::size_t i = 0; i < vals.size(); ++i) out << i << ' ' << vals[i].str() << '\n';
}

}  // namespace

std::string write_document(const Document& doc) {
    const Instance& inst = doc.instance;
    std::ostringstream out;
    out << problem_tag(inst.problem) << ' ' << inst.size() << ' '
        << (inst.is_graph() ? inst.vertices : static_cast<int>(inst.sets.size())) << '\n';
    for (int i = 0; i < inst.size(); ++i) {
        const Interval& iv = inst.intervals[i];
        if (iv.is_trivial())
            out << i << " TRIV " << iv.value().str() << '\n';
        else
            out << i << " OPEN " << iv.lower().str() << ' ' << iv.upper().str() << '\n';
    }
    if (inst.is_graph()) {
        for (auto [u, v] : inst.ends) out << "E " << u << ' ' << v << '\n';
    } else {
        for (const auto& s : inst.sets) {
            out << "S " << s.size();
            for (int id : s) out << ' ' << id;
            out << '\n';
        }
    }
    if (doc.real) write_values(out, "REAL", *doc.real);
    if (doc.pred) write_values(out, "PRED", *doc.pred);
    return out.str();
}

Document read_document(std::string_view text) {
    LineReader r(text);
    Document doc;
    Instance& inst = doc.instance;
    auto head = r.next();
    if (head.size() != 3) r.fail("expected header 'MIN|SORT|MST n m'");
    if (head[0] == "MIN")
        inst.problem = Problem::Minimum;
    else if (head[0] == "SORT")
        inst.problem = Problem::Sorting;
    else if (head[0] == "MST")
        inst.problem = Problem::Mst;
    else
        r.fail("unknown problem '" + head[0] + "'");
    const int n = r.to_int(head[1]);
    const int m = r.to_int(head[2]);
    if (n < 0 || m < 0) r.fail("negative size");

    inst.intervals.resize(n);
    std::vector<char> seen(n, 0);
    for (int k = 0; k < n; ++k) {
        auto tok = r.next();
        if (tok.size() < 3) r.fail("expected interval line");
        int i = r.to_int(tok[0]);
        if (i < 0 || i >= n || seen[i]) r.fail("bad interval id");
        seen[i] = 1;
        try {
            if (tok[1] == "OPEN" && tok.size() == 4)
                inst.intervals[i] = Interval::open(r.to_scalar(tok[2]), r.to_scalar(tok[3]));
            else if (tok[1] == "TRIV" && tok.size() == 3)
                inst.intervals[i] = Interval::point(r.to_scalar(tok[2]));
            else
                r.fail("expected 'i OPEN L U' or 'i TRIV W'");
        } catch (const ContractViolation& e) {
            r.fail(e.what());
        }
    }

    if (inst.is_graph()) {
        inst.vertices = m;
        for (int k = 0; k < n; ++k) {
            auto tok = r.next();
            if (tok.size() != 3 || tok[0] != "E") r.fail("expected 'E u v'");
            inst.ends.emplace_back(r.to_int(tok[1]), r.to_int(tok[2]));
        }
    } else {
        for (int k = 0; k < m; ++k) {
            auto tok = r.next();
            if (tok.size() < 2 || tok[0] != "S") r.fail("expected 'S k id...'");
            int cnt = r.to_int(tok[1]);
            if (cnt < 0 || static_cast<int>(tok.size()) != cnt + 2) r.fail("set size does not match");
            std::vector<int> s;
            for (int j = 0; j < cnt; ++j) s.push_back(r.to_int(tok[2 + j]));
            inst.sets.push_back(std::move(s));
        }
    }

    for (auto tok = r.next(); !tok.empty(); tok = r.next()) {
        if (tok.size() == 1 && tok[0] == "REAL" && !doc.real)
            doc.real = read_values(r, n, "REAL");
        else if (tok.size() == 1 && tok[0] == "PRED" && !doc.pred)
            doc.pred = read_values(r, n, "PRED");
        else
            r.fail("unexpected '" + tok[0] + "'");
    }

    try {
        inst.validate();
        if (doc.real) check_values(inst, *doc.real, "REAL");
        if (doc.pred) check_values(inst, *doc.pred, "PRED");
    } catch (const ContractViolation& e) {
        throw std::invalid_argument(e.what());
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

Document load_document(const std::string& path) { return read_document(read_file(path)); }

void save_document(const std::string& path, const Document& doc) { write_file(path, write_document(doc)); }

Distribution read_distribution(std::string_view text, const Instance& inst) {
    LineReader r(text);
    const int n = inst.size();
    Distribution dist;
    dist.support.resize(n);
    std::vector<char> seen(n, 0);
    for (auto tok = r.next(); !tok.empty(); tok = r.next()) {
        if (tok[0] != "D" || tok.size() < 3) r.fail("expected 'D i k (v p)...'");
        int i = r.to_int(tok[1]);
        int k = r.to_int(tok[2]);
        if (i < 0 || i >= n || seen[i]) r.fail("bad element id");
        if (k < 1 || static_cast<int>(tok.size()) != 3 + 2 * k) r.fail("support size does not match");
        seen[i] = 1;
        Scalar total(0);
        for (int j = 0; j < k; ++j) {
            Scalar v = r.to_scalar(tok[3 + 2 * j]);
            Scalar p = r.to_scalar(tok[4 + 2 * j]);
            if (!inst.intervals[i].contains(v)) r.fail("support value outside interval");
            if (p <= Scalar(0)) r.fail("probability must be positive");
            total += p;
            dist.support[i].emplace_back(v, p);
        }
        if (total != Scalar(1)) r.fail("probabilities do not sum to 1");
    }
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        if (inst.intervals[i].is_open()) r.fail("no distribution for open element " + std::to_string(i));
        dist.support[i].emplace_back(inst.intervals[i].value(), Scalar(1));
    }
    return dist;
}

std::string write_distribution(const Distribution& dist) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        out << "D " << i << ' ' << dist.support[i].size();
        for (const auto& [v, p] : dist.support[i]) out << ' ' << v.str() << ' ' << p.str();
        out << '\n';
    }
    return out.str();
}

}  // namespace expunc
