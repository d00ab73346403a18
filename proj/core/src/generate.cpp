#include "expunc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "expunc/learning.hpp"
#include "expunc/verifier.hpp"

namespace expunc {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[rng() % k]);
}

std::vector<int> open_elements(const Instance& inst) {
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (inst.intervals[i].is_open()) out.push_back(i);
    return out;
}

// Mandatory elements of a set instance under a value vector, updated one
// element at a time by recomputing only the sets that contain it.
class SetMarks {
public:
    SetMarks(const Instance& inst, Values vals) : inst_(inst), vals_(std::move(vals)), in_(inst.size()),
                                                   marks_(inst.sets.size()), count_(inst.size(), 0) {
        for (std::size_t s = 0; s < inst.sets.size(); ++s)
            for (int id : inst.sets[s]) in_[id].push_back(static_cast<int>(s));
        for (std::size_t s = 0; s < inst.sets.size(); ++s) apply(static_cast<int>(s), +1);
    }
    virtual ~SetMarks() = default;

    bool mandatory(int i) const { return count_[i] > 0; }
    const Values& values() const { return vals_; }

    // Sets vals[i] = v and returns the elements whose status may have changed.
    std::vector<int> assign(int i, const Scalar& v) {
        for (int s : in_[i]) apply(s, -1);
        vals_[i] = v;
        std::vector<int> touched;
        for (int s : in_[i]) {
            apply(s, +1);
            touched.insert(touched.end(), inst_.sets[s].begin(), inst_.sets[s].end());
        }
        return touched;
    }

private:
    void apply(int s, int sign) {
        if (sign < 0) {
            for (int id : marks_[s]) --count_[id];
            return;
        }
        marks_[s] = marked(inst_.sets[s]);
        for (int id : marks_[s]) ++count_[id];
    }

    std::vector<int> marked(const std::vector<int>& set) const {
        std::vector<int> out;
        const auto& iv = inst_.intervals;
        if (inst_.problem == Problem::Minimum) {
            if (set.size() < 2) return out;
            int a = -1, b = -1;
            for (int id : set) {
                if (a < 0 || vals_[id] < vals_[a]) {
                    b = a;
                    a = id;
                } else if (b < 0 || vals_[id] < vals_[b]) {
                    b = id;
                }
            }
            for (int id : set)
                if (iv[id].is_open() && iv[id].contains(id == a ? vals_[b] : vals_[a])) out.push_back(id);
        } else {
            for (int id : set) {
                if (!iv[id].is_open()) continue;
                for (int o : set)
                    if (o != id && iv[id].contains(vals_[o])) {
                        out.push_back(id);
                        break;
                    }
            }
        }
        return out;
    }

    const Instance& inst_;
    Values vals_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> marks_;
    std::vector<int> count_;
};

Values fill_values(const Instance& inst, const std::vector<std::vector<Scalar>>& cand, bool largest) {
    Values v(inst.size());
    for (int i = 0; i < inst.size(); ++i)
        v[i] = inst.intervals[i].is_trivial() ? inst.intervals[i].value() : (largest ? cand[i].back() : cand[i].front());
    return v;
}

std::vector<std::vector<Scalar>> all_candidates(const Instance& inst) {
    std::vector<std::vector<Scalar>> cand(inst.size());
    for (int i = 0; i < inst.size(); ++i)
        if (inst.intervals[i].is_open()) cand[i] = discretize_hypotheses(inst, i);
    return cand;
}

// Tracks the number of elements whose mandatory status under `vals` differs
// from a fixed reference. Graph instances use the full recomputation.
class Distance {
public:
    Distance(const Instance& inst, const Values& vals, std::vector<char> reference)
        : inst_(inst), ref_(std::move(reference)) {
        if (!inst.is_graph()) marks_ = std::make_unique<SetMarks>(inst, vals);
        vals_ = vals;
        now_.assign(inst.size(), 0);
        for (int i : current()) now_[i] = 1;
        for (int i = 0; i < inst.size(); ++i) total_ += now_[i] != ref_[i];
    }

    int value() const { return total_; }
    const Values& values() const { return vals_; }

    int assign(int i, const Scalar& v) {
        vals_[i] = v;
        if (marks_) {
            for (int j : marks_->assign(i, v)) refresh(j, marks_->mandatory(j));
        } else {
            std::vector<char> next(inst_.size(), 0);
            for (int j : current()) next[j] = 1;
            for (int j = 0; j < inst_.size(); ++j) refresh(j, next[j]);
        }
        return total_;
    }

private:
    std::vector<int> current() const {
        if (marks_) {
            std::vector<int> out;
            for (int i = 0; i < inst_.size(); ++i)
                if (marks_->mandatory(i)) out.push_back(i);
            return out;
        }
        return mandatory_elements(inst_, inst_.intervals, vals_);
    }

    void refresh(int j, bool m) {
        if (now_[j] == m) return;
        total_ -= now_[j] != ref_[j];
        now_[j] = m;
        total_ += now_[j] != ref_[j];
    }

    const Instance& inst_;
    std::vector<char> ref_;
    std::unique_ptr<SetMarks> marks_;
    Values vals_;
    std::vector<char> now_;
    int total_ = 0;
};

bool preprocessed(const std::vector<Interval>& pool, const std::vector<int>& set) {
    int lm = leftmost(pool, set);
    for (int k : set)
        if (k != lm && subset_of(pool[k], pool[lm])) return false;
    return true;
}

bool holds(const std::vector<int>& set, int x) { return std::find(set.begin(), set.end(), x) != set.end(); }

}  // namespace

void GenConfig::validate() const {
    if (roots < 1 || r_w < 2 || r_d < 0 || !(d > Scalar(0)) || d > Scalar(1) || target_bins < 1 || preds_per_bin < 1)
        throw ContractViolation("invalid generator configuration");
}

std::vector<Clause> parse_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long variables = -1;
    std::vector<Clause> out;
    Clause cur;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        char c = line[first];
        if (c == 'c') continue;
        if (c == '%') break;
        std::istringstream ls(line);
        if (c == 'p') {
            std::string p, fmt;
            long clauses = 0;
            if (!(ls >> p >> fmt >> variables >> clauses) || fmt != "cnf" || variables < 1 || clauses < 0)
                throw ContractViolation("malformed cnf header: " + line);
            continue;
        }
        if (variables < 0) throw ContractViolation("cnf clause before the header");
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (cur.empty()) throw ContractViolation("empty cnf clause");
                out.push_back(cur);
                cur.clear();
            } else {
                if (std::labs(lit) > variables) throw ContractViolation("cnf literal out of range");
                cur.push_back(static_cast<int>(lit));
            }
        }
        if (!ls.eof()) throw ContractViolation("malformed cnf clause: " + line);
    }
    if (variables < 0) throw ContractViolation("missing cnf header");
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Interval> clause_intervals(const std::vector<Clause>& clauses, const Scalar& eps) {
    if (!(eps > Scalar(0))) throw ContractViolation("clause interval margin must be positive");
    std::vector<Interval> out;
    for (const auto& c : clauses) {
        if (c.empty()) throw ContractViolation("empty cnf clause");
        int lo = std::abs(c.front()), hi = lo;
        for (int lit : c) {
            lo = std::min(lo, std::abs(lit));
            hi = std::max(hi, std::abs(lit));
        }
        out.push_back(Interval::open(Scalar(lo) - eps, Scalar(hi) + eps));
    }
    return out;
}

std::string random_cnf(int variables, int clauses, int width, std::uint64_t seed) {
    if (variables < width || width < 1 || clauses < 0) throw ContractViolation("invalid cnf parameters");
    std::mt19937_64 rng(seed);
    std::ostringstream os;
    os << "c random " << width << "-cnf\np cnf " << variables << ' ' << clauses << '\n';
    std::vector<int> vars(variables);
    for (int k = 0; k < variables; ++k) vars[k] = k + 1;
    for (int c = 0; c < clauses; ++c) {
        shuffle(vars, rng);
        for (int k = 0; k < width; ++k) os << (rng() & 1 ? -vars[k] : vars[k]) << ' ';
        os << "0\n";
    }
    return os.str();
}

Instance gen_minimum_instance(const std::vector<Interval>& pool, const GenConfig& cfg) {
    cfg.validate();
    for (const auto& iv : pool)
        if (iv.is_trivial()) throw ContractViolation("interval pool must be open");
    std::mt19937_64 rng(cfg.seed);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> sets;
    const int n = static_cast<int>(pool.size());
    auto emit = [&](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) sets.push_back(s);
    };
    auto neighbours = [&](int x, bool left_only) {
        std::vector<int> out;
        for (int j = 0; j < n; ++j)
            if (j != x && intersects(pool[j], pool[x]) && (!left_only || pool[j].lower() < pool[x].lower()))
                out.push_back(j);
        shuffle(out, rng);
        return out;
    };
    // Adds up to `width` members intersecting `anchor` while the set stays
    // preprocessed and `anchor` stays leftmost.
    auto fill = [&](std::vector<int>& s, int anchor, int width) {
        int added = 0;
        for (int c : neighbours(anchor, false)) {
            if (added >= width) break;
            if (holds(s, c)) continue;
            s.push_back(c);
            if (!preprocessed(pool, s) || leftmost(pool, s) != anchor) {
                s.pop_back();
                continue;
            }
            ++added;
        }
    };
    for (int r = 0; n > 0 && r < cfg.roots; ++r) {
        int root = uniform_int(rng, 0, n - 1);
        std::vector<int> s{root};
        fill(s, root, uniform_int(rng, 1, cfg.r_w));
        if (s.size() < 2) continue;
        emit(s);
        int depth = cfg.r_d > 0 ? uniform_int(rng, 0, cfg.r_d - 1) : 0;
        std::vector<int> cur = s;
        for (int step = 0; step < depth; ++step) {
            int lm = leftmost(pool, cur);
            std::vector<int> rest;
            for (int x : cur)
                if (x != lm) rest.push_back(x);
            int x = rest[rng() % rest.size()];
            std::vector<int> next;
            for (int y : neighbours(x, true)) {
                std::vector<int> t{y, x};
                if (!preprocessed(pool, t) || leftmost(pool, t) != y) continue;
                fill(t, y, uniform_int(rng, 0, cfg.r_w - 1));
                next = t;
                break;
            }
            if (next.empty()) break;
            emit(next);
            cur = next;
        }
    }
    std::set<int> used;
    for (const auto& s : sets) used.insert(s.begin(), s.end());
    std::map<int, int> id;
    Instance inst;
    inst.problem = Problem::Minimum;
    for (int p : used) {
        id[p] = inst.size();
        inst.intervals.push_back(pool[p]);
    }
    for (const auto& s : sets) {
        std::vector<int> t;
        for (int p : s) t.push_back(id[p]);
        inst.sets.push_back(t);
    }
    return inst;
}

Values random_cell_values(const Instance& inst, std::mt19937_64& rng) {
    Values v(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        if (inst.intervals[i].is_trivial()) {
            v[i] = inst.intervals[i].value();
        } else {
            auto c = discretize_hypotheses(inst, i);
            v[i] = c[rng() % c.size()];
        }
    }
    return v;
}

TrueValues gen_true_values(const Instance& inst, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrueValues out;
    if (inst.is_graph()) {
        out.values = random_cell_values(inst, rng);
        out.achieved = static_cast<int>(mandatory_elements(inst, inst.intervals, out.values).size());
        out.target = out.achieved;
        return out;
    }
    auto cand = all_candidates(inst);
    auto open = open_elements(inst);
    Distance dist(inst, fill_values(inst, cand, true), std::vector<char>(inst.size(), 0));
    for (int pass = 0; pass < 3; ++pass) {
        bool better = false;
        for (int i : open) {
            Scalar keep = dist.values()[i];
            int best = dist.value();
            Scalar pick = keep;
            for (const Scalar& c : cand[i]) {
                if (dist.assign(i, c) < best) {
                    best = dist.value();
                    pick = c;
                }
            }
            dist.assign(i, pick);
            better = better || pick != keep;
        }
        if (!better) break;
    }
    out.standard = dist.value() == 0;
    out.target = uniform_int(rng, dist.value(), static_cast<int>(open.size()));
    while (dist.value() < out.target) {
        auto order = open;
        shuffle(order, rng);
        bool moved = false;
        for (int i : order) {
            Scalar keep = dist.values()[i];
            const int before = dist.value();
            auto c = cand[i];
            shuffle(c, rng);
            for (const Scalar& x : c)
                if (x != keep && dist.assign(i, x) > before) {
                    moved = true;
                    break;
                }
            if (moved) break;
            dist.assign(i, keep);
        }
        if (!moved) break;
    }
    out.values = dist.values();
    out.achieved = static_cast<int>(mandatory_elements(inst, inst.intervals, out.values).size());
    return out;
}

std::vector<PredictionSample> gen_predictions(const Instance& inst, const Values& real, const GenConfig& cfg) {
    cfg.validate();
    check_values(inst, real, "realization");
    std::mt19937_64 rng(cfg.seed);
    auto cand = all_candidates(inst);
    auto open = open_elements(inst);
    std::vector<char> ref(inst.size(), 0);
    for (int i : mandatory_elements(inst, inst.intervals, real)) ref[i] = 1;

    std::vector<std::pair<int, Values>> snaps{{0, real}};
    for (int run = 0; run < cfg.preds_per_bin; ++run) {
        Distance dist(inst, real, ref);
        while (true) {
            auto order = open;
            shuffle(order, rng);
            const int before = dist.value();
            bool moved = false;
            for (int i : order) {
                Scalar keep = dist.values()[i];
                auto c = cand[i];
                shuffle(c, rng);
                for (const Scalar& x : c)
                    if (x != keep && dist.assign(i, x) > before) {
                        moved = true;
                        break;
                    }
                if (moved) break;
                dist.assign(i, keep);
            }
            if (!moved) break;
            snaps.emplace_back(dist.value(), dist.values());
        }
    }

    int vmax = 0;
    for (const auto& s : snaps) vmax = std::max(vmax, s.first);
    const int bins = cfg.target_bins;
    std::vector<std::vector<int>> per_bin(bins);
    std::stable_sort(snaps.begin(), snaps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::set<Values> kept{real};
    for (int k = 0; k < static_cast<int>(snaps.size()); ++k) {
        int b = std::min(bins - 1, static_cast<int>(static_cast<long>(snaps[k].first) * bins / (vmax + 1)));
        if (static_cast<int>(per_bin[b].size()) >= cfg.preds_per_bin) continue;
        if (!kept.insert(snaps[k].second).second) continue;
        per_bin[b].push_back(k);
    }
    std::vector<PredictionSample> out{{real, error_report(inst, real, real)}};
    for (const auto& bin : per_bin)
        for (int k : bin) out.push_back({snaps[k].second, error_report(inst, snaps[k].second, real)});
    return out;
}

TspGraph parse_tsplib(std::string_view text, int max_vertices) {
    if (max_vertices < 2) throw ContractViolation("need at least two vertices");
    std::istringstream in{std::string(text)};
    std::string line;
    std::string type;
    long dimension = -1;
    bool coords = false;
    std::vector<std::pair<double, double>> pts;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line == "EOF") break;
        if (coords) {
            std::istringstream ls(line);
            long idx;
            double x, y;
            if (!(ls >> idx >> x >> y)) throw ContractViolation("malformed coordinate line: " + line);
            pts.emplace_back(x, y);
            continue;
        }
        if (line.rfind("NODE_COORD_SECTION", 0) == 0) {
            if (type != "EUC_2D") throw ContractViolation("unsupported edge weight type: " + type);
            coords = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon), value = line.substr(colon + 1);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        key = trim(key);
        value = trim(value);
        if (key == "EDGE_WEIGHT_TYPE") type = value;
        if (key == "DIMENSION") dimension = std::stol(value);
    }
    if (!coords) throw ContractViolation("missing NODE_COORD_SECTION");
    if (dimension >= 0 && static_cast<long>(pts.size()) != dimension)
        throw ContractViolation("coordinate count does not match DIMENSION");
    TspGraph g;
    g.vertices = std::min<int>(static_cast<int>(pts.size()), max_vertices);
    if (g.vertices < 2) throw ContractViolation("need at least two vertices");
    for (int a = 0; a < g.vertices; ++a)
        for (int b = a + 1; b < g.vertices; ++b) {
            double dx = pts[a].first - pts[b].first, dy = pts[a].second - pts[b].second;
            g.ends.emplace_back(a, b);
            g.weight.push_back(static_cast<std::int64_t>(std::sqrt(dx * dx + dy * dy) + 0.5));
        }
    return g;
}

MstSample gen_mst_instance(const TspGraph& graph, const GenConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    MstSample out;
    Instance& inst = out.instance;
    inst.problem = Problem::Mst;
    inst.vertices = graph.vertices;
    inst.ends = graph.ends;
    for (std::size_t e = 0; e < graph.ends.size(); ++e) {
        const Scalar w(graph.weight[e]);
        out.real.push_back(w);
        if (graph.weight[e] <= 0) {
            inst.intervals.push_back(Interval::point(w));
            continue;
        }
        const Scalar eps = w / Scalar(1000);
        Scalar lo = w - w * cfg.d * Scalar(uniform_int(rng, 1, 1000), 1000);
        Scalar hi = w + w * cfg.d * Scalar(uniform_int(rng, 1, 1000), 1000);
        if (uniform_unit(rng) < 0.5) {
            if (rng() & 1)
                lo = w - eps;
            else
                hi = w + eps;
        }
        inst.intervals.push_back(Interval::open(lo, hi));
    }
    inst.validate();
    return out;
}

Instance random_set_instance(Problem problem, int n, int sets, int max_width, int span, std::mt19937_64& rng,
                             double trivial_share) {
    if (problem == Problem::Mst || n < 2 || sets < 1 || max_width < 2 || span < 2)
        throw ContractViolation("invalid random instance parameters");
    Instance inst;
    inst.problem = problem;
    for (int i = 0; i < n; ++i) {
        if (uniform_unit(rng) < trivial_share) {
            inst.intervals.push_back(Interval::point(Scalar(uniform_int(rng, 1, 2 * span - 1), 2)));
        } else {
            int lo = uniform_int(rng, 0, span - 1);
            int hi = uniform_int(rng, lo + 1, span);
            inst.intervals.push_back(Interval::open(Scalar(lo), Scalar(hi)));
        }
    }
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int s = 0; s < sets; ++s) {
        shuffle(ids, rng);
        int w = uniform_int(rng, 2, std::min(max_width, n));
        std::vector<int> set(ids.begin(), ids.begin() + w);
        std::sort(set.begin(), set.end());
        inst.sets.push_back(set);
    }
    return inst;
}

Instance random_graph_instance(int vertices, int edges, int span, std::mt19937_64& rng, double trivial_share) {
    if (vertices < 2 || edges < vertices - 1 || span < 2) throw ContractViolation("invalid random graph parameters");
    Instance inst;
    inst.problem = Problem::Mst;
    inst.vertices = vertices;
    for (int v = 1; v < vertices; ++v) inst.ends.emplace_back(uniform_int(rng, 0, v - 1), v);
    while (static_cast<int>(inst.ends.size()) < edges) {
        int a = uniform_int(rng, 0, vertices - 1), b = uniform_int(rng, 0, vertices - 1);
        if (a != b) inst.ends.emplace_back(std::min(a, b), std::max(a, b));
    }
    shuffle(inst.ends, rng);
    for (int e = 0; e < edges; ++e) {
        if (uniform_unit(rng) < trivial_share) {
            inst.intervals.push_back(Interval::point(Scalar(uniform_int(rng, 1, 2 * span - 1), 2)));
        } else {
            int lo = uniform_int(rng, 0, span - 1);
            int hi = uniform_int(rng, lo + 1, span);
            inst.intervals.push_back(Interval::open(Scalar(lo), Scalar(hi)));
        }
    }
    inst.validate();
    return inst;
}

Values random_grid_values(const Instance& inst, std::mt19937_64& rng) {
    Values v(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        const Interval& iv = inst.intervals[i];
        v[i] = iv.is_trivial() ? iv.value() : iv.lower() + (iv.upper() - iv.lower()) * Scalar(uniform_int(rng, 1, 7), 8);
    }
    return v;
}

namespace {

Fixture make(std::string name, Problem p) {
    Fixture fx;
    fx.name = std::move(name);
    fx.instance.problem = p;
    return fx;
}

void add(Fixture& fx, int lo, int hi, const char* pred, const char* real) {
    fx.instance.intervals.push_back(Interval::open(Scalar(lo), Scalar(hi)));
    fx.pred.push_back(Scalar::parse(pred));
    fx.real.push_back(Scalar::parse(real));
}

void add_dec(Fixture& fx, const char* lo, const char* hi, const char* pred, const char* real) {
    fx.instance.intervals.push_back(Interval::open(Scalar::parse(lo), Scalar::parse(hi)));
    fx.pred.push_back(Scalar::parse(pred));
    fx.real.push_back(Scalar::parse(real));
}

}  // namespace

Fixture consistency_tradeoff(int beta) {
    if (beta < 1) throw ContractViolation("beta must be positive");
    Fixture fx = make("consistency_tradeoff", Problem::Minimum);
    add(fx, 0, 2, "1.5", "0.5");
    for (int k = 1; k <= beta; ++k) add(fx, 1, 3, "2.5", k == beta ? "1.5" : "2.5");
    std::vector<int> all(beta + 1);
    for (int k = 0; k <= beta; ++k) all[k] = k;
    fx.instance.sets.push_back(all);
    return fx;
}

Fixture wrong_predictions(int n) {
    if (n < 1) throw ContractViolation("n must be positive");
    Fixture fx = make("wrong_predictions", Problem::Minimum);
    for (int k = 0; k < n; ++k) add(fx, 0, 2, "0.5", k == n - 1 ? "1.5" : "0.5");
    for (int k = 0; k < n; ++k) add(fx, 1, 3, "2.5", "2.5");
    for (int k = 0; k < n; ++k) {
        std::vector<int> s{k};
        for (int j = n; j < 2 * n; ++j) s.push_back(j);
        fx.instance.sets.push_back(s);
    }
    return fx;
}

Fixture mqd_tradeoff(int a, int b) {
    if (b < 1 || a < 2 * b) throw ContractViolation("need a >= 2b > 0");
    Fixture fx = make("mqd_tradeoff", Problem::Minimum);
    for (int k = 0; k < b; ++k) add(fx, 0, 2, "1.5", k == b - 1 ? "1.5" : "0.5");
    for (int k = b; k < a; ++k) add(fx, 1, 3, "2.5", "2.5");
    for (int k = 0; k < b; ++k) {
        std::vector<int> s{k};
        for (int j = b; j < a; ++j) s.push_back(j);
        fx.instance.sets.push_back(s);
    }
    return fx;
}

Fixture error_measure(int copies) {
    if (copies < 1) throw ContractViolation("copies must be positive");
    Fixture fx = make("error_measure", Problem::Minimum);
    for (int k = 0; k < copies; ++k) {
        add(fx, 0, 2, "1.5", "1.5");
        add(fx, 1, 3, "1.5", "2.5");
        fx.instance.sets.push_back({2 * k, 2 * k + 1});
    }
    return fx;
}

Fixture hop_example() {
    Fixture fx = make("hop_example", Problem::Minimum);
    add_dec(fx, "0", "4", "1", "2.75");
    add_dec(fx, "1.5", "6", "4.5", "2");
    add_dec(fx, "2.5", "6", "4.5", "5.5");
    add_dec(fx, "3", "6", "3.25", "3.75");
    fx.instance.sets.push_back({0, 1, 2, 3});
    return fx;
}

Fixture mandatory_example() {
    Fixture fx = make("mandatory_example", Problem::Minimum);
    add_dec(fx, "0", "4", "1", "1");
    add_dec(fx, "1.5", "6", "3.25", "5.5");
    add_dec(fx, "2.5", "6", "3.25", "5.5");
    add_dec(fx, "3", "6", "3.25", "5.5");
    fx.instance.sets.push_back({0, 1, 2, 3});
    return fx;
}

Fixture to_mst(const Fixture& fx) {
    const Instance& src = fx.instance;
    if (src.is_graph() || src.sets.empty()) throw ContractViolation("set fixture expected");
    Fixture out;
    out.name = fx.name + "_mst";
    out.instance.problem = Problem::Mst;
    const Scalar three(3);
    for (int i = 0; i < src.size(); ++i) {
        const Interval& iv = src.intervals[i];
        out.instance.intervals.push_back(iv.is_trivial() ? Interval::point(three - iv.value())
                                                         : Interval::open(three - iv.upper(), three - iv.lower()));
        out.pred.push_back(three - fx.pred[i]);
        out.real.push_back(three - fx.real[i]);
    }
    out.instance.ends.assign(src.size(), {-1, -1});

    std::vector<int> seen(src.size(), 0);
    bool disjoint = true;
    for (const auto& s : src.sets)
        for (int id : s) disjoint = disjoint && ++seen[id] == 1;

    if (disjoint) {
        int v = 0;
        for (const auto& s : src.sets) {
            const int base = v;
            const int k = static_cast<int>(s.size());
            if (k == 2) {
                out.instance.ends[s[0]] = {base, base + 1};
                out.instance.ends[s[1]] = {base, base + 1};
                v = base + 1;
            } else {
                for (int j = 0; j < k; ++j) out.instance.ends[s[j]] = {base + j, j + 1 == k ? base : base + j + 1};
                v = base + k - 1;
            }
        }
        out.instance.vertices = v + 1;
    } else {
        std::vector<int> common = src.sets.front();
        for (const auto& s : src.sets) {
            std::vector<int> c;
            std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::back_inserter(c));
            common = c;
        }
        for (const auto& s : src.sets)
            if (s.size() != common.size() + 1) throw ContractViolation("fixture has no graph translation");
        const int k = static_cast<int>(common.size());
        for (int j = 0; j < k; ++j) out.instance.ends[common[j]] = {j, j + 1};
        for (const auto& s : src.sets)
            for (int id : s)
                if (!std::binary_search(common.begin(), common.end(), id)) out.instance.ends[id] = {0, k};
        out.instance.vertices = k + 1;
    }
    for (auto [a, b] : out.instance.ends)
        if (a < 0) throw ContractViolation("fixture element outside every set");
    out.instance.validate();
    return out;
}

}  // namespace expunc
