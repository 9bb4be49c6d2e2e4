#include "quower/setcover.hpp"

#include "quower/projective.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace quower {

std::string InstanceOrigin::text() const {
    switch (kind) {
        case Kind::Board:
            return "board n=" + std::to_string(n) + " variant=" + variant_name(variant);
        case Kind::WindRose:
            return "windrose q=" + std::to_string(q);
        case Kind::Custom:
            return "custom";
    }
    return "custom";
}

InstanceOrigin InstanceOrigin::parse(const std::string& s) {
    InstanceOrigin o;
    std::istringstream in(s);
    std::string head;
    in >> head;
    if (head == "board") {
        std::string nf, vf;
        in >> nf >> vf;
        if (nf.rfind("n=", 0) == 0 && vf.rfind("variant=", 0) == 0) {
            o.kind = Kind::Board;
            o.n = std::stoi(nf.substr(2));
            o.variant = variant_from_name(vf.substr(8));
            return o;
        }
    } else if (head == "windrose") {
        std::string qf;
        in >> qf;
        if (qf.rfind("q=", 0) == 0) {
            o.kind = Kind::WindRose;
            o.q = static_cast<uint32_t>(std::stoul(qf.substr(2)));
            return o;
        }
    }
    return o;  // Custom
}

SetCoverInstance make_instance(int universe_size, std::vector<std::string> element_labels,
                               std::vector<Candidate> candidates, InstanceOrigin origin) {
    if (universe_size < 0) throw std::invalid_argument("negative universe");
    if (static_cast<int>(element_labels.size()) != universe_size)
        throw std::invalid_argument("element label count mismatch");
    std::unordered_set<std::string> seen;
    for (const auto& l : element_labels)
        if (l.empty() || !seen.insert(l).second)
            throw std::invalid_argument("element labels must be unique and nonempty");
    seen.clear();
    std::vector<char> hit(universe_size, 0);
    for (auto& c : candidates) {
        if (c.label.empty() || !seen.insert(c.label).second)
            throw std::invalid_argument("candidate labels must be unique and nonempty");
        std::sort(c.elements.begin(), c.elements.end());
        c.elements.erase(std::unique(c.elements.begin(), c.elements.end()), c.elements.end());
        for (int e : c.elements) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("candidate " + c.label + " references bad element");
            hit[e] = 1;
        }
    }
    for (int e = 0; e < universe_size; ++e)
        if (!hit[e])
            throw std::invalid_argument("element " + element_labels[e] +
                                        " is not covered by any candidate");
    return SetCoverInstance{universe_size, std::move(element_labels), std::move(candidates),
                            origin};
}

SetCoverInstance build_board_instance(int n, BoardVariant variant) {
    auto cells = board_cells(n, variant);
    std::vector<int> cell_index(static_cast<size_t>(n) * n, -1);
    std::vector<std::string> labels;
    labels.reserve(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
        cell_index[static_cast<size_t>(cells[i].a) * n + cells[i].b] = static_cast<int>(i);
        labels.push_back(std::to_string(cells[i].a) + "_" + std::to_string(cells[i].b));
    }
    std::vector<Candidate> cands;
    cands.reserve(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Candidate c;
            c.label = std::to_string(a) + "_" + std::to_string(b);
            for (const auto& cell : quower(n, {a, b})) {
                int idx = cell_index[static_cast<size_t>(cell.a) * n + cell.b];
                if (idx >= 0) c.elements.push_back(idx);
            }
            cands.push_back(std::move(c));
        }
    return make_instance(static_cast<int>(cells.size()), std::move(labels), std::move(cands),
                         {InstanceOrigin::Kind::Board, n, variant, 0});
}

SetCoverInstance build_windrose_instance(uint32_t q) {
    Field f = field(q);
    const FieldSpec& F = *f;
    auto pts = all_points(F);
    std::vector<std::string> labels;
    labels.reserve(pts.size());
    for (const auto& p : pts)
        labels.push_back(std::to_string(p.x) + "_" + std::to_string(p.y) + "_" +
                         std::to_string(p.z));
    std::vector<Candidate> cands;
    cands.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        Candidate c;
        c.label = labels[i];
        for (const auto& w : wind_rose(F, pts[i])) c.elements.push_back(point_index(F, w));
        cands.push_back(std::move(c));
    }
    return make_instance(static_cast<int>(pts.size()), std::move(labels), std::move(cands),
                         {InstanceOrigin::Kind::WindRose, 0, BoardVariant::Full, q});
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
public:
    Searcher(const SetCoverInstance& inst, const SolveOptions& opts)
        : inst_(inst), opts_(opts) {
        U_ = inst.universe_size;
        m_ = static_cast<int>(inst.candidates.size());
        W_ = (U_ + 63) / 64;
        cand_.assign(static_cast<size_t>(m_) * W_, 0);
        for (int i = 0; i < m_; ++i)
            for (int e : inst.candidates[i].elements)
                cand_[static_cast<size_t>(i) * W_ + e / 64] |= 1ull << (e % 64);
        elem_cands_.resize(U_);
        cnt_.assign(U_, 0);
        for (int i = 0; i < m_; ++i)
            for (int e : inst.candidates[i].elements) {
                elem_cands_[e].push_back(i);
                ++cnt_[e];
            }
        excluded_.assign(m_, 0);
        unc_.assign(W_, 0);
        for (int e = 0; e < U_; ++e) unc_[e / 64] |= 1ull << (e % 64);
    }

    SolveResult run() {
        auto t0 = Clock::now();
        if (opts_.time_limit_sec > 0)
            deadline_ = t0 + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(opts_.time_limit_sec));
        timed_ = opts_.time_limit_sec > 0;

        SolveResult res;
        if (U_ == 0) {
            res.seconds = elapsed(t0);
            return res;  // empty universe: optimal empty choice
        }

        // Greedy incumbent.
        best_ = greedy_indices();
        best_size_ = static_cast<int>(best_.size());

        root_lb_ = root_bound();
        const int depth_cap = best_size_ + 2;
        unc_pool_.assign(static_cast<size_t>(depth_cap) * W_, 0);
        size_pool_.assign(static_cast<size_t>(depth_cap) * m_, 0);
        excl_pool_.assign(depth_cap, {});
        for (int i = 0; i < m_; ++i)
            size_pool_[i] = static_cast<int32_t>(inst_.candidates[i].elements.size());

        if (best_size_ > root_lb_) start_search();

        res.nodes = nodes_;
        res.best_size = best_size_;
        res.chosen.reserve(best_.size());
        for (int i : best_) res.chosen.push_back(inst_.candidates[i].label);
        std::sort(res.chosen.begin(), res.chosen.end());
        if (timeout_) {
            res.status = SolveStatus::FeasibleOnly;
            res.lower_bound = root_lb_;
        } else {
            res.status = SolveStatus::Optimal;
            res.lower_bound = best_size_;
        }
        res.seconds = elapsed(t0);
        return res;
    }

    std::vector<int> greedy_indices() {
        std::vector<uint64_t> unc = unc_;
        std::vector<int> pick;
        int left = U_;
        while (left > 0) {
            int bi = -1, bs = 0;
            for (int i = 0; i < m_; ++i) {
                int s = inter_count(i, unc.data());
                if (s > bs) {
                    bs = s;
                    bi = i;
                }
            }
            if (bi < 0) throw std::runtime_error("greedy stuck on feasible instance");
            pick.push_back(bi);
            const uint64_t* row = &cand_[static_cast<size_t>(bi) * W_];
            for (int w = 0; w < W_; ++w) unc[w] &= ~row[w];
            left -= bs;
        }
        return pick;
    }

private:
    static double elapsed(Clock::time_point t0) {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    int inter_count(int cand_idx, const uint64_t* unc) const {
        const uint64_t* row = &cand_[static_cast<size_t>(cand_idx) * W_];
        int s = 0;
        for (int w = 0; w < W_; ++w) s += std::popcount(row[w] & unc[w]);
        return s;
    }

    int root_bound() const {
        int maxsz = 0;
        for (const auto& c : inst_.candidates)
            maxsz = std::max(maxsz, static_cast<int>(c.elements.size()));
        return maxsz == 0 ? 0 : (U_ + maxsz - 1) / maxsz;
    }

    void start_search() {
        const auto& o = inst_.origin;
        if (opts_.symmetry && o.kind == InstanceOrigin::Kind::Board && o.n >= 2) {
            // Any cover maps by a torus translation to one through (0,0) on the
            // full board, or through column a=0 on the punctured board (only
            // diagonal translations preserve the puncture).
            if (o.variant == BoardVariant::Full) {
                int c00 = find_candidate("0_0");
                choose(0, c00);
                dfs(1);
                unchoose(0, c00);
                return;
            }
            std::vector<int32_t> col0;
            for (int b = 0; b < o.n; ++b) col0.push_back(find_candidate("0_" + std::to_string(b)));
            branch_over(0, col0);
            return;
        }
        dfs(1);
    }

    int find_candidate(const std::string& label) const {
        for (int i = 0; i < m_; ++i)
            if (inst_.candidates[i].label == label) return i;
        throw std::runtime_error("candidate label missing: " + label);
    }

    void choose(int depth, int ci) {
        uint64_t* save = &unc_pool_[static_cast<size_t>(depth) * W_];
        std::memcpy(save, unc_.data(), static_cast<size_t>(W_) * 8);
        const uint64_t* row = &cand_[static_cast<size_t>(ci) * W_];
        for (int w = 0; w < W_; ++w) unc_[w] &= ~row[w];
        chosen_.push_back(ci);
    }

    void unchoose(int depth, int) {
        chosen_.pop_back();
        std::memcpy(unc_.data(), &unc_pool_[static_cast<size_t>(depth) * W_],
                    static_cast<size_t>(W_) * 8);
    }

    // Tries each candidate in list (largest fresh gain first); after a branch
    // returns, the candidate is excluded for the remaining branches.
    void branch_over(int depth, const std::vector<int32_t>& list) {
        struct Br {
            int32_t sz, idx;
        };
        std::vector<Br> brs;
        brs.reserve(list.size());
        for (int ci : list)
            if (!excluded_[ci]) brs.push_back({static_cast<int32_t>(inter_count(ci, unc_.data())), ci});
        std::sort(brs.begin(), brs.end(), [](const Br& a, const Br& b) {
            return a.sz != b.sz ? a.sz > b.sz : a.idx < b.idx;
        });
        auto& excl = excl_pool_[depth];
        excl.clear();
        for (size_t k = 0; k < brs.size(); ++k) {
            int ci = brs[k].idx;
            choose(depth, ci);
            dfs(depth + 1);
            unchoose(depth, ci);
            if (timeout_) break;
            if (static_cast<int>(chosen_.size()) + 1 >= best_size_) break;
            if (k + 1 < brs.size()) {
                excluded_[ci] = 1;
                excl.push_back(ci);
                for (int e : inst_.candidates[ci].elements) --cnt_[e];
            }
        }
        for (int ci : excl) {
            excluded_[ci] = 0;
            for (int e : inst_.candidates[ci].elements) ++cnt_[e];
        }
        excl.clear();
    }

    void dfs(int depth) {
        ++nodes_;
        if (timed_ && (nodes_ & 1023) == 0 && Clock::now() >= deadline_) timeout_ = true;
        if (timeout_) return;

        int ucnt = 0;
        for (int w = 0; w < W_; ++w) ucnt += std::popcount(unc_[w]);
        if (ucnt == 0) {
            if (static_cast<int>(chosen_.size()) < best_size_) {
                best_size_ = static_cast<int>(chosen_.size());
                best_ = chosen_;
            }
            return;
        }
        if (static_cast<int>(chosen_.size()) + 1 >= best_size_) return;

        // Branch element: uncovered element with fewest usable candidates.
        int be = -1, bc = INT32_MAX;
        for (int w = 0; w < W_; ++w) {
            uint64_t bits = unc_[w];
            while (bits) {
                int e = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (cnt_[e] < bc) {
                    bc = cnt_[e];
                    be = e;
                    if (bc <= 1) goto found;
                }
            }
        }
    found:
        if (bc == 0) return;

        // Admissible bound: even the best remaining candidate covers at most
        // maxsz uncovered elements. Sizes only shrink down a path, so the
        // parent's values are valid upper bounds that let most be skipped.
        {
            int32_t* sz = &size_pool_[static_cast<size_t>(depth) * m_];
            std::memcpy(sz, &size_pool_[static_cast<size_t>(depth - 1) * m_],
                        static_cast<size_t>(m_) * sizeof(int32_t));
            int maxsz = 0;
            for (int i = 0; i < m_; ++i) {
                if (excluded_[i] || sz[i] <= maxsz) continue;
                int s = inter_count(i, unc_.data());
                sz[i] = static_cast<int32_t>(s);
                if (s > maxsz) maxsz = s;
            }
            int lb = (ucnt + maxsz - 1) / maxsz;
            if (static_cast<int>(chosen_.size()) + lb >= best_size_) return;
        }

        branch_over(depth, elem_cands_[be]);
    }

    const SetCoverInstance& inst_;
    const SolveOptions& opts_;
    int U_ = 0, m_ = 0, W_ = 0;
    std::vector<uint64_t> cand_;
    std::vector<std::vector<int32_t>> elem_cands_;
    std::vector<int32_t> cnt_;
    std::vector<uint8_t> excluded_;
    std::vector<uint64_t> unc_;
    std::vector<int> chosen_, best_;
    int best_size_ = 0;
    int root_lb_ = 0;
    uint64_t nodes_ = 0;
    bool timed_ = false, timeout_ = false;
    Clock::time_point deadline_;
    std::vector<uint64_t> unc_pool_;
    std::vector<int32_t> size_pool_;
    std::vector<std::vector<int32_t>> excl_pool_;
};

}  // namespace

SolveResult solve_greedy(const SetCoverInstance& inst) {
    auto t0 = Clock::now();
    SolveOptions opts;
    Searcher s(inst, opts);
    SolveResult res;
    if (inst.universe_size > 0) {
        auto pick = s.greedy_indices();
        res.best_size = static_cast<int>(pick.size());
        for (int i : pick) res.chosen.push_back(inst.candidates[i].label);
        std::sort(res.chosen.begin(), res.chosen.end());
    }
    int maxsz = 0;
    for (const auto& c : inst.candidates) maxsz = std::max(maxsz, (int)c.elements.size());
    res.lower_bound = maxsz == 0 ? 0 : (inst.universe_size + maxsz - 1) / maxsz;
    res.status = res.best_size == res.lower_bound ? SolveStatus::Optimal
                                                  : SolveStatus::FeasibleOnly;
    res.nodes = 0;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

SolveResult solve_exact(const SetCoverInstance& inst, const SolveOptions& opts) {
    Searcher s(inst, opts);
    return s.run();
}

namespace {

void wrap_write(std::ostream& out, const std::string& head, const std::vector<std::string>& terms,
                const std::string& tail) {
    std::string line = " " + head;
    bool first = true;
    for (const auto& t : terms) {
        std::string piece = first ? " " + t : " + " + t;
        first = false;
        if (line.size() + piece.size() > 200) {
            out << line << "\n";
            line = "  ";
            piece = first ? " " + t : " + " + t;
        }
        line += piece;
    }
    if (!tail.empty()) line += " " + tail;
    out << line << "\n";
}

}  // namespace

void write_lp(const SetCoverInstance& inst, std::ostream& out) {
    out << "\\ set-cover instance\n";
    out << "\\ origin: " << inst.origin.text() << "\n";
    out << "\\ elements: " << inst.universe_size << " candidates: " << inst.candidates.size()
        << "\n";
    out << "Minimize\n";
    std::vector<std::string> obj;
    obj.reserve(inst.candidates.size());
    for (const auto& c : inst.candidates) obj.push_back("x_" + c.label);
    wrap_write(out, "obj:", obj, "");
    out << "Subject To\n";
    for (int e = 0; e < inst.universe_size; ++e) {
        std::vector<std::string> terms;
        for (const auto& c : inst.candidates)
            if (std::binary_search(c.elements.begin(), c.elements.end(), e))
                terms.push_back("x_" + c.label);
        wrap_write(out, "e_" + inst.element_labels[e] + ":", terms, ">= 1");
    }
    out << "Binary\n";
    for (const auto& c : inst.candidates) out << " x_" << c.label << "\n";
    out << "End\n";
}

std::string write_lp(const SetCoverInstance& inst) {
    std::ostringstream os;
    write_lp(inst, os);
    return os.str();
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

SetCoverInstance read_lp(std::istream& in) {
    std::string line, origin_text = "custom", body;
    while (std::getline(in, line)) {
        size_t cut = line.find('\\');
        if (cut != std::string::npos) {
            std::string comment = line.substr(cut + 1);
            size_t o = comment.find("origin:");
            if (o != std::string::npos) {
                origin_text = comment.substr(o + 7);
                size_t b = origin_text.find_first_not_of(" \t");
                origin_text = b == std::string::npos ? "" : origin_text.substr(b);
            }
            line = line.substr(0, cut);
        }
        body += line;
        body += "\n";
    }
    // Pad separators so tokens split cleanly; ':' stays glued to its name.
    std::string padded;
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '+') {
            padded += " + ";
        } else if (c == '>' && i + 1 < body.size() && body[i + 1] == '=') {
            padded += " >= ";
            ++i;
        } else {
            padded += c;
        }
    }
    std::istringstream ts(padded);
    std::vector<std::string> tok;
    std::string t;
    while (ts >> t) tok.push_back(t);

    size_t i = 0;
    auto expect = [&](const char* what) {
        if (i >= tok.size()) throw std::invalid_argument(std::string("lp: expected ") + what);
    };
    expect("Minimize");
    {
        std::string k = lower(tok[i]);
        if (k != "minimize" && k != "min")
            throw std::invalid_argument("lp: expected Minimize, got " + tok[i]);
        ++i;
    }
    auto at_subject = [&]() {
        if (i >= tok.size()) return false;
        std::string k = lower(tok[i]);
        if (k == "st" || k == "s.t." || k == "st.") return true;
        return k == "subject" && i + 1 < tok.size() && lower(tok[i + 1]) == "to";
    };
    std::vector<std::string> cand_order;
    std::unordered_map<std::string, int> cand_idx;
    while (i < tok.size() && !at_subject()) {
        std::string v = tok[i++];
        if (v == "+") continue;
        if (!v.empty() && v.back() == ':') continue;  // objective name
        if (v.rfind("x_", 0) != 0) throw std::invalid_argument("lp: bad objective term " + v);
        std::string label = v.substr(2);
        if (cand_idx.count(label)) throw std::invalid_argument("lp: duplicate objective term " + v);
        cand_idx[label] = static_cast<int>(cand_order.size());
        cand_order.push_back(label);
    }
    expect("Subject To");
    i += lower(tok[i]) == "subject" ? 2 : 1;

    std::vector<std::string> element_labels;
    std::vector<Candidate> cands(cand_order.size());
    for (size_t c = 0; c < cand_order.size(); ++c) cands[c].label = cand_order[c];
    std::unordered_set<std::string> row_names;

    auto is_section = [&](size_t j) {
        if (j >= tok.size()) return true;
        std::string k = lower(tok[j]);
        return k == "binary" || k == "bin" || k == "end" || k == "general" || k == "bounds";
    };
    while (!is_section(i)) {
        std::string name = tok[i];
        if (name.empty() || name.back() != ':')
            throw std::invalid_argument("lp: expected row name, got " + name);
        name.pop_back();
        if (name.rfind("e_", 0) != 0) throw std::invalid_argument("lp: row name " + name);
        std::string el = name.substr(2);
        if (!row_names.insert(el).second) throw std::invalid_argument("lp: duplicate row " + el);
        int eidx = static_cast<int>(element_labels.size());
        element_labels.push_back(el);
        ++i;
        bool closed = false;
        while (i < tok.size()) {
            std::string v = tok[i];
            if (v == "+") {
                ++i;
                continue;
            }
            if (v == ">=") {
                expect(">= bound");
                ++i;
                expect("row bound");
                if (tok[i] != "1") throw std::invalid_argument("lp: row bound must be 1");
                ++i;
                closed = true;
                break;
            }
            if (v.rfind("x_", 0) != 0) throw std::invalid_argument("lp: bad row term " + v);
            auto it = cand_idx.find(v.substr(2));
            if (it == cand_idx.end())
                throw std::invalid_argument("lp: row uses unknown variable " + v);
            cands[it->second].elements.push_back(eidx);
            ++i;
        }
        if (!closed) throw std::invalid_argument("lp: row " + el + " missing >= 1");
    }
    expect("Binary");
    {
        std::string k = lower(tok[i]);
        if (k != "binary" && k != "bin")
            throw std::invalid_argument("lp: expected Binary, got " + tok[i]);
        ++i;
    }
    std::unordered_set<std::string> bins;
    while (i < tok.size() && lower(tok[i]) != "end") {
        std::string v = tok[i++];
        if (v.rfind("x_", 0) != 0 || !cand_idx.count(v.substr(2)))
            throw std::invalid_argument("lp: binary section names unknown variable " + v);
        bins.insert(v.substr(2));
    }
    if (bins.size() != cand_order.size())
        throw std::invalid_argument("lp: not all variables declared binary");
    if (i >= tok.size() || lower(tok[i]) != "end")
        throw std::invalid_argument("lp: missing End");

    const int universe = static_cast<int>(element_labels.size());
    return make_instance(universe, std::move(element_labels), std::move(cands),
                         InstanceOrigin::parse(origin_text));
}

SetCoverInstance read_lp(const std::string& text) {
    std::istringstream in(text);
    return read_lp(in);
}

}  // namespace quower
