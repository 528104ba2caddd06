#include "birdtrack/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "json.hpp"

#include "birdtrack/error.hpp"
#include "birdtrack/limits.hpp"

namespace birdtrack {

// ---- YoungDiagram ---------------------------------------------------------

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw DomainError("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1]) throw DomainError("Young diagram rows must be non-increasing");
    }
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("diagram must look like [4,2,1]: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad row length '" + tok + "' in diagram '" + std::string(text) + "'");
        rows.push_back(std::stoi(tok));
        pos = end + 1;
    }
    try {
        return YoungDiagram(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

int YoungDiagram::box_count() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
}

std::vector<int> YoungDiagram::conjugate() const {
    std::vector<int> cols(static_cast<std::size_t>(row(0)), 0);
    for (int r : rows_)
        for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
    return cols;
}

std::string YoungDiagram::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows_[i]);
    }
    return s + "]";
}

// ---- YoungTableau ---------------------------------------------------------

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> shape;
    for (const auto& r : rows_) {
        shape.push_back(static_cast<int>(r.size()));
        n_ += static_cast<int>(r.size());
    }
    YoungDiagram check(shape);  // validates shape
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
                throw DomainError("tableau entries must be 1..n, each once");
            seen[static_cast<std::size_t>(v)] = true;
        }
}

YoungTableau YoungTableau::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("tableau must look like [13/2]: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    const bool commas = s.find(',') != std::string::npos;
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('/', pos);
        if (end == std::string::npos) end = s.size();
        std::string row = s.substr(pos, end - pos);
        std::vector<int> entries;
        if (row.empty()) throw ParseError("empty tableau row in '" + std::string(text) + "'");
        if (commas) {
            std::size_t p = 0;
            while (p <= row.size()) {
                std::size_t e = row.find(',', p);
                if (e == std::string::npos) e = row.size();
                std::string tok = row.substr(p, e - p);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw ParseError("bad tableau entry '" + tok + "'");
                entries.push_back(std::stoi(tok));
                p = e + 1;
            }
        } else {
            for (char c : row) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("bad tableau entry '") + c + "'");
                entries.push_back(c - '0');
            }
        }
        rows.push_back(std::move(entries));
        pos = end + 1;
    }
    try {
        return YoungTableau(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

YoungDiagram YoungTableau::shape() const {
    std::vector<int> r;
    for (const auto& row : rows_) r.push_back(static_cast<int>(row.size()));
    return YoungDiagram(r);
}

std::vector<std::vector<int>> YoungTableau::columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_[0].size());
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

bool YoungTableau::is_standard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
            if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
        }
    return true;
}

YoungTableau YoungTableau::without_largest() const {
    if (n_ == 0) throw DomainError("empty tableau has no largest entry");
    auto rows = rows_;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].back() != n_) continue;
        const bool bottom = r + 1 == rows.size() || rows[r + 1].size() < rows[r].size();
        if (!bottom) throw DomainError("largest entry is not in a corner");
        rows[r].pop_back();
        if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
        return YoungTableau(std::move(rows));
    }
    throw DomainError("largest entry is not in a corner");
}

YoungTableau YoungTableau::relabelled(const std::vector<int>& images) const {
    if (static_cast<int>(images.size()) != n_) throw DomainError("relabelling has the wrong size");
    auto rows = rows_;
    for (auto& row : rows)
        for (auto& v : row) v = images[static_cast<std::size_t>(v - 1)];
    return YoungTableau(std::move(rows));
}

std::string YoungTableau::to_string() const {
    const bool commas = n_ >= 10;
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (commas && c) s += ",";
            s += std::to_string(rows_[r][c]);
        }
    }
    return s + "]";
}

// ---- enumeration ----------------------------------------------------------

std::vector<YoungDiagram> partitions(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw DomainError("negative box count");
    rec(n, n);
    return out;
}

std::vector<YoungTableau> standard_tableaux(const YoungDiagram& shape) {
    const int n = shape.box_count();
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(shape.row_count()));
    std::vector<YoungTableau> out;
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.emplace_back(fill);
            return;
        }
        for (int r = 0; r < shape.row_count(); ++r) {
            int len = static_cast<int>(fill[static_cast<std::size_t>(r)].size());
            if (len >= shape.row(r)) continue;
            if (r > 0 && static_cast<int>(fill[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            fill[static_cast<std::size_t>(r)].push_back(k);
            rec(k + 1);
            fill[static_cast<std::size_t>(r)].pop_back();
        }
    };
    rec(1);
    auto reading = [](const YoungTableau& t) {
        std::vector<int> w;
        for (const auto& row : t.rows()) w.insert(w.end(), row.begin(), row.end());
        return w;
    };
    std::sort(out.begin(), out.end(), [&](const YoungTableau& a, const YoungTableau& b) { return reading(a) < reading(b); });
    return out;
}

std::vector<YoungTableau> standard_tableaux(int n) {
    if (n < 1) throw DomainError("standard_tableaux needs n >= 1");
    if (n > limits().max_degree) throw ResourceError("standard_tableaux: n exceeds the degree cap");
    std::vector<YoungTableau> out;
    for (const auto& shape : partitions(n)) {
        auto ts = standard_tableaux(shape);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

// ---- dimensions -----------------------------------------------------------

Integer hook_product(const YoungDiagram& d) {
    auto cols = d.conjugate();
    Integer h(1);
    for (int r = 0; r < d.row_count(); ++r)
        for (int c = 0; c < d.row(r); ++c) h *= (d.row(r) - c - 1) + (cols[static_cast<std::size_t>(c)] - r - 1) + 1;
    return h;
}

RationalFunction sun_dimension(const YoungDiagram& d) {
    RationalFunction num(1);
    const RationalFunction n = RationalFunction::N();
    for (int r = 0; r < d.row_count(); ++r)
        for (int c = 0; c < d.row(r); ++c) num = num * (n + RationalFunction(c - r));
    return num * RationalFunction(Rational(Integer(1), hook_product(d)));
}

Integer sun_dimension(const YoungDiagram& d, long n) {
    Integer num(1);
    for (int r = 0; r < d.row_count(); ++r)
        for (int c = 0; c < d.row(r); ++c) num *= n + c - r;
    return num / hook_product(d);
}

// ---- Littlewood-Richardson ------------------------------------------------

namespace {

struct LRState {
    std::vector<int> shape;
    std::vector<std::vector<int>> labels;  // labels of added boxes per row, left to right
};

// Reading word (rows top to bottom, right to left) is a lattice word.
bool lattice(const LRState& s, int max_label) {
    std::vector<int> count(static_cast<std::size_t>(max_label) + 2, 0);
    for (const auto& row : s.labels)
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int l = *it;
            ++count[static_cast<std::size_t>(l)];
            if (l > 1 && count[static_cast<std::size_t>(l)] > count[static_cast<std::size_t>(l - 1)]) return false;
        }
    return true;
}

void add_strips(const LRState& base, int boxes, int label, std::vector<LRState>& out) {
    const std::vector<int>& mu = base.shape;
    LRState cur = base;
    cur.shape.push_back(0);
    cur.labels.emplace_back();
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
        if (left == 0) {
            LRState done = cur;
            while (!done.shape.empty() && done.shape.back() == 0) {
                done.shape.pop_back();
                done.labels.pop_back();
            }
            out.push_back(std::move(done));
            return;
        }
        if (row >= cur.shape.size()) return;
        const int old = row < mu.size() ? mu[row] : 0;
        const int cap = row == 0 ? old + left : std::min(old + left, row - 1 < mu.size() ? mu[row - 1] : 0);
        for (int add = 0; old + add <= cap; ++add) {
            cur.shape[row] = old + add;
            for (int k = 0; k < add; ++k) cur.labels[row].push_back(label);
            rec(row + 1, left - add);
            for (int k = 0; k < add; ++k) cur.labels[row].pop_back();
        }
        cur.shape[row] = old;
    };
    rec(0, boxes);
}

}  // namespace

MultipletCount lr_multiply(const YoungDiagram& a, const YoungDiagram& b) {
    // Fill the skew shapes nu/a with content b, one horizontal strip per row of b.
    std::vector<LRState> states{{a.rows(), std::vector<std::vector<int>>(a.rows().size())}};
    for (int k = 0; k < b.row_count(); ++k) {
        std::vector<LRState> next;
        for (const auto& s : states) {
            std::vector<LRState> cand;
            add_strips(s, b.row(k), k + 1, cand);
            for (auto& c : cand)
                if (lattice(c, k + 1)) next.push_back(std::move(c));
        }
        if (next.size() > limits().max_terms) throw ResourceError("Littlewood-Richardson expansion exceeds the term cap");
        states = std::move(next);
    }
    MultipletCount out;
    for (const auto& s : states) ++out[YoungDiagram(s.shape)];
    return out;
}

YoungDiagram sun_trim(const YoungDiagram& d, long n) {
    if (n < 1) throw DomainError("sun_trim needs N >= 1");
    if (d.row_count() > n) return YoungDiagram();
    std::vector<int> rows = d.rows();
    if (static_cast<long>(rows.size()) == n) {
        const int full = rows.back();
        for (auto& r : rows) r -= full;
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
    return YoungDiagram(rows);
}

MultipletCount sun_trim(const MultipletCount& c, long n) {
    MultipletCount out;
    for (const auto& [d, m] : c) {
        if (d.row_count() > n) continue;
        out[sun_trim(d, n)] += m;
    }
    return out;
}

Integer total_dimension(const MultipletCount& c, long n) {
    Integer s(0);
    for (const auto& [d, m] : c) s += Integer(static_cast<long>(m)) * sun_dimension(d, n);
    return s;
}

YoungDiagram adjoint_diagram(long n) {
    if (n < 2) throw DomainError("adjoint diagram needs N >= 2");
    std::vector<int> rows{2};
    for (long i = 0; i < n - 2; ++i) rows.push_back(1);
    return YoungDiagram(rows);
}

namespace {

AdjointPowerDecomposition summarise(MultipletCount c) {
    AdjointPowerDecomposition r;
    for (const auto& [d, m] : c) {
        r.multiplet_count += m;
        r.colour_space_dim += m * m;
    }
    r.multiplets = std::move(c);
    return r;
}

MultipletCount times_adjoint(const MultipletCount& level, long n, std::map<YoungDiagram, MultipletCount>& cache) {
    const YoungDiagram adj = adjoint_diagram(n);
    MultipletCount next;
    for (const auto& [d, m] : level) {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, sun_trim(lr_multiply(d, adj), n)).first;
        for (const auto& [e, k] : it->second) next[e] += m * k;
    }
    return next;
}

}  // namespace

AdjointPowerDecomposition decompose_adjoint_power(int k, long n) {
    if (k < 0) throw DomainError("negative adjoint power");
    if (n < 2) throw DomainError("decompose_adjoint_power needs N >= 2");
    MultipletCount level{{YoungDiagram(), 1}};
    std::map<YoungDiagram, MultipletCount> cache;
    for (int i = 0; i < k; ++i) level = times_adjoint(level, n, cache);
    return summarise(std::move(level));
}

AdjointPowerDecomposition decompose_adjoint_power_large_n(int k) { return decompose_adjoint_power(k, 2L * k + 1); }

std::optional<int> first_occurrence(const YoungDiagram& d, long n) {
    if (d.row_count() > n) throw DomainError("diagram " + d.to_string() + " is not valid for SU(" + std::to_string(n) + ")");
    const YoungDiagram target = sun_trim(d, n);
    MultipletCount level{{YoungDiagram(), 1}};
    std::map<YoungDiagram, MultipletCount> cache;
    for (int k = 0; k <= limits().first_occurrence_cap; ++k) {
        if (level.count(target)) return k;
        if (k < limits().first_occurrence_cap) level = times_adjoint(level, n, cache);
    }
    return std::nullopt;
}

YoungDiagram mixed_tensor_diagram(const YoungDiagram& lambda, const YoungDiagram& mu, long n) {
    if (lambda.row_count() + mu.row_count() > n)
        throw DomainError("mixed tensor " + lambda.to_string() + "," + mu.to_string() + " does not fit SU(" +
                          std::to_string(n) + ")");
    std::vector<int> rows;
    for (long i = 1; i <= n; ++i)
        rows.push_back(mu.row(0) + lambda.row(static_cast<int>(i - 1)) - mu.row(static_cast<int>(n - i)));
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return sun_trim(YoungDiagram(rows), n);
}

std::string multiplet_count_to_json(const MultipletCount& c, std::optional<long> n) {
    nlohmann::ordered_json j;
    if (n) j["N"] = *n;
    auto arr = nlohmann::ordered_json::array();
    long long count = 0, dim2 = 0;
    for (const auto& [d, m] : c) {
        nlohmann::ordered_json e;
        e["diagram"] = d.rows();
        e["multiplicity"] = m;
        if (n) e["dimension"] = sun_dimension(d, *n).get_str();
        else e["dimension"] = sun_dimension(d).to_string();
        arr.push_back(e);
        count += m;
        dim2 += m * m;
    }
    j["multiplets"] = arr;
    j["multiplet_count"] = count;
    j["colour_space_dim"] = dim2;
    return j.dump(2);
}

}  // namespace birdtrack
