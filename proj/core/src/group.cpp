#include "glpath/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace glpath {

namespace {

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

} // namespace

void FiniteGroup::finalize(const std::string& context) {
    if (order_ <= 0)
        throw ValidationError(context + ": group must have at least one element");
    if ((int)names_.size() != order_ || (int)table_.size() != order_ * order_)
        throw ValidationError(context + ": inconsistent table dimensions");

    by_name_.clear();
    for (int i = 0; i < order_; ++i) {
        if (names_[i].empty())
            throw ValidationError(context + ": empty element name at index " +
                                  std::to_string(i));
        if (!by_name_.emplace(names_[i], i).second)
            throw ValidationError(context + ": duplicate element name '" +
                                  names_[i] + "'");
    }

    for (int i = 0; i < order_ * order_; ++i)
        if (table_[i] < 0 || table_[i] >= order_)
            throw ValidationError(context + ": table entry out of range");

    // Identity: the unique two-sided neutral element.
    id_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            id_ = e;
            break;
        }
    }
    if (id_ < 0)
        throw ValidationError(context + ": no identity element");

    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul(a, b) == id_ && mul(b, a) == id_) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0)
            throw ValidationError(context + ": element '" + names_[a] +
                                  "' has no inverse");
    }

    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError(
                        context + ": associativity fails on ('" + names_[a] +
                        "','" + names_[b] + "','" + names_[c] + "')");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
    if (n < 1)
        throw ValidationError("cyclic group: n must be >= 1");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->names_.resize(n);
    g->table_.resize(n * n);
    for (int i = 0; i < n; ++i) {
        g->names_[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) g->table_[i * n + j] = (i + j) % n;
    }
    g->spec_json_ = "{\"kind\":\"cyclic\",\"n\":" + std::to_string(n) + "}";
    g->finalize("cyclic(" + std::to_string(n) + ")");
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int m) {
    if (m < 1 || m > 5)
        throw ValidationError("symmetric group: m must be in 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < perms.size(); ++i) index_of[perms[i]] = (int)i;

    int n = (int)perms.size();
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->names_.resize(n);
    g->table_.resize(n * n);
    for (int i = 0; i < n; ++i) {
        std::string nm;
        for (int x : perms[i]) nm += std::to_string(x);
        g->names_[i] = nm;
        for (int j = 0; j < n; ++j) {
            std::vector<int> r(m);
            for (int x = 0; x < m; ++x) r[x] = perms[j][perms[i][x]];
            g->table_[i * n + j] = index_of.at(r);
        }
    }
    g->spec_json_ = "{\"kind\":\"symmetric\",\"m\":" + std::to_string(m) + "}";
    g->finalize("symmetric(" + std::to_string(m) + ")");
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::product(
    const std::vector<std::shared_ptr<const FiniteGroup>>& factors) {
    if (factors.empty())
        throw ValidationError("product group: needs at least one factor");
    int n = 1;
    for (auto& f : factors) n *= f->order();
    if (n > 4096)
        throw ValidationError("product group: order too large");

    auto digits = [&](int idx) {
        std::vector<int> d(factors.size());
        for (int k = (int)factors.size() - 1; k >= 0; --k) {
            d[k] = idx % factors[k]->order();
            idx /= factors[k]->order();
        }
        return d;
    };

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->names_.resize(n);
    g->table_.resize(n * n);
    for (int i = 0; i < n; ++i) {
        auto di = digits(i);
        std::string nm = "(";
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) nm += ",";
            nm += factors[k]->name(di[k]);
        }
        nm += ")";
        g->names_[i] = nm;
        for (int j = 0; j < n; ++j) {
            auto dj = digits(j);
            int idx = 0;
            for (size_t k = 0; k < factors.size(); ++k)
                idx = idx * factors[k]->order() +
                      factors[k]->mul(di[k], dj[k]);
            g->table_[i * n + j] = idx;
        }
    }
    std::string spec = "{\"factors\":[";
    for (size_t k = 0; k < factors.size(); ++k) {
        if (k) spec += ",";
        spec += factors[k]->spec_json();
    }
    spec += "],\"kind\":\"product\"}";
    g->spec_json_ = spec;
    g->finalize("product");
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    const std::vector<std::string>& elems,
    const std::vector<std::vector<int>>& table) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = (int)elems.size();
    g->names_ = elems;
    if ((int)table.size() != g->order_)
        throw ValidationError("table group: table must have one row per element");
    g->table_.reserve(g->order_ * g->order_);
    for (auto& row : table) {
        if ((int)row.size() != g->order_)
            throw ValidationError("table group: ragged table row");
        for (int v : row) g->table_.push_back(v);
    }
    std::string spec = "{\"elems\":[";
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) spec += ",";
        spec += "\"" + elems[i] + "\"";
    }
    spec += "],\"kind\":\"table\",\"table\":[";
    for (size_t i = 0; i < table.size(); ++i) {
        if (i) spec += ",";
        spec += "[";
        for (size_t j = 0; j < table[i].size(); ++j) {
            if (j) spec += ",";
            spec += std::to_string(table[i][j]);
        }
        spec += "]";
    }
    spec += "]}";
    g->spec_json_ = spec;
    g->finalize("table group");
    return g;
}

int FiniteGroup::elem(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw ValidationError("unknown group element '" + name + "'");
    return it->second;
}

std::string FiniteGroup::signature() const {
    std::string names;
    for (auto& n : names_) {
        names += n;
        names += ';';
    }
    std::string tbl;
    tbl.reserve(table_.size() * 3);
    for (int v : table_) {
        tbl += std::to_string(v);
        tbl += ',';
    }
    return "order=" + std::to_string(order_) + ";names=" + hex64(fnv64(names)) +
           ";table=" + hex64(fnv64(tbl));
}

} // namespace glpath
