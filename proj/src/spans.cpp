#include "gleafkit/spans.hpp"

#include <algorithm>

namespace gleafkit {

FinLattice::FinLattice(std::vector<std::string> elements,
                       std::vector<std::pair<std::string, std::string>> leq_pairs)
    : elements_(std::move(elements)) {
    int n = size();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i)
        if (!idx.emplace(elements_[static_cast<size_t>(i)], i).second)
            throw std::domain_error("FinLattice: duplicate element");
    leq_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (const auto& [a, b] : leq_pairs) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            throw std::domain_error("FinLattice: leq pair names unknown element");
        leq_[static_cast<size_t>(ia->second)][static_cast<size_t>(ib->second)] = true;
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (leq(a, k) && leq(k, b)) leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq(a, b) && leq(b, a))
                throw std::domain_error("FinLattice: order is not antisymmetric");
    // meets: every pair must have a unique greatest lower bound
    meet_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int glb = -1;
            for (int c = 0; c < n; ++c) {
                if (!leq(c, a) || !leq(c, b)) continue;
                if (glb < 0 || leq(glb, c)) glb = c;
            }
            if (glb < 0) throw std::domain_error("FinLattice: pair without lower bound");
            for (int c = 0; c < n; ++c)
                if (leq(c, a) && leq(c, b) && !leq(c, glb))
                    throw std::domain_error("FinLattice: pair without greatest lower bound");
            meet_[static_cast<size_t>(a)][static_cast<size_t>(b)] = glb;
        }
}

int FinLattice::index(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[static_cast<size_t>(i)] == id) return i;
    throw std::domain_error("FinLattice: unknown element " + id);
}

FinCategory FinLattice::as_category() const {
    return poset_category(elements_, [this](int a, int b) { return leq(a, b); });
}

nlohmann::json FinLattice::to_json() const {
    nlohmann::json pairs = nlohmann::json::array();
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (leq(a, b)) pairs.push_back({name(a), name(b)});
    return {{"elements", elements_}, {"leq", pairs}};
}

FinLattice FinLattice::from_json(const nlohmann::json& j) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : j.at("leq"))
        pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    return FinLattice(j.at("elements").get<std::vector<std::string>>(), std::move(pairs));
}

NSpan::NSpan(int n_, std::vector<int> val_) : n(n_), val(std::move(val_)) {
    if (n < 0 || val.size() != static_cast<size_t>((n + 1) * (n + 2) / 2))
        throw std::domain_error("NSpan: value count does not match dimension");
}

bool span_valid(const FinLattice& L, const NSpan& A) {
    for (int w = 0; w <= A.n; ++w)
        for (int v = 0; v <= w; ++v) {
            int x = A.at(v, w);
            if (x < 0 || x >= L.size()) return false;
            // covers in reverse containment: shrink the interval by one
            if (v < w && !L.leq(x, A.at(v + 1, w))) return false;
            if (v < w && !L.leq(x, A.at(v, w - 1))) return false;
        }
    return true;
}

NSpan span_act(const NSpan& A, const MonotoneMap& f) {
    if (f.cod != A.n) throw std::domain_error("span_act: dimension mismatch");
    NSpan out(f.dom, std::vector<int>((f.dom + 1) * (f.dom + 2) / 2, 0));
    for (int w = 0; w <= f.dom; ++w)
        for (int v = 0; v <= w; ++v) out.set(v, w, A.at(f(v), f(w)));
    return out;
}

NSpan span_compose(const FinLattice& L, const NSpan& A, int k, const NSpan& B) {
    int m = A.n, n = B.n;
    if (k < 0 || k > m || k > n) throw std::domain_error("span_compose: k out of range");
    if (!(span_act(A, target_incl(k, m)) == span_act(B, source_incl(k, n))))
        throw std::domain_error(
            "span_compose: terminal face of A differs from initial face of B");
    int N = m + n - k;
    NSpan out(N, std::vector<int>((N + 1) * (N + 2) / 2, 0));
    for (int w = 0; w <= N; ++w)
        for (int v = 0; v <= w; ++v) {
            if (w <= m)
                out.set(v, w, A.at(v, w));
            else if (v >= m - k)
                out.set(v, w, B.at(v - m + k, w - m + k));
            else
                out.set(v, w, L.meet(A.at(v, m), B.at(0, w - m + k)));
        }
    return out;
}

std::vector<NSpan> span_enumerate(const FinLattice& L, int n,
                                  const std::map<std::pair<int, int>, int>& fixed) {
    // positions ordered by interval length so that both covers of each
    // position are assigned before it
    std::vector<std::pair<int, int>> pos;
    for (int len = 0; len <= n; ++len)
        for (int v = 0; v + len <= n; ++v) pos.emplace_back(v, v + len);

    std::vector<NSpan> out;
    NSpan cur(n, std::vector<int>((n + 1) * (n + 2) / 2, 0));
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == pos.size()) {
            out.push_back(cur);
            return;
        }
        auto [v, w] = pos[i];
        int bound = -1;  // -1 means unconstrained
        if (v < w) bound = L.meet(cur.at(v + 1, w), cur.at(v, w - 1));
        auto it = fixed.find({v, w});
        if (it != fixed.end()) {
            if (bound >= 0 && !L.leq(it->second, bound)) return;
            cur.set(v, w, it->second);
            rec(i + 1);
            return;
        }
        for (int x = 0; x < L.size(); ++x) {
            if (bound >= 0 && !L.leq(x, bound)) continue;
            cur.set(v, w, x);
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

NSpan nerve_to_spans(const FinLattice& L, const NervePath& P, bool bar) {
    int n = P.length();
    NSpan out(n, std::vector<int>((n + 1) * (n + 2) / 2, 0));
    for (int w = 0; w <= n; ++w)
        for (int v = 0; v <= w; ++v)
            out.set(v, w, bar ? P.objects.at(static_cast<size_t>(n - w))
                              : P.objects.at(static_cast<size_t>(v)));
    if (!span_valid(L, out)) throw std::domain_error("nerve_to_spans: path not monotone");
    return out;
}

std::optional<NSpan> horn_filler_search(const FinLattice& L, int dim,
                                        const std::map<int, NSpan>& faces) {
    for (const auto& [i, F] : faces) {
        if (i < 0 || i > dim || F.n != dim - 1)
            throw std::domain_error("horn_filler_search: face of wrong dimension");
    }
    for (const auto& D : span_enumerate(L, dim)) {
        bool ok = true;
        for (const auto& [i, F] : faces)
            if (!(span_act(D, face(i, dim)) == F)) {
                ok = false;
                break;
            }
        if (ok) return D;
    }
    return std::nullopt;
}

nlohmann::json span_to_json(const FinLattice& L, const NSpan& A) {
    nlohmann::json val = nlohmann::json::object();
    for (int w = 0; w <= A.n; ++w)
        for (int v = 0; v <= w; ++v)
            val[std::to_string(v) + "," + std::to_string(w)] = L.name(A.at(v, w));
    return {{"n", A.n}, {"val", val}};
}

NSpan span_from_json(const FinLattice& L, const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    NSpan out(n, std::vector<int>((n + 1) * (n + 2) / 2, -1));
    for (const auto& [key, name] : j.at("val").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw std::domain_error("NSpan json: bad key " + key);
        int v = std::stoi(key.substr(0, comma));
        int w = std::stoi(key.substr(comma + 1));
        if (v < 0 || v > w || w > n) throw std::domain_error("NSpan json: key out of range");
        out.set(v, w, L.index(name.get<std::string>()));
    }
    for (int x : out.val)
        if (x < 0) throw std::domain_error("NSpan json: missing entry");
    if (!span_valid(L, out)) throw std::domain_error("NSpan json: not monotone");
    return out;
}

FinLattice diamond_lattice() {
    return FinLattice({"top", "alpha", "beta", "bot"},
                      {{"top", "alpha"}, {"top", "beta"}, {"alpha", "bot"}, {"beta", "bot"}});
}

std::map<int, NSpan> diamond_horn(const FinLattice& L) {
    int bot = L.index("bot"), al = L.index("alpha"), be = L.index("beta");
    // entries in index order (0,0),(0,1),(1,1),(0,2),(1,2),(2,2)
    NSpan A(2, {bot, bot, bot, al, bot, bot});
    NSpan B(2, {bot, be, bot, be, bot, bot});
    NSpan C(2, {bot, bot, bot, be, bot, bot});
    return {{0, A}, {1, B}, {3, C}};
}

std::vector<NSpan> SpanInstance::extensions(const Simplex& face, int n) const {
    int k = face.n;
    if (n < k) throw std::domain_error("extensions: target dimension below face dimension");
    std::map<std::pair<int, int>, int> fixed;
    for (int w = 0; w <= k; ++w)
        for (int v = 0; v <= w; ++v) fixed[{v, w}] = face.at(v, w);
    return span_enumerate(*L_, n, fixed);
}

}  // namespace gleafkit
