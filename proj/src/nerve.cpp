#include "gleafkit/nerve.hpp"

#include <algorithm>

namespace gleafkit {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Mor> morphisms,
                         std::map<std::string, std::string> identities,
                         std::vector<std::array<std::string, 3>> comp)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
    for (size_t i = 0; i < objects_.size(); ++i) {
        if (!obj_index_.emplace(objects_[i], static_cast<int>(i)).second)
            throw std::domain_error("FinCategory: duplicate object id " + objects_[i]);
    }
    for (size_t i = 0; i < morphisms_.size(); ++i) {
        if (!mor_index_.emplace(morphisms_[i].id, static_cast<int>(i)).second)
            throw std::domain_error("FinCategory: duplicate morphism id " + morphisms_[i].id);
        if (!obj_index_.count(morphisms_[i].src) || !obj_index_.count(morphisms_[i].tgt))
            throw std::domain_error("FinCategory: morphism " + morphisms_[i].id +
                                    " has unknown endpoint");
    }
    identity_of_.assign(objects_.size(), -1);
    for (const auto& [obj, mor] : identities) {
        int o = object_index(obj), m = morphism_index(mor);
        if (src(m) != o || tgt(m) != o)
            throw std::domain_error("FinCategory: identity of " + obj + " is not an endo-arrow");
        identity_of_[static_cast<size_t>(o)] = m;
    }
    for (size_t o = 0; o < objects_.size(); ++o)
        if (identity_of_[o] < 0)
            throw std::domain_error("FinCategory: object " + objects_[o] + " has no identity");
    comp_.assign(morphisms_.size(), std::vector<int>(morphisms_.size(), -1));
    for (const auto& [g, f, gf] : comp) {
        int gi = morphism_index(g), fi = morphism_index(f), ri = morphism_index(gf);
        if (tgt(fi) != src(gi))
            throw std::domain_error("FinCategory: comp entry (" + g + "," + f +
                                    ") is not composable");
        comp_[static_cast<size_t>(gi)][static_cast<size_t>(fi)] = ri;
    }
    validate();
}

void FinCategory::validate() const {
    int M = num_morphisms();
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (tgt(f) != src(g)) continue;
            int r = comp_[static_cast<size_t>(g)][static_cast<size_t>(f)];
            if (r < 0)
                throw std::domain_error("FinCategory: composition table missing entry for (" +
                                        morphisms_[static_cast<size_t>(g)].id + "," +
                                        morphisms_[static_cast<size_t>(f)].id + ")");
            if (src(r) != src(f) || tgt(r) != tgt(g))
                throw std::domain_error("FinCategory: composite has wrong endpoints");
        }
    for (int f = 0; f < M; ++f) {
        if (compose_mor(identity(tgt(f)), f) != f || compose_mor(f, identity(src(f))) != f)
            throw std::domain_error("FinCategory: identities are not neutral at " +
                                    morphisms_[static_cast<size_t>(f)].id);
    }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g) {
            if (tgt(g) != src(h)) continue;
            for (int f = 0; f < M; ++f) {
                if (tgt(f) != src(g)) continue;
                if (compose_mor(h, compose_mor(g, f)) != compose_mor(compose_mor(h, g), f))
                    throw std::domain_error("FinCategory: composition is not associative");
            }
        }
}

int FinCategory::object_index(const std::string& id) const {
    auto it = obj_index_.find(id);
    if (it == obj_index_.end()) throw std::domain_error("FinCategory: unknown object " + id);
    return it->second;
}

int FinCategory::morphism_index(const std::string& id) const {
    auto it = mor_index_.find(id);
    if (it == mor_index_.end()) throw std::domain_error("FinCategory: unknown morphism " + id);
    return it->second;
}

int FinCategory::src(int m) const { return object_index(morphisms_.at(static_cast<size_t>(m)).src); }
int FinCategory::tgt(int m) const { return object_index(morphisms_.at(static_cast<size_t>(m)).tgt); }

int FinCategory::compose_mor(int g, int f) const {
    if (tgt(f) != src(g)) throw std::domain_error("FinCategory: pair not composable");
    return comp_.at(static_cast<size_t>(g)).at(static_cast<size_t>(f));
}

std::vector<int> FinCategory::out_morphisms(int obj) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (src(m) == obj) out.push_back(m);
    return out;
}

nlohmann::json FinCategory::to_json() const {
    nlohmann::json mors = nlohmann::json::array();
    for (const auto& m : morphisms_)
        mors.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
    nlohmann::json comp = nlohmann::json::array();
    for (int g = 0; g < num_morphisms(); ++g)
        for (int f = 0; f < num_morphisms(); ++f)
            if (comp_[static_cast<size_t>(g)][static_cast<size_t>(f)] >= 0)
                comp.push_back({morphisms_[static_cast<size_t>(g)].id,
                                morphisms_[static_cast<size_t>(f)].id,
                                morphisms_[static_cast<size_t>(
                                               comp_[static_cast<size_t>(g)][static_cast<size_t>(f)])]
                                    .id});
    nlohmann::json ids = nlohmann::json::object();
    for (int o = 0; o < num_objects(); ++o)
        ids[objects_[static_cast<size_t>(o)]] =
            morphisms_[static_cast<size_t>(identity(o))].id;
    return {{"objects", objects_}, {"morphisms", mors}, {"comp", comp}, {"identities", ids}};
}

FinCategory FinCategory::from_json(const nlohmann::json& j) {
    std::vector<Mor> mors;
    for (const auto& m : j.at("morphisms"))
        mors.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                        m.at("tgt").get<std::string>()});
    std::map<std::string, std::string> ids;
    for (const auto& [k, v] : j.at("identities").items()) ids[k] = v.get<std::string>();
    std::vector<std::array<std::string, 3>> comp;
    for (const auto& c : j.at("comp"))
        comp.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>(),
                        c.at(2).get<std::string>()});
    return FinCategory(j.at("objects").get<std::vector<std::string>>(), std::move(mors),
                       std::move(ids), std::move(comp));
}

namespace {

/// The composite arrow of P from vertex a to vertex b (a <= b); identity at
/// P.objects[a] when a == b.
int path_composite(const FinCategory& C, const NervePath& P, int a, int b) {
    if (a == b) return C.identity(P.objects.at(static_cast<size_t>(a)));
    int r = P.arrows.at(static_cast<size_t>(a));
    for (int i = a + 1; i < b; ++i) r = C.compose_mor(P.arrows.at(static_cast<size_t>(i)), r);
    return r;
}

}  // namespace

NervePath nerve_act(const FinCategory& C, const NervePath& P, const MonotoneMap& f) {
    if (f.cod != P.length()) throw std::domain_error("nerve_act: dimension mismatch");
    NervePath out;
    out.objects.resize(static_cast<size_t>(f.dom) + 1);
    out.arrows.resize(static_cast<size_t>(f.dom));
    for (int i = 0; i <= f.dom; ++i)
        out.objects[static_cast<size_t>(i)] = P.objects.at(static_cast<size_t>(f(i)));
    for (int i = 0; i < f.dom; ++i)
        out.arrows[static_cast<size_t>(i)] = path_composite(C, P, f(i), f(i + 1));
    return out;
}

NervePath nerve_compose(const FinCategory& C, const NervePath& A, int k, const NervePath& B) {
    int m = A.length(), n = B.length();
    if (k < 0 || k > m || k > n) throw std::domain_error("nerve_compose: k out of range");
    if (!(nerve_act(C, A, target_incl(k, m)) == nerve_act(C, B, source_incl(k, n))))
        throw std::domain_error(
            "nerve_compose: terminal face of A differs from initial face of B");
    NervePath out = A;
    for (int i = k; i < n; ++i) {
        out.objects.push_back(B.objects.at(static_cast<size_t>(i) + 1));
        out.arrows.push_back(B.arrows.at(static_cast<size_t>(i)));
    }
    return out;
}

std::vector<NervePath> nerve_enumerate(const FinCategory& C, int n) {
    std::vector<NervePath> out;
    for (int o = 0; o < C.num_objects(); ++o) {
        NervePath seed;
        seed.objects = {o};
        std::vector<NervePath> frontier{seed};
        for (int step = 0; step < n; ++step) {
            std::vector<NervePath> next;
            for (const auto& p : frontier)
                for (int m : C.out_morphisms(p.objects.back())) {
                    NervePath q = p;
                    q.arrows.push_back(m);
                    q.objects.push_back(C.tgt(m));
                    next.push_back(std::move(q));
                }
            frontier = std::move(next);
        }
        for (auto& p : frontier) out.push_back(std::move(p));
    }
    return out;
}

bool segal_unique(const FinCategory& C, const NervePath& A, int k, const NervePath& B) {
    int m = A.length(), n = B.length();
    int N = m + n - k;
    int count = 0;
    NervePath found;
    for (const auto& D : nerve_enumerate(C, N)) {
        if (nerve_act(C, D, source_incl(m, N)) == A && nerve_act(C, D, target_incl(n, N)) == B) {
            ++count;
            found = D;
        }
    }
    return count == 1 && found == nerve_compose(C, A, k, B);
}

nlohmann::json nerve_path_to_json(const FinCategory& C, const NervePath& P) {
    std::vector<std::string> objs, arrs;
    for (int o : P.objects) objs.push_back(C.object_name(o));
    for (int a : P.arrows) arrs.push_back(C.morphism(a).id);
    return {{"objects", objs}, {"arrows", arrs}};
}

NervePath nerve_path_from_json(const FinCategory& C, const nlohmann::json& j) {
    NervePath P;
    for (const auto& o : j.at("objects")) P.objects.push_back(C.object_index(o.get<std::string>()));
    for (const auto& a : j.at("arrows")) P.arrows.push_back(C.morphism_index(a.get<std::string>()));
    if (P.objects.size() != P.arrows.size() + 1)
        throw std::domain_error("nerve path: object/arrow count mismatch");
    for (size_t i = 0; i < P.arrows.size(); ++i)
        if (C.src(P.arrows[i]) != P.objects[i] || C.tgt(P.arrows[i]) != P.objects[i + 1])
            throw std::domain_error("nerve path: arrows do not match objects");
    return P;
}

FinCategory poset_category(const std::vector<std::string>& elements,
                           const std::function<bool(int, int)>& leq) {
    std::vector<FinCategory::Mor> mors;
    std::map<std::string, std::string> ids;
    std::vector<std::array<std::string, 3>> comp;
    auto arrow_name = [&](int x, int y) { return elements[static_cast<size_t>(x)] + "<=" +
                                                 elements[static_cast<size_t>(y)]; };
    int n = static_cast<int>(elements.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq(x, y))
                mors.push_back({arrow_name(x, y), elements[static_cast<size_t>(x)],
                                elements[static_cast<size_t>(y)]});
    for (int x = 0; x < n; ++x) {
        if (!leq(x, x)) throw std::domain_error("poset_category: relation is not reflexive");
        ids[elements[static_cast<size_t>(x)]] = arrow_name(x, x);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (leq(x, y) && leq(y, z)) {
                    if (!leq(x, z)) throw std::domain_error("poset_category: not transitive");
                    comp.push_back({arrow_name(y, z), arrow_name(x, y), arrow_name(x, z)});
                }
    return FinCategory(elements, std::move(mors), std::move(ids), std::move(comp));
}

FinCategory monoid_category(const std::vector<std::string>& elements,
                            const std::vector<std::vector<int>>& table, int unit) {
    std::vector<FinCategory::Mor> mors;
    for (const auto& e : elements) mors.push_back({e, "*", "*"});
    std::vector<std::array<std::string, 3>> comp;
    int n = static_cast<int>(elements.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            comp.push_back({elements[static_cast<size_t>(a)], elements[static_cast<size_t>(b)],
                            elements[static_cast<size_t>(
                                table.at(static_cast<size_t>(a)).at(static_cast<size_t>(b)))]});
    return FinCategory({"*"}, std::move(mors),
                       {{"*", elements.at(static_cast<size_t>(unit))}}, std::move(comp));
}

FinCategory free_arrow_category() {
    return FinCategory({"a", "b"},
                       {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}},
                       {{"a", "id_a"}, {"b", "id_b"}},
                       {{"id_a", "id_a", "id_a"},
                        {"id_b", "id_b", "id_b"},
                        {"f", "id_a", "f"},
                        {"id_b", "f", "f"}});
}

bool NerveInstance::valid(const Simplex& P) const {
    if (P.objects.size() != P.arrows.size() + 1) return false;
    for (size_t i = 0; i < P.arrows.size(); ++i) {
        if (P.arrows[i] < 0 || P.arrows[i] >= C_->num_morphisms()) return false;
        if (C_->src(P.arrows[i]) != P.objects[i]) return false;
        if (C_->tgt(P.arrows[i]) != P.objects[i + 1]) return false;
    }
    return true;
}

std::vector<NervePath> NerveInstance::extensions(const Simplex& face, int n) const {
    int k = face.length();
    if (n < k) throw std::domain_error("extensions: target dimension below face dimension");
    std::vector<NervePath> frontier{face};
    for (int step = k; step < n; ++step) {
        std::vector<NervePath> next;
        for (const auto& p : frontier)
            for (int m : C_->out_morphisms(p.objects.back())) {
                NervePath q = p;
                q.arrows.push_back(m);
                q.objects.push_back(C_->tgt(m));
                next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace gleafkit
