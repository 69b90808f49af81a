#include "edgemap/mapping.hpp"

#include "edgemap/named.hpp"

namespace edgemap {

EdgeMapping::EdgeMapping(Graph host_, std::vector<int> image_, int d_)
    : host(std::move(host_)), image(std::move(image_)), d(d_) {
    validate();
}

bool EdgeMapping::is_legal() const {
    if (d != 0 && d != 1)
        return false;
    if (static_cast<int>(image.size()) != host.size())
        return false;
    for (int e = 0; e < host.size(); ++e) {
        int t = image[static_cast<size_t>(e)];
        if (t < 0 || t >= host.size() || t == e)
            return false;
        if (d == 0 && !host.edges_disjoint(e, t))
            return false;
    }
    return true;
}

void EdgeMapping::validate() const {
    if (!is_legal())
        throw std::invalid_argument("illegal edge mapping for distance class");
}

bool QMapping::is_consistent() const {
    Graph kn = build_named({GraphKind::Complete, {n}});
    if (static_cast<int>(image.size()) != kn.size())
        return false;
    int count = 0;
    for (int e = 0; e < kn.size(); ++e) {
        int t = image[static_cast<size_t>(e)];
        if (t < 0 || t >= kn.size())
            return false;
        const Edge& a = kn.edge(e);
        const Edge& b = kn.edge(t);
        int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
        if (shared <= d)
            ++count;
    }
    return count >= free_count;
}

} // namespace edgemap
