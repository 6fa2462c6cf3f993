#include "cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <epsmult/rational.hpp>
#include <epsmult/ring.hpp>

namespace epsmult::detail
{

namespace
{

using Ray = std::vector<Exponent>;

Ray primitive(Ray v)
{
    Exponent g = 0;
    for (auto x : v) {
        g = std::gcd(g, x < 0 ? -x : x);
    }
    if (g > 1) {
        for (auto &x : v) {
            x /= g;
        }
    }
    return v;
}

// Bareiss elimination; m is square.
BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Normal of the hyperplane through r - 1 vectors in Q^r (all zero when they
// are dependent).
std::vector<BigInt> cross(const std::vector<const Ray *> &vs, std::size_t r)
{
    std::vector<BigInt> normal(r);
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::vector<BigInt>> minor;
        for (const Ray *v : vs) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < r; ++j) {
                if (j != k) {
                    row.emplace_back((*v)[j]);
                }
            }
            minor.push_back(std::move(row));
        }
        normal[k] = determinant(std::move(minor));
        if (k % 2 == 1) {
            normal[k] = -normal[k];
        }
    }
    return normal;
}

BigInt dot(const std::vector<BigInt> &n, const Ray &v)
{
    BigInt s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += n[k] * v[k];
    }
    return s;
}

// Calls f on every k-subset of {0..n-1}, as an increasing index list.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F &&f)
{
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace

std::size_t max_face_dimension_avoiding(const std::vector<std::vector<Exponent>> &base_rays,
                                        const std::vector<std::vector<Exponent>> &rays)
{
    // Deduplicate primitive directions; a direction shared with a base ray counts as base.
    std::map<Ray, bool> tagged;
    auto add = [&](const Ray &v, bool base) {
        if (std::all_of(v.begin(), v.end(), [](Exponent x) { return x == 0; })) {
            return;
        }
        auto [it, inserted] = tagged.try_emplace(primitive(v), base);
        if (!inserted && base) {
            it->second = true;
        }
    };
    for (const auto &v : base_rays) {
        add(v, true);
    }
    for (const auto &v : rays) {
        add(v, false);
    }
    if (tagged.empty()) {
        return 0;
    }
    std::vector<Ray> all;
    std::vector<bool> is_base;
    for (const auto &[v, b] : tagged) {
        all.push_back(v);
        is_base.push_back(b);
    }
    const std::size_t r = integer_rank(all);

    // Coordinates on which the projection of the span is injective.
    const std::size_t width = all.front().size();
    std::vector<std::size_t> cols;
    std::vector<Ray> col_rows;
    for (std::size_t j = 0; j < width && cols.size() < r; ++j) {
        Ray column;
        for (const auto &v : all) {
            column.push_back(v[j]);
        }
        col_rows.push_back(column);
        if (integer_rank(col_rows) > cols.size()) {
            cols.push_back(j);
        } else {
            col_rows.pop_back();
        }
    }
    std::vector<Ray> proj;
    for (const auto &v : all) {
        Ray p;
        for (auto j : cols) {
            p.push_back(v[j]);
        }
        proj.push_back(std::move(p));
    }

    const std::size_t n = proj.size();
    std::set<std::vector<std::size_t>> facets;
    for_each_subset(n, r - 1, [&](const std::vector<std::size_t> &subset) {
        std::vector<const Ray *> vs;
        for (auto i : subset) {
            vs.push_back(&proj[i]);
        }
        auto normal = cross(vs, r);
        if (std::all_of(normal.begin(), normal.end(), [](const BigInt &x) { return x == 0; })) {
            return;
        }
        int sign = 0;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i) {
            const BigInt s = dot(normal, proj[i]);
            if (s == 0) {
                on.push_back(i);
                continue;
            }
            const int si = s > 0 ? 1 : -1;
            if (sign == 0) {
                sign = si;
            } else if (sign != si) {
                return;
            }
        }
        facets.insert(std::move(on));
    });

    std::vector<std::size_t> whole(n);
    std::iota(whole.begin(), whole.end(), 0);
    std::set<std::vector<std::size_t>> faces{whole};
    std::vector<std::vector<std::size_t>> queue{whole};
    while (!queue.empty()) {
        auto face = std::move(queue.back());
        queue.pop_back();
        for (const auto &facet : facets) {
            std::vector<std::size_t> meet;
            std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(meet));
            if (faces.insert(meet).second) {
                queue.push_back(std::move(meet));
            }
        }
    }

    std::size_t best = 0;
    for (const auto &face : faces) {
        if (face.empty() || std::any_of(face.begin(), face.end(), [&](std::size_t i) { return is_base[i]; })) {
            continue;
        }
        std::vector<Ray> members;
        for (auto i : face) {
            members.push_back(proj[i]);
        }
        best = std::max(best, integer_rank(members));
    }
    return best;
}

} // namespace epsmult::detail
