#include "bergelin/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace bergelin {

namespace {

long long checked_pow(long long base, int exp, long long cap) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap)
            throw Error(ErrorCode::InvalidParams, "construction size exceeds the desk-scale cap");
    }
    return out;
}

}  // namespace

LatticeHypergraph lattice(int r, int d) {
    if (r < 2 || d < 1)
        throw Error(ErrorCode::InvalidParams,
                    "lattice needs r >= 2 and d >= 1, got r=" + std::to_string(r) +
                        " d=" + std::to_string(d));
    const long long n = checked_pow(r, d, 1000000);

    LatticeHypergraph out{LinearHypergraph(static_cast<int>(n), r, {}), {}, {}};
    out.coordinates.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(d), 0));
    for (long long v = 0; v < n; ++v) {
        long long rest = v;
        for (int i = 0; i < d; ++i) {
            out.coordinates[static_cast<size_t>(v)][static_cast<size_t>(i)] =
                static_cast<int>(rest % r);
            rest /= r;
        }
    }

    std::vector<Edge> edges;
    std::vector<int> colors;
    const long long lines_per_dir = n / r;
    edges.reserve(static_cast<size_t>(d * lines_per_dir));
    long long stride = 1;
    for (int dir = 0; dir < d; ++dir) {
        // bases: vertices whose dir coordinate is 0, in increasing id order
        for (long long v = 0; v < n; ++v) {
            if ((v / stride) % r != 0) continue;
            Edge line(static_cast<size_t>(r));
            for (int step = 0; step < r; ++step)
                line[static_cast<size_t>(step)] = static_cast<Vertex>(v + step * stride);
            edges.push_back(std::move(line));
            colors.push_back(dir);
        }
        stride *= r;
    }

    out.base = LinearHypergraph(static_cast<int>(n), r, std::move(edges));
    out.colors = std::move(colors);
    return out;
}

FConstruction build_F(int n, int r) {
    if (r < 3 || n <= r)
        throw Error(ErrorCode::InvalidParams,
                    "build_F needs n > r >= 3, got n=" + std::to_string(n) +
                        " r=" + std::to_string(r));
    const long long block_size = checked_pow(r - 1, r, 1000000);
    if ((n - r) % block_size != 0)
        throw Error(ErrorCode::DivisibilityViolated,
                    "(r-1)^r = " + std::to_string(block_size) + " does not divide n-r = " +
                        std::to_string(n - r));
    const int blocks = static_cast<int>((n - r) / block_size);

    FConstruction f{LinearHypergraph(n, r, {}), blocks, 0, 1, {}, 0, {}, {}, {}, {}};
    for (int i = 0; i < r - 2; ++i) f.leaves.push_back(2 + i);
    f.block_of.assign(static_cast<size_t>(n), -1);

    std::vector<Edge> edges;
    Edge l(static_cast<size_t>(r));
    std::iota(l.begin(), l.end(), 0);
    edges.push_back(std::move(l));

    // per-block [r-1]^r coordinates; vertex id = r + block*block_size + mixed radix
    auto vertex_at = [&](int block, long long offset) {
        return static_cast<Vertex>(r + block * block_size + offset);
    };

    // lines of a given direction inside one block, bases in increasing order
    auto block_lines = [&](int block, int dir) {
        std::vector<Edge> lines;
        long long stride = 1;
        for (int i = 0; i < dir; ++i) stride *= r - 1;
        for (long long off = 0; off < block_size; ++off) {
            if ((off / stride) % (r - 1) != 0) continue;
            Edge line(static_cast<size_t>(r - 1));
            for (int step = 0; step < r - 1; ++step)
                line[static_cast<size_t>(step)] = vertex_at(block, off + step * stride);
            lines.push_back(std::move(line));
        }
        return lines;
    };

    for (int b = 0; b < blocks; ++b) {
        for (long long off = 0; off < block_size; ++off)
            f.block_of[static_cast<size_t>(vertex_at(b, off))] = b;

        for (Edge& line : block_lines(b, 0)) {
            line.insert(line.begin(), f.u);
            f.red_edges.push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back(std::move(line));
        }
        for (Edge& line : block_lines(b, 1)) {
            line.insert(line.begin(), f.w);
            f.blue_edges.push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back(std::move(line));
        }
    }

    f.latent_lines.assign(static_cast<size_t>(r - 2), {});
    for (int c = 0; c < r - 2; ++c)
        for (int b = 0; b < blocks; ++b)
            for (Edge& line : block_lines(b, c + 2))
                f.latent_lines[static_cast<size_t>(c)].push_back(std::move(line));

    f.base = LinearHypergraph(n, r, std::move(edges));
    return f;
}

namespace {

GConstruction assemble_G(FConstruction f, int t, std::vector<std::vector<int>> chosen) {
    const int n = f.base.vertex_count();
    const int r = f.base.uniformity();
    std::vector<Edge> edges = f.base.edges();

    GConstruction g{LinearHypergraph(n, r, {}), std::move(f), t, std::move(chosen), {}};
    for (int c = 0; c < r - 2; ++c) {
        std::sort(g.chosen_lines[static_cast<size_t>(c)].begin(),
                  g.chosen_lines[static_cast<size_t>(c)].end());
        for (int idx : g.chosen_lines[static_cast<size_t>(c)]) {
            Edge e = g.seed.latent_lines[static_cast<size_t>(c)][static_cast<size_t>(idx)];
            e.push_back(g.seed.leaves[static_cast<size_t>(c)]);
            g.fan_edges.push_back(static_cast<EdgeId>(edges.size()));
            edges.push_back(std::move(e));
        }
    }
    g.base = LinearHypergraph(n, r, std::move(edges));
    return g;
}

void check_G_params(const FConstruction& f, int t) {
    if (t < 3) throw Error(ErrorCode::InvalidParams, "fan extension needs t >= 3");
    const auto per_color = f.latent_lines.empty() ? 0 : f.latent_lines[0].size();
    if (static_cast<size_t>(t - 1) > per_color)
        throw Error(ErrorCode::NotEnoughColorEdges,
                    "need t-1 = " + std::to_string(t - 1) + " lines per color, have " +
                        std::to_string(per_color));
}

}  // namespace

GConstruction sample_G(int n, int r, int t, std::uint64_t rng_seed) {
    FConstruction f = build_F(n, r);
    check_G_params(f, t);

    std::mt19937_64 rng(rng_seed);
    std::vector<std::vector<int>> chosen(static_cast<size_t>(r - 2));
    for (int c = 0; c < r - 2; ++c) {
        std::vector<int> pool(f.latent_lines[static_cast<size_t>(c)].size());
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        chosen[static_cast<size_t>(c)].assign(pool.begin(), pool.begin() + (t - 1));
    }
    return assemble_G(std::move(f), t, std::move(chosen));
}

std::vector<GConstruction> enumerate_G(int n, int r, int t, std::size_t max_candidates) {
    FConstruction f = build_F(n, r);
    check_G_params(f, t);

    const size_t lines = f.latent_lines[0].size();
    const size_t pick = static_cast<size_t>(t - 1);

    // family size = C(lines, pick)^(r-2)
    double total = 1.0;
    for (int c = 0; c < r - 2; ++c) {
        double comb = 1.0;
        for (size_t i = 0; i < pick; ++i)
            comb = comb * static_cast<double>(lines - i) / static_cast<double>(i + 1);
        total *= comb;
    }
    if (total > static_cast<double>(max_candidates))
        throw Error(ErrorCode::BudgetExceeded,
                    "fan family has ~" + std::to_string(static_cast<long long>(total)) +
                        " members, budget " + std::to_string(max_candidates));

    std::vector<std::vector<int>> combos;
    std::vector<int> cur;
    std::function<void(size_t)> gen = [&](size_t start) {
        if (cur.size() == pick) {
            combos.push_back(cur);
            return;
        }
        for (size_t i = start; i < lines; ++i) {
            cur.push_back(static_cast<int>(i));
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);

    std::vector<GConstruction> family;
    std::vector<size_t> pos(static_cast<size_t>(r - 2), 0);
    while (true) {
        std::vector<std::vector<int>> chosen;
        for (size_t c = 0; c < pos.size(); ++c) chosen.push_back(combos[pos[c]]);
        family.push_back(assemble_G(build_F(n, r), t, std::move(chosen)));

        size_t c = 0;
        while (c < pos.size() && ++pos[c] == combos.size()) pos[c++] = 0;
        if (c == pos.size()) break;
    }
    return family;
}

HConstruction sample_H(int n, int r, int t, std::uint64_t rng_seed) {
    if (t <= r) throw Error(ErrorCode::InvalidParams, "packed extension needs t > r");
    GConstruction g = sample_G(n, r, t, rng_seed);
    const FConstruction& f = g.seed;

    HConstruction h{LinearHypergraph(n, r, {}), g, {}};
    if (f.block_count < r) {
        h.base = g.base;
        return h;
    }

    const long long block_size = (n - r) / f.block_count;

    // every covered pair of the current graph, for O(1) linearity checks
    std::unordered_set<std::uint64_t> pairs;
    auto key = [&](Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    };
    for (const Edge& e : g.base.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) pairs.insert(key(e[i], e[j]));

    std::vector<int> total_deg(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) total_deg[static_cast<size_t>(v)] = g.base.degree(v);
    std::vector<int> packed_deg(static_cast<size_t>(n), 0);

    // candidates: r distinct blocks, one vertex from each
    std::vector<std::vector<int>> block_sets;
    {
        std::vector<int> cur;
        std::function<void(int)> gen = [&](int start) {
            if (static_cast<int>(cur.size()) == r) {
                block_sets.push_back(cur);
                return;
            }
            for (int b = start; b < f.block_count; ++b) {
                cur.push_back(b);
                gen(b + 1);
                cur.pop_back();
            }
        };
        gen(0);
    }

    std::mt19937_64 rng(rng_seed ^ 0x9e3779b97f4a7c15ULL);

    double full_count = static_cast<double>(block_sets.size());
    for (int i = 0; i < r; ++i) full_count *= static_cast<double>(block_size);

    std::vector<Edge> candidates;
    if (full_count <= 2e6) {
        for (const auto& bs : block_sets) {
            std::vector<long long> offset(static_cast<size_t>(r), 0);
            while (true) {
                Edge e(static_cast<size_t>(r));
                for (int i = 0; i < r; ++i)
                    e[static_cast<size_t>(i)] = static_cast<Vertex>(
                        r + bs[static_cast<size_t>(i)] * block_size +
                        offset[static_cast<size_t>(i)]);
                candidates.push_back(std::move(e));

                int i = 0;
                while (i < r && ++offset[static_cast<size_t>(i)] == block_size)
                    offset[static_cast<size_t>(i++)] = 0;
                if (i == r) break;
            }
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
    } else {
        // full product too large to enumerate; seeded random draws instead
        std::uniform_int_distribution<int> pick_block(0, f.block_count - 1);
        std::uniform_int_distribution<long long> pick_off(0, block_size - 1);
        for (int attempt = 0; attempt < 400000; ++attempt) {
            std::vector<int> bs;
            while (static_cast<int>(bs.size()) < r) {
                int b = pick_block(rng);
                if (std::find(bs.begin(), bs.end(), b) == bs.end()) bs.push_back(b);
            }
            Edge e(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                e[static_cast<size_t>(i)] =
                    static_cast<Vertex>(r + bs[static_cast<size_t>(i)] * block_size + pick_off(rng));
            candidates.push_back(std::move(e));
        }
    }

    std::vector<Edge> edges = g.base.edges();
    for (const Edge& e : candidates) {
        bool ok = true;
        for (size_t i = 0; ok && i < e.size(); ++i) {
            Vertex v = e[i];
            if (packed_deg[static_cast<size_t>(v)] + 1 > t - 3 ||
                total_deg[static_cast<size_t>(v)] + 1 > t - 1)
                ok = false;
            for (size_t j = i + 1; ok && j < e.size(); ++j)
                if (pairs.count(key(v, e[j]))) ok = false;
        }
        if (!ok) continue;
        for (size_t i = 0; i < e.size(); ++i) {
            ++packed_deg[static_cast<size_t>(e[i])];
            ++total_deg[static_cast<size_t>(e[i])];
            for (size_t j = i + 1; j < e.size(); ++j) pairs.insert(key(e[i], e[j]));
        }
        h.packed_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back(e);
    }

    h.base = LinearHypergraph(n, r, std::move(edges));
    return h;
}

LinearHypergraph reference_graph(int n, int s, int t) {
    if (s < 2) throw Error(ErrorCode::InvalidParams, "reference graph needs s >= 2");
    if (t < 1) throw Error(ErrorCode::InvalidT, "reference graph needs t >= 1");
    if ((n - s + 1) % t != 0)
        throw Error(ErrorCode::DivisibilityViolated,
                    "t = " + std::to_string(t) + " does not divide n-s+1 = " +
                        std::to_string(n - s + 1));
    const int groups = (n - s + 1) / t;
    if (groups < 1) throw Error(ErrorCode::InvalidParams, "no room for a clique group");

    std::vector<Edge> edges;
    const int c = s - 1;  // clique part order
    for (Vertex a = 0; a < c; ++a)
        for (Vertex b = a + 1; b < c; ++b) edges.push_back({a, b});
    for (Vertex a = 0; a < c; ++a)
        for (Vertex b = c; b < n; ++b) edges.push_back({a, b});
    for (int g = 0; g < groups; ++g) {
        const Vertex base = c + g * t;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) edges.push_back({base + i, base + j});
    }
    return LinearHypergraph(n, 2, std::move(edges));
}

}  // namespace bergelin
