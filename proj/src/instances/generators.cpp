#include "hyperchroma/instances/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "hyperchroma/util/rng.hpp"

namespace hyperchroma {

bool is_prime(std::uint64_t q)
{
    if (q < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t smallest_prime_at_least(double u)
{
    if (!(u > 2.0)) {
        return 2;
    }
    auto q = static_cast<std::uint64_t>(std::ceil(u));
    while (!is_prime(q)) {
        ++q;
    }
    return q;
}

namespace {

using Triple = std::array<std::uint64_t, 3>;

// Canonical representatives of the points of PG(2, q): first nonzero coordinate is 1.
std::vector<Triple> projective_points(std::uint64_t q)
{
    std::vector<Triple> points;
    points.reserve(q * q + q + 1);
    for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
            points.push_back({1, a, b});
        }
    }
    for (std::uint64_t b = 0; b < q; ++b) {
        points.push_back({0, 1, b});
    }
    points.push_back({0, 0, 1});
    return points;
}

void check_plane(const Hypergraph& h, std::uint64_t q)
{
    const std::size_t size = q * q + q + 1;
    auto fail = [](const std::string& what) { throw std::logic_error("projective plane construction: " + what); };
    if (h.n != size || h.edge_count() != size) {
        fail("wrong point or line count");
    }
    std::vector<std::size_t> degree(h.n, 0);
    for (const Edge& e : h.edges) {
        if (e.size() != q + 1) {
            fail("line of wrong rank");
        }
        for (Vertex v : e) {
            ++degree[v];
        }
    }
    if (std::any_of(degree.begin(), degree.end(), [&](std::size_t d) { return d != q + 1; })) {
        fail("point on the wrong number of lines");
    }
    std::vector<Vertex> common;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            common.clear();
            std::set_intersection(h.edges[a].begin(), h.edges[a].end(), h.edges[b].begin(), h.edges[b].end(),
                                  std::back_inserter(common));
            if (common.size() != 1) {
                fail("two lines meet in " + std::to_string(common.size()) + " points");
            }
        }
    }
}

} // namespace

Hypergraph projective_plane(std::uint64_t q)
{
    if (!is_prime(q)) {
        throw std::invalid_argument("projective plane order " + std::to_string(q) +
                                    " is not prime (prime powers are not supported)");
    }
    // Lines are the canonical normal vectors; by duality they enumerate like the points.
    const auto points = projective_points(q);
    Hypergraph h;
    h.n = points.size();
    h.edges.reserve(points.size());
    for (const Triple& normal : points) {
        Edge line;
        for (Vertex p = 0; p < points.size(); ++p) {
            const Triple& pt = points[p];
            if ((normal[0] * pt[0] + normal[1] * pt[1] + normal[2] * pt[2]) % q == 0) {
                line.push_back(p);
            }
        }
        h.edges.push_back(std::move(line));
    }
    check_plane(h, q);
    return h;
}

Hypergraph pad_isolated(const Hypergraph& h, std::size_t n_target)
{
    if (n_target < h.n) {
        throw std::invalid_argument("cannot pad " + std::to_string(h.n) + " vertices down to " +
                                    std::to_string(n_target));
    }
    Hypergraph padded = h;
    padded.n = n_target;
    return padded;
}

namespace {

// Least integer c >= 0 with c^2 >= value.
std::uint64_t ceil_sqrt(double value)
{
    if (!(value > 0.0)) {
        return 0;
    }
    auto c = static_cast<std::uint64_t>(std::ceil(std::sqrt(value)));
    while (c > 0 && static_cast<double>(c - 1) * static_cast<double>(c - 1) >= value) {
        --c;
    }
    while (static_cast<double>(c) * static_cast<double>(c) < value) {
        ++c;
    }
    return c;
}

std::uint64_t plane_order_for(double x, std::size_t n)
{
    return smallest_prime_at_least(static_cast<double>(ceil_sqrt(x * static_cast<double>(n))));
}

} // namespace

std::optional<std::size_t> smallest_feasible_n(double x, std::size_t from, std::size_t limit)
{
    for (std::size_t n = std::max<std::size_t>(from, 1); n < limit; ++n) {
        const std::uint64_t q = plane_order_for(x, n);
        if (q * q + q + 1 <= n) {
            return n;
        }
    }
    return std::nullopt;
}

LowerBoundInstance lower_bound_instance(const LowerBoundSpec& spec)
{
    if (!(spec.x > 0.0 && spec.x < 1.0)) {
        throw std::invalid_argument("lower-bound spec needs x in (0, 1)");
    }
    if (!(spec.delta > 0.0)) {
        throw std::invalid_argument("lower-bound spec needs delta > 0");
    }
    if (spec.n == 0) {
        throw std::invalid_argument("lower-bound spec needs n >= 1");
    }
    LowerBoundCertificate cert;
    cert.x = spec.x;
    cert.delta = spec.delta;
    cert.n = spec.n;
    cert.xn = spec.x * static_cast<double>(spec.n);
    cert.u = std::sqrt(cert.xn);
    cert.q = plane_order_for(spec.x, spec.n);
    cert.r = cert.q + 1;
    cert.plane_size = cert.q * cert.q + cert.q + 1;
    if (cert.plane_size > spec.n) {
        const auto feasible = smallest_feasible_n(spec.x, spec.n + 1);
        throw InfeasibleSpec("q = " + std::to_string(cert.q) + " needs " + std::to_string(cert.plane_size) +
                             " vertices but n = " + std::to_string(spec.n) + "; smallest feasible n is " +
                             (feasible ? std::to_string(*feasible) : std::string("beyond the search limit")));
    }

    LowerBoundInstance out;
    out.hypergraph = pad_isolated(projective_plane(cert.q), spec.n);
    cert.min_rank = min_rank(out.hypergraph);
    cert.max_rank = max_rank(out.hypergraph);
    cert.exceeds_xn = static_cast<double>(cert.plane_size) > cert.xn;
    const double r = static_cast<double>(cert.r);
    cert.rank_at_least_sqrt = r * r >= cert.xn;
    cert.rank_within_window = r <= (1.0 + spec.delta) * cert.u;
    out.certificate = cert;
    return out;
}

void RandomLinearSpec::validate() const
{
    if (rank_min < 2) {
        throw std::invalid_argument("rank_min must be at least 2");
    }
    if (rank_min > rank_max) {
        throw std::invalid_argument("rank_min exceeds rank_max");
    }
    if (rank_max > n) {
        throw std::invalid_argument("rank_max exceeds n");
    }
}

RandomInstance random_linear_hypergraph(const RandomLinearSpec& spec)
{
    spec.validate();
    RandomInstance out;
    out.hypergraph.n = spec.n;
    Rng rng(spec.seed);

    const auto n = static_cast<std::uint64_t>(spec.n);
    std::unordered_set<std::uint64_t> covered; // pairs a < b as a * n + b
    std::vector<char> chosen(spec.n, 0);
    Edge candidate;
    std::size_t misses = 0;
    const std::size_t target = spec.target_edges.value_or(SIZE_MAX);

    while (out.hypergraph.edge_count() < target && misses < spec.failure_budget) {
        ++out.draws;
        const auto r = static_cast<std::size_t>(
            uniform_between(rng, static_cast<std::int64_t>(spec.rank_min), static_cast<std::int64_t>(spec.rank_max)));
        // Floyd's sampling of an r-subset of [0, n).
        candidate.clear();
        for (std::uint64_t j = n - r; j < n; ++j) {
            const auto t = static_cast<Vertex>(uniform_below(rng, j + 1));
            const Vertex pick = chosen[t] ? static_cast<Vertex>(j) : t;
            chosen[pick] = 1;
            candidate.push_back(pick);
        }
        for (Vertex v : candidate) {
            chosen[v] = 0;
        }
        std::sort(candidate.begin(), candidate.end());

        bool clash = false;
        for (std::size_t a = 0; a < r && !clash; ++a) {
            for (std::size_t b = a + 1; b < r; ++b) {
                if (covered.count(candidate[a] * n + candidate[b])) {
                    clash = true;
                    break;
                }
            }
        }
        if (clash) {
            ++misses;
            continue;
        }
        misses = 0;
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = a + 1; b < r; ++b) {
                covered.insert(candidate[a] * n + candidate[b]);
            }
        }
        out.hypergraph.edges.push_back(candidate);
    }
    if (spec.target_edges && out.hypergraph.edge_count() < *spec.target_edges) {
        out.shortfall = "packed " + std::to_string(out.hypergraph.edge_count()) + " of " +
                        std::to_string(*spec.target_edges) + " edges before " +
                        std::to_string(spec.failure_budget) + " consecutive rejections";
    }
    return out;
}

} // namespace hyperchroma
