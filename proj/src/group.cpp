#include "admis/group.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace admis {

std::string MetacyclicPresentation::str() const {
    std::ostringstream os;
    os << "(e=" << e << ", f=" << f << ", i=" << i << ", q=" << q << ")";
    return os.str();
}

void validate_presentation(const MetacyclicPresentation& pres) {
    if (pres.e < 1 || pres.f < 1)
        throw Error(ErrorCode::InconsistentPresentation, "e and f must be positive");
    long e = pres.e;
    long q = ((pres.q % e) + e) % e;
    long i = ((pres.i % e) + e) % e;
    if (e == 1) return;
    if (std::gcd(q, e) != 1)
        throw Error(ErrorCode::InconsistentPresentation, "q must be a unit mod e");
    // q^f = 1 (mod e): the conjugation action must have order dividing f
    long acc = 1;
    for (long k = 0; k < pres.f; ++k) acc = (acc * q) % e;
    if (acc != 1)
        throw Error(ErrorCode::InconsistentPresentation, "q^f != 1 mod e collapses x");
    if ((i * ((q - 1 + e) % e)) % e != 0)
        throw Error(ErrorCode::InconsistentPresentation, "y^f = x^i must be centralized by y");
}

struct FiniteGroup::State {
    long n = 1;
    std::vector<int> table; // n*n, table[a*n+b] = a*b
    int id = 0;
    std::vector<int> inv;
    std::vector<int> gens;
    GroupSource source = GroupSource::Trivial;

    mutable std::mutex mu;
    mutable std::vector<long> orders;        // element orders, lazily filled
    mutable std::optional<bool> abelian;
    mutable std::vector<int> frat_rep;       // coset representative in G/Phi
    mutable std::map<int, std::vector<int>> frat_coords;
    mutable int frat_dim = -1;
    mutable long frat_p = 0;
    mutable std::optional<std::vector<MetacyclicPresentation>> presentations;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
};

FiniteGroup FiniteGroup::from_table(std::vector<int> table, long n, GroupSource source,
                                    std::vector<int> gens) {
    auto st = std::make_shared<State>();
    st->n = n;
    st->table = std::move(table);
    st->source = source;
    st->gens = std::move(gens);

    // identity
    st->id = -1;
    for (int cand = 0; cand < n && st->id < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (st->mul(cand, a) != a || st->mul(a, cand) != a) ok = false;
        if (ok) st->id = cand;
    }
    if (st->id < 0) throw Error(ErrorCode::SelfCheckFailed, "no identity in Cayley table");

    st->inv.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (st->mul(a, b) == st->id && st->mul(b, a) == st->id) {
                st->inv[static_cast<size_t>(a)] = b;
                break;
            }
        if (st->inv[static_cast<size_t>(a)] < 0)
            throw Error(ErrorCode::SelfCheckFailed, "missing inverse in Cayley table");
    }

    // associativity: complete check for small tables, sampled above
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (st->mul(st->mul(a, b), c) != st->mul(a, st->mul(b, c)))
                        throw Error(ErrorCode::SelfCheckFailed, "Cayley table not associative");
    } else {
        DetRng rng(0x51CA11Eull ^ static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 200000; ++trial) {
            int a = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int b = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            int c = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            if (st->mul(st->mul(a, b), c) != st->mul(a, st->mul(b, c)))
                throw Error(ErrorCode::SelfCheckFailed, "Cayley table not associative");
        }
    }
    return FiniteGroup(std::move(st));
}

FiniteGroup FiniteGroup::trivial() {
    return from_table({0}, 1, GroupSource::Trivial, {});
}

FiniteGroup FiniteGroup::from_metacyclic(const MetacyclicPresentation& pres, long order_budget) {
    validate_presentation(pres);
    long e = pres.e, f = pres.f;
    long q = e == 1 ? 0 : ((pres.q % e) + e) % e;
    long i = e == 1 ? 0 : ((pres.i % e) + e) % e;
    long n = e * f;
    if (n > order_budget) throw Error(ErrorCode::OrderBudgetExceeded, "metacyclic order over budget");

    // elements x^a y^b indexed a*f + b; y^b x = x^(q^b) y^b
    std::vector<long> qpow(static_cast<size_t>(f), 1);
    for (long b = 1; b < f; ++b) qpow[static_cast<size_t>(b)] = e == 1 ? 0 : (qpow[b - 1] * q) % e;

    std::vector<int> table(static_cast<size_t>(n) * n);
    for (long a1 = 0; a1 < e; ++a1)
        for (long b1 = 0; b1 < f; ++b1)
            for (long a2 = 0; a2 < e; ++a2)
                for (long b2 = 0; b2 < f; ++b2) {
                    long a = e == 1 ? 0 : (a1 + a2 * qpow[static_cast<size_t>(b1)]) % e;
                    long b = b1 + b2;
                    if (b >= f) {
                        b -= f;
                        a = e == 1 ? 0 : (a + i) % e;
                    }
                    table[static_cast<size_t>(a1 * f + b1) * n + (a2 * f + b2)] =
                        static_cast<int>(a * f + b);
                }
    std::vector<int> gens;
    if (e > 1) gens.push_back(static_cast<int>(1 * f + 0)); // x
    if (f > 1) gens.push_back(static_cast<int>(0 * f + 1)); // y
    FiniteGroup G = from_table(std::move(table), n, GroupSource::MetacyclicParams, std::move(gens));
    if (e > 1 && G.element_order(static_cast<int>(f)) != e)
        throw Error(ErrorCode::InconsistentPresentation, "x does not have order e");
    return G;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                           long order_budget) {
    if (gens.empty()) return trivial();
    size_t m = gens.front().size();
    for (const auto& g : gens) {
        if (g.size() != m) throw Error(ErrorCode::ParseError, "generators act on different point counts");
        std::vector<bool> seen(m, false);
        for (int v : g) {
            if (v < 0 || static_cast<size_t>(v) >= m || seen[static_cast<size_t>(v)])
                throw Error(ErrorCode::ParseError, "generator is not a bijection");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elements;
    elements.push_back(identity);
    index.emplace(identity, 0);
    std::vector<int> gen_ids;

    // orbit closure under right multiplication
    for (size_t head = 0; head < elements.size(); ++head) {
        std::vector<int> cur = elements[head];
        for (const auto& g : gens) {
            std::vector<int> prod(m);
            for (size_t x = 0; x < m; ++x) prod[x] = g[static_cast<size_t>(cur[x])];
            if (index.emplace(prod, static_cast<int>(elements.size())).second) {
                elements.push_back(prod);
                if (static_cast<long>(elements.size()) > order_budget)
                    throw Error(ErrorCode::OrderBudgetExceeded, "permutation closure over budget");
            }
        }
    }
    long n = static_cast<long>(elements.size());
    for (const auto& g : gens) gen_ids.push_back(index.at(g));

    std::vector<int> table(static_cast<size_t>(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            std::vector<int> prod(m);
            for (size_t x = 0; x < m; ++x)
                prod[x] = elements[static_cast<size_t>(a)]
                                  [static_cast<size_t>(elements[static_cast<size_t>(b)][x])];
            table[static_cast<size_t>(a) * n + b] = index.at(prod);
        }
    return from_table(std::move(table), n, GroupSource::PermutationGenerators, std::move(gen_ids));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                        long order_budget) {
    long n = A.order() * B.order();
    if (n > order_budget) throw Error(ErrorCode::OrderBudgetExceeded, "product order over budget");
    long nb = B.order();
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (long a1 = 0; a1 < A.order(); ++a1)
        for (long b1 = 0; b1 < nb; ++b1)
            for (long a2 = 0; a2 < A.order(); ++a2)
                for (long b2 = 0; b2 < nb; ++b2)
                    table[static_cast<size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        static_cast<int>(A.mul(static_cast<int>(a1), static_cast<int>(a2)) * nb +
                                         B.mul(static_cast<int>(b1), static_cast<int>(b2)));
    std::vector<int> gens;
    for (int g : A.generators()) gens.push_back(static_cast<int>(g * nb + B.identity()));
    for (int g : B.generators()) gens.push_back(static_cast<int>(A.identity() * nb + g));
    return from_table(std::move(table), n, GroupSource::DirectProduct, std::move(gens));
}

long FiniteGroup::order() const { return st_->n; }
int FiniteGroup::identity() const { return st_->id; }
int FiniteGroup::mul(int a, int b) const { return st_->mul(a, b); }
int FiniteGroup::inv(int a) const { return st_->inv[static_cast<size_t>(a)]; }
int FiniteGroup::conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
int FiniteGroup::commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
GroupSource FiniteGroup::source() const { return st_->source; }
const std::vector<int>& FiniteGroup::generators() const { return st_->gens; }

int FiniteGroup::power(int a, long k) const {
    long ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int acc = st_->id, base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

long FiniteGroup::element_order(int a) const {
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        if (st_->orders.empty()) st_->orders.assign(static_cast<size_t>(st_->n), 0);
        if (st_->orders[static_cast<size_t>(a)] != 0) return st_->orders[static_cast<size_t>(a)];
    }
    long ord = 1;
    int x = a;
    while (x != st_->id) {
        x = mul(x, a);
        ++ord;
    }
    std::lock_guard<std::mutex> lock(st_->mu);
    st_->orders[static_cast<size_t>(a)] = ord;
    return ord;
}

long FiniteGroup::exponent() const {
    long ex = 1;
    for (int g = 0; g < st_->n; ++g) ex = std::lcm(ex, element_order(g));
    return ex;
}

bool FiniteGroup::is_abelian() const {
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        if (st_->abelian) return *st_->abelian;
    }
    bool ab = true;
    for (int a = 0; a < st_->n && ab; ++a)
        for (int b = a + 1; b < st_->n; ++b)
            if (mul(a, b) != mul(b, a)) {
                ab = false;
                break;
            }
    std::lock_guard<std::mutex> lock(st_->mu);
    st_->abelian = ab;
    return ab;
}

std::optional<long> FiniteGroup::p_group_prime() const {
    long n = st_->n;
    if (n == 1) return std::nullopt;
    long p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (p * p > n) p = n;
    long m = n;
    while (m % p == 0) m /= p;
    if (m != 1) return std::nullopt;
    return p;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::vector<bool> member(static_cast<size_t>(st_->n), false);
    std::vector<int> out{st_->id};
    member[static_cast<size_t>(st_->id)] = true;
    std::vector<int> frontier{st_->id};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int g : gens) {
            for (int y : {mul(x, g), mul(g, x)}) {
                if (!member[static_cast<size_t>(y)]) {
                    member[static_cast<size_t>(y)] = true;
                    out.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteGroup::derived_subgroup(const std::vector<int>& members) const {
    std::vector<int> comms;
    std::set<int> seen;
    for (int a : members)
        for (int b : members) {
            int c = commutator(a, b);
            if (seen.insert(c).second) comms.push_back(c);
        }
    return subgroup_closure(comms);
}

std::vector<int> FiniteGroup::frattini_subgroup() const {
    auto p = p_group_prime();
    if (!p && st_->n > 1) throw Error(ErrorCode::NotPGroup, "Frattini subgroup needs a p-group");
    std::set<int> gens;
    long pl = p ? *p : 2;
    for (int g = 0; g < st_->n; ++g) gens.insert(power(g, pl));
    for (int a = 0; a < st_->n; ++a)
        for (int b = 0; b < st_->n; ++b) gens.insert(commutator(a, b));
    return subgroup_closure(std::vector<int>(gens.begin(), gens.end()));
}

long FiniteGroup::d_of_group() const {
    if (st_->n == 1) return 0;
    auto p = p_group_prime();
    if (!p) throw Error(ErrorCode::NotPGroup, "d(G) is defined here for p-groups");
    frattini_coordinates(st_->id); // builds and caches the quotient data
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->frat_dim;
}

namespace {

/* F_p span bookkeeping over coordinate vectors */
struct SpanTracker {
    long p;
    std::vector<std::vector<int>> rows; // row-echelon basis
    int dim() const { return static_cast<int>(rows.size()); }

    static int mod_inv_small(long a, long p) {
        long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
        while (newr != 0) {
            long q = r / newr;
            long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return static_cast<int>(((t % p) + p) % p);
    }

    /* reduce v against rows; returns true (and absorbs) when independent */
    bool add(std::vector<int> v) {
        for (const auto& row : rows) {
            int lead = -1;
            for (size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) {
                    lead = static_cast<int>(j);
                    break;
                }
            if (lead < 0) continue;
            long c = v[static_cast<size_t>(lead)];
            if (c != 0) {
                long inv = mod_inv_small(row[static_cast<size_t>(lead)], p);
                long scale = (c * inv) % p;
                for (size_t j = 0; j < v.size(); ++j)
                    v[j] = static_cast<int>((((v[j] - scale * row[j]) % p) + p) % p);
            }
        }
        bool nonzero = std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
        if (nonzero) rows.push_back(std::move(v));
        return nonzero;
    }
};

} // namespace

std::vector<int> FiniteGroup::frattini_coordinates(int g) const {
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        if (st_->frat_dim >= 0) {
            int rep = st_->frat_rep[static_cast<size_t>(g)];
            return st_->frat_coords.at(rep);
        }
    }
    auto p = p_group_prime();
    if (!p && st_->n > 1) throw Error(ErrorCode::NotPGroup, "Frattini coordinates need a p-group");
    long pl = p ? *p : 2;
    std::vector<int> phi = frattini_subgroup();

    std::vector<int> rep(static_cast<size_t>(st_->n));
    for (int x = 0; x < st_->n; ++x) {
        int best = st_->n;
        for (int h : phi) best = std::min(best, mul(x, h));
        rep[static_cast<size_t>(x)] = best;
    }
    long d = 0;
    {
        long quotient = st_->n / static_cast<long>(phi.size());
        while (quotient > 1) {
            quotient /= pl;
            ++d;
        }
    }

    std::map<int, std::vector<int>> coords;
    coords[rep[static_cast<size_t>(st_->id)]] = std::vector<int>(static_cast<size_t>(d), 0);
    int basis_count = 0;
    for (int x = 0; x < st_->n; ++x) {
        int r = rep[static_cast<size_t>(x)];
        if (coords.count(r)) continue;
        // new basis vector e_{basis_count}
        std::vector<std::pair<int, std::vector<int>>> snapshot(coords.begin(), coords.end());
        int pw = x;
        for (long t = 1; t < pl; ++t) {
            for (const auto& [r0, v0] : snapshot) {
                int nr = rep[static_cast<size_t>(mul(r0, pw))];
                std::vector<int> v = v0;
                v[static_cast<size_t>(basis_count)] = static_cast<int>(t);
                coords.emplace(nr, std::move(v));
            }
            pw = mul(pw, x);
        }
        ++basis_count;
        if (basis_count == d && static_cast<long>(coords.size()) == st_->n / static_cast<long>(phi.size()))
            break;
    }
    if (basis_count != d)
        throw Error(ErrorCode::SelfCheckFailed, "Frattini quotient basis extraction failed");

    std::lock_guard<std::mutex> lock(st_->mu);
    if (st_->frat_dim < 0) {
        st_->frat_rep = std::move(rep);
        st_->frat_coords = std::move(coords);
        st_->frat_dim = static_cast<int>(d);
        st_->frat_p = pl;
    }
    return st_->frat_coords.at(st_->frat_rep[static_cast<size_t>(g)]);
}

std::vector<int> FiniteGroup::conjugacy_class_reps() const {
    std::vector<bool> seen(static_cast<size_t>(st_->n), false);
    std::vector<int> reps;
    for (int x = 0; x < st_->n; ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        reps.push_back(x);
        for (int g = 0; g < st_->n; ++g) seen[static_cast<size_t>(conj(g, x))] = true;
    }
    return reps;
}

std::vector<long> FiniteGroup::element_order_histogram() const {
    std::vector<long> hist;
    for (int g = 0; g < st_->n; ++g) {
        long ord = element_order(g);
        if (static_cast<long>(hist.size()) <= ord) hist.resize(static_cast<size_t>(ord) + 1, 0);
        ++hist[static_cast<size_t>(ord)];
    }
    return hist;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& members) const {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    long m = static_cast<long>(sorted.size());
    std::map<int, int> pos;
    for (long i = 0; i < m; ++i) pos[sorted[static_cast<size_t>(i)]] = static_cast<int>(i);
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
            auto it = pos.find(mul(sorted[static_cast<size_t>(a)], sorted[static_cast<size_t>(b)]));
            if (it == pos.end())
                throw Error(ErrorCode::SelfCheckFailed, "member set is not closed");
            table[static_cast<size_t>(a) * m + b] = it->second;
        }
    FiniteGroup H = from_table(std::move(table), m, GroupSource::Subgroup, {});
    std::vector<int> gen_list;
    std::vector<int> closure{H.identity()};
    for (int x = 0; x < m; ++x) {
        if (std::binary_search(closure.begin(), closure.end(), x)) continue;
        gen_list.push_back(x);
        closure = H.subgroup_closure(gen_list);
        if (static_cast<long>(closure.size()) == m) break;
    }
    H.st_->gens = gen_list;
    return H;
}

FiniteGroup FiniteGroup::sylow_subgroup(const Int& p) const {
    if (!is_prime(p)) throw Error(ErrorCode::ParseError, "sylow_subgroup needs a prime");
    long pl = p.get_si();
    if (st_->n % pl != 0)
        throw Error(ErrorCode::PrimeDoesNotDivideOrder,
                    "prime " + p.get_str() + " does not divide the group order");
    long ppart = 1;
    long rest = st_->n;
    while (rest % pl == 0) {
        rest /= pl;
        ppart *= pl;
    }

    // p-elements of G
    std::vector<int> pelems;
    for (int g = 0; g < st_->n; ++g) {
        long ord = element_order(g);
        bool ppower = true;
        while (ord > 1) {
            if (ord % pl != 0) {
                ppower = false;
                break;
            }
            ord /= pl;
        }
        if (ppower && g != st_->id) pelems.push_back(g);
    }

    std::vector<int> gens;
    if (!pelems.empty()) gens.push_back(pelems.front());
    std::vector<int> P = subgroup_closure(gens);
    while (static_cast<long>(P.size()) < ppart) {
        std::vector<bool> member(static_cast<size_t>(st_->n), false);
        for (int x : P) member[static_cast<size_t>(x)] = true;
        int found = -1;
        for (int h : pelems) {
            if (member[static_cast<size_t>(h)]) continue;
            bool normalizes = true;
            for (int x : gens)
                if (!member[static_cast<size_t>(conj(h, x))]) {
                    normalizes = false;
                    break;
                }
            if (normalizes) {
                found = h;
                break;
            }
        }
        if (found < 0)
            throw Error(ErrorCode::SelfCheckFailed, "Sylow growth found no normalizing p-element");
        gens.push_back(found);
        P = subgroup_closure(gens);
    }
    return subgroup(P);
}

bool FiniteGroup::is_solvable() const {
    std::vector<int> all(static_cast<size_t>(st_->n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> cur = all;
    while (cur.size() > 1) {
        std::vector<int> next = derived_subgroup(cur);
        if (next.size() == cur.size()) return false;
        cur = next;
    }
    return true;
}

bool FiniteGroup::is_nilpotent() const {
    std::vector<int> all(static_cast<size_t>(st_->n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> cur = all;
    while (cur.size() > 1) {
        // [cur, G]
        std::set<int> comms;
        for (int a : cur)
            for (int b = 0; b < st_->n; ++b) comms.insert(commutator(a, b));
        std::vector<int> next = subgroup_closure(std::vector<int>(comms.begin(), comms.end()));
        if (next.size() == cur.size()) return false;
        cur = next;
    }
    return true;
}

std::optional<std::pair<int, int>> FiniteGroup::realizes_presentation(
    const MetacyclicPresentation& pres) const {
    validate_presentation(pres);
    if (pres.e * pres.f != st_->n) return std::nullopt;
    long e = pres.e, f = pres.f;
    long q = e == 1 ? 0 : ((pres.q % e) + e) % e;
    long i = e == 1 ? 0 : ((pres.i % e) + e) % e;

    auto p = p_group_prime();
    bool use_span = p.has_value();

    for (int a = 0; a < st_->n; ++a) {
        if (e % element_order(a) != 0) continue; // need a^e = 1
        int aq = power(a, q);
        int ai = power(a, i);
        for (int b = 0; b < st_->n; ++b) {
            if (conj(b, a) != aq) continue;
            if (power(b, f) != ai) continue;
            // generation check
            if (st_->n == 1) return std::make_pair(a, b);
            bool generates;
            if (use_span) {
                long d = d_of_group();
                SpanTracker span{*p, {}};
                span.add(frattini_coordinates(a));
                span.add(frattini_coordinates(b));
                generates = span.dim() == d;
            } else {
                generates = static_cast<long>(subgroup_closure({a, b}).size()) == st_->n;
            }
            if (generates) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

std::optional<MetacyclicPresentation> FiniteGroup::is_metacyclic() const {
    if (st_->n == 1) return MetacyclicPresentation{1, 1, 0, 0};

    // enumerate cyclic subgroups, largest first
    std::set<std::vector<int>> seen;
    std::vector<std::pair<int, std::vector<int>>> cyclic; // (generator, members)
    for (int g = 0; g < st_->n; ++g) {
        std::vector<int> members;
        int x = st_->id;
        do {
            members.push_back(x);
            x = mul(x, g);
        } while (x != st_->id);
        std::sort(members.begin(), members.end());
        if (seen.insert(members).second) cyclic.emplace_back(g, members);
    }
    std::stable_sort(cyclic.begin(), cyclic.end(), [](const auto& a, const auto& b) {
        return a.second.size() > b.second.size();
    });

    for (const auto& [g, S] : cyclic) {
        long e = static_cast<long>(S.size());
        long f = st_->n / e;
        // normality: conjugates of the generator stay inside
        bool normal = true;
        for (int t = 0; t < st_->n && normal; ++t)
            if (!std::binary_search(S.begin(), S.end(), conj(t, g))) normal = false;
        if (!normal) continue;

        // quotient: canonical coset representatives
        std::vector<int> rep(static_cast<size_t>(st_->n));
        for (int x = 0; x < st_->n; ++x) {
            int best = st_->n;
            for (int h : S) best = std::min(best, mul(x, h));
            rep[static_cast<size_t>(x)] = best;
        }
        auto qmul = [&](int r1, int r2) { return rep[static_cast<size_t>(mul(r1, r2))]; };
        int qid = rep[static_cast<size_t>(st_->id)];
        // find a coset of order f
        int y = -1;
        for (int x = 0; x < st_->n && y < 0; ++x) {
            if (rep[static_cast<size_t>(x)] != x) continue;
            long ord = 1;
            int c = x;
            while (c != qid) {
                c = qmul(c, x);
                ++ord;
            }
            if (ord == f) y = x;
        }
        if (y < 0) continue; // quotient not cyclic

        // powers of x = g give the discrete logs for q and i
        std::map<int, long> dlog;
        {
            int x = st_->id;
            for (long k = 0; k < e; ++k) {
                dlog[x] = k;
                x = mul(x, g);
            }
        }
        long q = e == 1 ? 0 : dlog.at(conj(y, g));
        long i = e == 1 ? 0 : dlog.at(power(y, f));
        MetacyclicPresentation pres{e, f, i, q};
        validate_presentation(pres);
        return pres;
    }
    return std::nullopt;
}

std::vector<MetacyclicPresentation> FiniteGroup::enumerate_metacyclic_presentations(
    long order_budget) const {
    auto p = p_group_prime();
    if (!p && st_->n > 1)
        throw Error(ErrorCode::NotPGroup, "presentation enumeration is for p-groups");
    if (st_->n > order_budget)
        throw Error(ErrorCode::OrderBudgetExceeded, "presentation enumeration over budget");
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        if (st_->presentations) return *st_->presentations;
    }
    std::vector<MetacyclicPresentation> out;
    if (st_->n == 1) {
        out.push_back({1, 1, 0, 0});
        return out;
    }
    if (d_of_group() > 2) return out;

    long maxord = 0;
    for (int g = 0; g < st_->n; ++g) maxord = std::max(maxord, element_order(g));
    bool abelian = is_abelian();

    std::vector<long> divs;
    for (long e = 1; e <= st_->n; e *= *p) divs.push_back(e);
    std::sort(divs.rbegin(), divs.rend());

    for (long e : divs) {
        if (e > maxord) continue; // x must have order e
        long f = st_->n / e;
        for (long q = (e == 1 ? 0 : 1); q < std::max(e, 1L); ++q) {
            if (e > 1) {
                if (std::gcd(q, e) != 1) continue;
                long acc = 1, ordq = 0;
                do {
                    acc = (acc * q) % e;
                    ++ordq;
                } while (acc != 1);
                if (f % ordq != 0) continue;
                if (abelian != (q == 1)) continue;
            }
            for (long i = 0; i < (f == 1 ? 1 : e); ++i) {
                if (e > 1 && (i * ((q - 1 + e) % e)) % e != 0) continue;
                MetacyclicPresentation pres{e, f, i, q};
                if (realizes_presentation(pres)) out.push_back(pres);
            }
            if (e == 1) break;
        }
    }
    std::lock_guard<std::mutex> lock(st_->mu);
    if (!st_->presentations) st_->presentations = out;
    return *st_->presentations;
}

/* ---------- Demuskin relation search ---------- */

namespace {

struct BitSet {
    std::vector<std::uint64_t> w;
    explicit BitSet(long n) : w(static_cast<size_t>((n + 63) / 64), 0) {}
    void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool get(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
};

} // namespace

std::optional<std::vector<int>> FiniteGroup::demuskin_quotient_test(const DemuskinQuery& query,
                                                                    const Int& p, long order_budget,
                                                                    long node_budget) const {
    long n_gens = query.n;
    if (st_->n > order_budget)
        throw Error(ErrorCode::SearchBudgetExceeded, "group order over the Demuskin budget");
    auto pp = p_group_prime();
    if (st_->n > 1 && (!pp || Int(*pp) != p))
        throw Error(ErrorCode::NotPGroup, "Demuskin test expects a p-group for the given p");

    long d = st_->n == 1 ? 0 : d_of_group();

    // free pro-p case: no relation, witnesses are generating tuples
    if (!query.s) {
        if (n_gens < 0 || d > n_gens) return std::nullopt;
        std::vector<int> witness;
        if (d > 0) {
            SpanTracker span{*pp, {}};
            for (int g = 0; g < st_->n && static_cast<long>(witness.size()) < d; ++g)
                if (span.add(frattini_coordinates(g))) witness.push_back(g);
        }
        witness.resize(static_cast<size_t>(n_gens), st_->id);
        return witness;
    }

    if (n_gens < 4 || n_gens % 2 != 0)
        throw Error(ErrorCode::ParseError, "the one-relator search needs even n >= 4");
    int s = *query.s;
    if (s < 1) throw Error(ErrorCode::ParseError, "s must be positive");
    if (d > n_gens) return std::nullopt;

    long pl = st_->n == 1 ? p.get_si() : *pp;
    long ps = 1;
    for (int k = 0; k < s && ps <= st_->n; ++k) ps *= pl;

    // generators in even slots, identities in odd ones: the relation
    // collapses to 1 whenever d(G) <= n/2
    if (2 * d <= n_gens) {
        std::vector<int> witness(static_cast<size_t>(n_gens), st_->id);
        if (d > 0) {
            SpanTracker span{pl, {}};
            int got = 0;
            for (int g = 0; g < st_->n && got < d; ++g)
                if (span.add(frattini_coordinates(g))) {
                    witness[static_cast<size_t>(2 * got + 1)] = g;
                    ++got;
                }
        }
        return witness;
    }

    // abelian case: the relation is x_1^(p^s) = 1
    if (is_abelian()) {
        if (d <= n_gens - 1) {
            // x_1 = identity, spread generators over the rest
            std::vector<int> witness(static_cast<size_t>(n_gens), st_->id);
            SpanTracker span{pl, {}};
            int got = 0;
            for (int g = 0; g < st_->n && got < d; ++g)
                if (span.add(frattini_coordinates(g))) witness[static_cast<size_t>(1 + got++)] = g;
            return witness;
        }
        // d = n: x_1 must be a generator of order dividing p^s
        for (int g = 0; g < st_->n; ++g) {
            if (power(g, ps) != st_->id) continue;
            SpanTracker span{pl, {}};
            if (!span.add(frattini_coordinates(g))) continue;
            std::vector<int> witness{g};
            for (int h = 0; h < st_->n && static_cast<long>(witness.size()) < n_gens; ++h)
                if (span.add(frattini_coordinates(h))) witness.push_back(h);
            if (span.dim() == d) {
                witness.resize(static_cast<size_t>(n_gens), st_->id);
                return witness;
            }
        }
        return std::nullopt;
    }

    // general backtracking over (x_1, ..., x_n)
    std::vector<int> all_derived = derived_subgroup([&] {
        std::vector<int> all(static_cast<size_t>(st_->n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    BitSet derived_set(st_->n);
    for (int x : all_derived) derived_set.set(x);

    // K_r = set of products of r commutators
    int max_pairs = static_cast<int>((n_gens - 2) / 2);
    std::vector<BitSet> K;
    K.emplace_back(st_->n); // K_0 = {1}
    K[0].set(st_->id);
    {
        BitSet k1(st_->n);
        std::vector<int> k1_list;
        for (int a = 0; a < st_->n; ++a)
            for (int b = 0; b < st_->n; ++b) {
                int c = commutator(a, b);
                if (!k1.get(c)) {
                    k1.set(c);
                    k1_list.push_back(c);
                }
            }
        K.push_back(k1);
        std::vector<int> prev = k1_list;
        for (int r = 2; r <= max_pairs; ++r) {
            BitSet kr(st_->n);
            std::vector<int> cur;
            for (int x : prev)
                for (int c : k1_list) {
                    int y = mul(x, c);
                    if (!kr.get(y)) {
                        kr.set(y);
                        cur.push_back(y);
                    }
                }
            K.push_back(kr);
            prev = std::move(cur);
        }
    }

    // commutator preimages, grouped by value
    std::vector<std::vector<std::pair<int, int>>> comm_pairs(static_cast<size_t>(st_->n));
    for (int a = 0; a < st_->n; ++a)
        for (int b = 0; b < st_->n; ++b)
            comm_pairs[static_cast<size_t>(commutator(a, b))].emplace_back(a, b);

    std::vector<std::vector<int>> coords(static_cast<size_t>(st_->n));
    for (int g = 0; g < st_->n; ++g) coords[static_cast<size_t>(g)] = frattini_coordinates(g);

    long nodes = 0;
    std::vector<int> tuple(static_cast<size_t>(n_gens), st_->id);

    // x_1 over conjugacy class representatives with x_1^(p^s) in [G,G]
    std::vector<int> x1cands;
    for (int r : conjugacy_class_reps())
        if (derived_set.get(power(r, ps))) x1cands.push_back(r);

    // depth-first over pair slots; partial = x_1^(p^s) [x_1,x_2]...[x_{2j-1},x_{2j}]
    std::optional<std::vector<int>> result;

    auto span_possible = [&](const SpanTracker& span, int slots_left) {
        return span.dim() + slots_left >= d;
    };

    std::function<bool(int, int, SpanTracker&)> dfs = [&](int pair_idx, int partial,
                                                          SpanTracker& span) -> bool {
        int pairs_total = static_cast<int>(n_gens / 2);
        int pairs_left = pairs_total - pair_idx;
        if (++nodes > node_budget)
            throw Error(ErrorCode::SearchBudgetExceeded, "Demuskin node budget exhausted");
        if (pairs_left == 0) {
            if (partial != st_->id) return false;
            if (span.dim() != d) return false;
            result = tuple;
            return true;
        }
        int inv_partial = inv(partial);
        if (pairs_left == 1) {
            // last pair: need [a, b] = partial^-1 exactly
            for (const auto& [a, b] : comm_pairs[static_cast<size_t>(inv_partial)]) {
                SpanTracker s2 = span;
                s2.add(coords[static_cast<size_t>(a)]);
                s2.add(coords[static_cast<size_t>(b)]);
                if (s2.dim() != d) continue;
                tuple[static_cast<size_t>(n_gens - 2)] = a;
                tuple[static_cast<size_t>(n_gens - 1)] = b;
                result = tuple;
                return true;
            }
            return false;
        }
        if (!K[static_cast<size_t>(pairs_left)].get(inv_partial)) return false;
        // choose the next pair
        for (int a = 0; a < st_->n; ++a) {
            for (int b = 0; b < st_->n; ++b) {
                SpanTracker s2 = span;
                s2.add(coords[static_cast<size_t>(a)]);
                s2.add(coords[static_cast<size_t>(b)]);
                if (!span_possible(s2, 2 * (pairs_left - 1)))
                    continue;
                tuple[static_cast<size_t>(2 * pair_idx)] = a;
                tuple[static_cast<size_t>(2 * pair_idx + 1)] = b;
                if (dfs(pair_idx + 1, mul(partial, commutator(a, b)), s2)) return true;
            }
        }
        return false;
    };

    for (int x1 : x1cands) {
        tuple.assign(static_cast<size_t>(n_gens), st_->id);
        tuple[0] = x1;
        int base = power(x1, ps);
        // first pair includes x_1 itself: iterate x_2 only
        for (int x2 = 0; x2 < st_->n; ++x2) {
            SpanTracker span{pl, {}};
            span.add(coords[static_cast<size_t>(x1)]);
            span.add(coords[static_cast<size_t>(x2)]);
            if (!span_possible(span, n_gens - 2)) continue;
            tuple[1] = x2;
            if (dfs(1, mul(base, commutator(x1, x2)), span)) return result;
        }
    }
    return std::nullopt;
}

/* ---------- isomorphism testing ---------- */

namespace {

std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> closure{G.identity()};
    for (int x = 0; x < G.order(); ++x) {
        if (std::binary_search(closure.begin(), closure.end(), x)) continue;
        gens.push_back(x);
        closure = G.subgroup_closure(gens);
        if (static_cast<long>(closure.size()) == G.order()) break;
    }
    return gens;
}

/* BFS word expressions for the subgroup generated by gens[0..k) */
struct WordTable {
    std::vector<int> elems;          // BFS order
    std::vector<int> parent;         // index into elems, -1 for identity
    std::vector<int> via;            // generator index used
    std::vector<int> position;       // element -> index in elems, -1 if absent
};

WordTable build_words(const FiniteGroup& G, const std::vector<int>& gens, size_t k) {
    WordTable w;
    w.position.assign(static_cast<size_t>(G.order()), -1);
    w.elems.push_back(G.identity());
    w.parent.push_back(-1);
    w.via.push_back(-1);
    w.position[static_cast<size_t>(G.identity())] = 0;
    for (size_t head = 0; head < w.elems.size(); ++head) {
        for (size_t j = 0; j < k; ++j) {
            int next = G.mul(w.elems[head], gens[j]);
            if (w.position[static_cast<size_t>(next)] < 0) {
                w.position[static_cast<size_t>(next)] = static_cast<int>(w.elems.size());
                w.elems.push_back(next);
                w.parent.push_back(static_cast<int>(head));
                w.via.push_back(static_cast<int>(j));
            }
        }
    }
    return w;
}

/* does gens[0..k) -> images define a homomorphism on the subgroup they
 * generate? (checked over the BFS words; injectivity also verified) */
bool extends_to_hom(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gens,
                    const std::vector<int>& images, size_t k, const WordTable& w) {
    std::vector<int> phi(w.elems.size());
    phi[0] = B.identity();
    for (size_t idx = 1; idx < w.elems.size(); ++idx)
        phi[idx] = B.mul(phi[static_cast<size_t>(w.parent[idx])],
                         images[static_cast<size_t>(w.via[idx])]);
    std::vector<bool> hit(static_cast<size_t>(B.order()), false);
    for (size_t idx = 0; idx < w.elems.size(); ++idx) {
        if (hit[static_cast<size_t>(phi[idx])]) return false; // not injective
        hit[static_cast<size_t>(phi[idx])] = true;
    }
    for (size_t idx = 0; idx < w.elems.size(); ++idx)
        for (size_t j = 0; j < k; ++j) {
            int xg = A.mul(w.elems[idx], gens[j]);
            int pos = w.position[static_cast<size_t>(xg)];
            if (phi[static_cast<size_t>(pos)] != B.mul(phi[idx], images[j])) return false;
        }
    return true;
}

bool iso_backtrack(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gens,
                   std::vector<int>& images, size_t k, const std::vector<WordTable>& words) {
    if (k == gens.size())
        return static_cast<long>(words[k - 1].elems.size()) == A.order();
    long want = A.element_order(gens[k]);
    for (int cand = 0; cand < B.order(); ++cand) {
        if (B.element_order(cand) != want) continue;
        images[k] = cand;
        if (!extends_to_hom(A, B, gens, images, k + 1, words[k])) continue;
        if (iso_backtrack(A, B, gens, images, k + 1, words)) return true;
    }
    return false;
}

} // namespace

bool isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order() != B.order()) return false;
    if (A.order() == 1) return true;
    if (A.is_abelian() != B.is_abelian()) return false;
    if (A.element_order_histogram() != B.element_order_histogram()) return false;

    std::vector<int> gens = greedy_generators(A);
    std::vector<WordTable> words;
    for (size_t k = 1; k <= gens.size(); ++k) words.push_back(build_words(A, gens, k));
    std::vector<int> images(gens.size(), B.identity());
    return iso_backtrack(A, B, gens, images, 0, words);
}

} // namespace admis
