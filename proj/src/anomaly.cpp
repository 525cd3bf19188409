#include "cobalt/anomaly.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <mutex>
#include <sstream>

namespace cobalt {

std::optional<int> CobModel::compose(int second, int first) const {
    auto it = composition.find({second, first});
    if (it == composition.end()) return std::nullopt;
    return it->second;
}

Verdict verify_anomaly(const SemitrivializedAnomaly& w) {
    const CobModel& m = w.model;
    if (w.lines.size() != m.morphisms.size()) return Verdict::fail("line label count mismatch");
    if (m.identities.size() != m.objects.size()) return Verdict::fail("identity count mismatch");
    for (const auto& [pair, comp] : m.composition) {
        auto [second, first] = pair;
        if (m.morphisms[first].tgt != m.morphisms[second].src)
            return Verdict::fail("composition table lists a non-composable pair (" +
                                 m.mor_name(second) + " after " + m.mor_name(first) + ")");
        auto it = w.psi.find(pair);
        if (it == w.psi.end())
            return Verdict::fail("psi missing for (" + m.mor_name(second) + " after " +
                                 m.mor_name(first) + ")");
        if (it->second.is_zero())
            return Verdict::fail("psi entry is zero for (" + m.mor_name(second) + " after " +
                                 m.mor_name(first) + ")");
        (void)comp;
    }
    // Unit conditions: trivial cobordisms carry the unit line and identity psi.
    for (size_t obj = 0; obj < m.objects.size(); ++obj) {
        int id = m.identities[obj];
        if (w.lines[id] != "1")
            return Verdict::fail("identity of " + m.objects[obj] + " does not carry the unit line");
        if (auto c = m.compose(id, id); c && *c != id)
            return Verdict::fail("identity of " + m.objects[obj] + " is not idempotent");
    }
    for (const auto& [pair, comp] : m.composition) {
        auto [second, first] = pair;
        bool first_is_id = first == m.identities[m.morphisms[first].src];
        bool second_is_id = second == m.identities[m.morphisms[second].src];
        if (first_is_id || second_is_id) {
            if (comp != (first_is_id ? second : first))
                return Verdict::fail("identity composite is not the other factor at (" +
                                     m.mor_name(second) + " after " + m.mor_name(first) + ")");
            if (!w.psi.at(pair).is_one())
                return Verdict::fail("psi against the trivial cobordism is not 1 at (" +
                                     m.mor_name(second) + " after " + m.mor_name(first) + ")");
        }
    }
    // Associativity of psi on listed triples.
    for (const auto& [pair21, c21] : m.composition) {
        auto [m2, m1] = pair21;
        for (size_t m3 = 0; m3 < m.morphisms.size(); ++m3) {
            auto c321 = m.compose(static_cast<int>(m3), c21);
            auto c32 = m.compose(static_cast<int>(m3), m2);
            if (!c321 || !c32) continue;
            auto c321b = m.compose(*c32, m1);
            if (!c321b) continue;
            if (*c321b != *c321)
                return Verdict::fail("composition is not associative at (" + m.mor_name(m3) +
                                     ", " + m.mor_name(m2) + ", " + m.mor_name(m1) + ")");
            Scalar lhs = w.psi.at({static_cast<int>(m3), c21}) * w.psi.at(pair21);
            Scalar rhs = w.psi.at({*c32, m1}) * w.psi.at({static_cast<int>(m3), m2});
            if (lhs != rhs)
                return Verdict::fail("psi associativity fails at (" + m.mor_name(m3) + ", " +
                                     m.mor_name(m2) + ", " + m.mor_name(m1) + ")");
        }
    }
    for (const auto& d : w.diffeos) {
        if (m.morphisms[d.from].src != m.morphisms[d.to].src ||
            m.morphisms[d.from].tgt != m.morphisms[d.to].tgt)
            return Verdict::fail("diffeomorphism " + d.name + " between non-parallel morphisms");
        if (d.factor.is_zero()) return Verdict::fail("diffeomorphism " + d.name + " acts by zero");
    }
    return Verdict::pass();
}

namespace {

bool anom2_holds(const AnomalousTheory& z, const std::pair<int, int>& pair, int comp) {
    const Scalar& psi = z.anomaly.psi.at(pair);
    Matrix lhs = z.maps[pair.first] * z.maps[pair.second];
    if (psi.is_one()) return lhs == z.maps[comp];
    return lhs == z.maps[comp].scaled(psi);
}

}  // namespace

Verdict verify_anomalous_theory(const AnomalousTheory& z, int threads) {
    const CobModel& m = z.anomaly.model;
    if (z.dims.size() != m.objects.size()) return Verdict::fail("dims count mismatch");
    if (z.maps.size() != m.morphisms.size()) return Verdict::fail("map count mismatch");
    for (size_t i = 0; i < m.morphisms.size(); ++i) {
        const auto& mor = m.morphisms[i];
        if (z.maps[i].rows() != static_cast<size_t>(z.dims[mor.tgt]) ||
            z.maps[i].cols() != static_cast<size_t>(z.dims[mor.src]))
            return Verdict::fail("map shape mismatch for " + mor.name);
    }
    for (const auto& [pair, comp] : m.composition)
        if (!z.anomaly.psi.count(pair))
            return Verdict::fail("psi missing for a composable pair");
    for (size_t obj = 0; obj < m.objects.size(); ++obj)
        if (!z.maps[m.identities[obj]].is_identity())
            return Verdict::fail("trivial cobordism of " + m.objects[obj] +
                                 " is not the canonical identification");
    for (const auto& d : z.anomaly.diffeos)
        if (z.maps[d.from] != z.maps[d.to].scaled(d.factor))
            return Verdict::fail("anom1 fails for diffeomorphism " + d.name + ": " +
                                 m.mor_name(d.from) + " vs " + m.mor_name(d.to));

    std::vector<std::pair<std::pair<int, int>, int>> pairs(m.composition.begin(),
                                                           m.composition.end());
    auto witness = [&](size_t i) {
        return Verdict::fail("anom2 fails for (" + m.mor_name(pairs[i].first.first) + " after " +
                             m.mor_name(pairs[i].first.second) + ")");
    };
    if (threads <= 1 || pairs.size() < 64) {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (!anom2_holds(z, pairs[i].first, pairs[i].second)) return witness(i);
        return Verdict::pass();
    }
    size_t nchunk = static_cast<size_t>(threads);
    std::vector<std::future<size_t>> futures;
    size_t chunk = (pairs.size() + nchunk - 1) / nchunk;
    for (size_t c = 0; c < nchunk; ++c) {
        size_t lo = c * chunk, hi = std::min(pairs.size(), lo + chunk);
        futures.push_back(std::async(std::launch::async, [&, lo, hi]() -> size_t {
            for (size_t i = lo; i < hi; ++i)
                if (!anom2_holds(z, pairs[i].first, pairs[i].second)) return i;
            return pairs.size();
        }));
    }
    size_t first_bad = pairs.size();
    for (auto& f : futures) first_bad = std::min(first_bad, f.get());
    if (first_bad < pairs.size()) return witness(first_bad);
    return Verdict::pass();
}

// ---- line model ---------------------------------------------------------

namespace {

using End = Matching::End;

bool sign_plus(Boundary::Comp c) { return c == Boundary::Comp::PointPlus; }

std::string end_str(const End& e) {
    switch (e.kind) {
        case End::Src: return "s" + std::to_string(e.index);
        case End::Tgt: return "t" + std::to_string(e.index);
        case End::Cap: return "cap";
    }
    return "?";
}

}  // namespace

std::string Matching::display() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) os << ",";
        os << s;
        first = false;
    };
    for (size_t i = 0; i < src_to.size(); ++i) {
        const End& e = src_to[i];
        if (e.kind == End::Src && e.index < static_cast<int>(i)) continue;  // already listed
        emit("s" + std::to_string(i) + "-" + end_str(e));
    }
    for (size_t j = 0; j < tgt_to.size(); ++j) {
        const End& e = tgt_to[j];
        if (e.kind == End::Src) continue;  // listed from the source side
        if (e.kind == End::Tgt && e.index < static_cast<int>(j)) continue;
        emit("t" + std::to_string(j) + "-" + end_str(e));
    }
    if (first) emit("empty");
    if (circles) os << ";c=" << circles;
    if (arcs) os << ";a=" << arcs;
    return os.str();
}

namespace {

// Enumerate all sign-respecting matchings between two sign sequences.
void enumerate_matchings(const std::vector<bool>& src_plus, const std::vector<bool>& tgt_plus,
                         std::vector<Matching>& out) {
    size_t ns = src_plus.size(), nt = tgt_plus.size();
    Matching work;
    work.src_to.assign(ns, End{End::Cap, -1});
    work.tgt_to.assign(nt, End{End::Cap, -1});
    std::vector<char> sdone(ns, 0), tdone(nt, 0);

    std::function<void(size_t)> rec_tgt;
    std::function<void(size_t)> rec_src = [&](size_t i) {
        while (i < ns && sdone[i]) ++i;
        if (i == ns) {
            rec_tgt(0);
            return;
        }
        sdone[i] = 1;
        // cap (constrained end), "+" points only
        if (src_plus[i]) {
            work.src_to[i] = End{End::Cap, 0};
            rec_src(i + 1);
        }
        // pair with a later source point of opposite sign
        for (size_t j = i + 1; j < ns; ++j) {
            if (sdone[j] || src_plus[j] == src_plus[i]) continue;
            sdone[j] = 1;
            work.src_to[i] = End{End::Src, static_cast<int>(j)};
            work.src_to[j] = End{End::Src, static_cast<int>(i)};
            rec_src(i + 1);
            sdone[j] = 0;
        }
        // pair with a target point of the same sign
        for (size_t j = 0; j < nt; ++j) {
            if (tdone[j] || tgt_plus[j] != src_plus[i]) continue;
            tdone[j] = 1;
            work.src_to[i] = End{End::Tgt, static_cast<int>(j)};
            work.tgt_to[j] = End{End::Src, static_cast<int>(i)};
            rec_src(i + 1);
            tdone[j] = 0;
        }
        sdone[i] = 0;
    };
    rec_tgt = [&](size_t j) {
        while (j < nt && tdone[j]) ++j;
        if (j == nt) {
            out.push_back(work);
            return;
        }
        tdone[j] = 1;
        if (tgt_plus[j]) {
            work.tgt_to[j] = End{End::Cap, 0};
            rec_tgt(j + 1);
        }
        for (size_t k = j + 1; k < nt; ++k) {
            if (tdone[k] || tgt_plus[k] == tgt_plus[j]) continue;
            tdone[k] = 1;
            work.tgt_to[j] = End{End::Tgt, static_cast<int>(k)};
            work.tgt_to[k] = End{End::Tgt, static_cast<int>(j)};
            rec_tgt(j + 1);
            tdone[k] = 0;
        }
        tdone[j] = 0;
    };
    rec_src(0);
}

std::string matching_key(int src_obj, int tgt_obj, const Matching& m) {
    std::ostringstream os;
    os << src_obj << "|" << tgt_obj << "|" << m.display();
    return os.str();
}

// Compose second after first by tracing chains through the middle object.
Matching compose_matchings(const Matching& first, const Matching& second) {
    Matching out;
    out.src_to.assign(first.src_to.size(), End{End::Cap, -1});
    out.tgt_to.assign(second.tgt_to.size(), End{End::Cap, -1});
    out.circles = first.circles + second.circles;
    out.arcs = first.arcs + second.arcs;

    size_t mid = first.tgt_to.size();
    std::vector<char> visited(mid, 0);

    // Walk from a middle point entering via `first` (side=0) or `second`
    // (side=1), returning the terminal end in the composite, or nullopt
    // when the chain closes up on itself.
    auto walk = [&](int point, int side) -> std::optional<End> {
        int steps = 0;
        const int limit = static_cast<int>(2 * mid + 2);
        while (true) {
            if (++steps > limit) return std::nullopt;  // closed loop
            visited[point] = 1;
            if (side == 0) {
                End e = first.tgt_to[point];  // hop within first
                if (e.kind == End::Cap) return End{End::Cap, 0};
                if (e.kind == End::Src) return End{End::Src, e.index};
                point = e.index;  // another middle point, cross into second
                visited[point] = 1;
                side = 1;
            } else {
                End e = second.src_to[point];
                if (e.kind == End::Cap) return End{End::Cap, 0};
                if (e.kind == End::Tgt) return End{End::Tgt, e.index};
                point = e.index;
                visited[point] = 1;
                side = 0;
            }
        }
    };

    for (size_t i = 0; i < first.src_to.size(); ++i) {
        End e = first.src_to[i];
        if (e.kind == End::Src) {
            out.src_to[i] = e;
        } else if (e.kind == End::Cap) {
            out.src_to[i] = End{End::Cap, 0};
        } else {
            End terminal = walk(e.index, 1).value();  // boundary chains always terminate
            out.src_to[i] = terminal;
            if (terminal.kind == End::Tgt)
                out.tgt_to[terminal.index] = End{End::Src, static_cast<int>(i)};
        }
    }
    for (size_t j = 0; j < second.tgt_to.size(); ++j) {
        End e = second.tgt_to[j];
        if (e.kind == End::Tgt) {
            out.tgt_to[j] = e;
        } else if (e.kind == End::Cap) {
            out.tgt_to[j] = End{End::Cap, 0};
        } else if (out.tgt_to[j].kind == End::Cap && out.tgt_to[j].index == -1) {
            // not yet reached from the source side: walk into `first`
            out.tgt_to[j] = walk(e.index, 0).value();
        }
    }
    // Chains that never reached the outer boundary close up into circles or
    // run cap-to-cap as fully constrained arcs.
    for (size_t p = 0; p < mid; ++p) {
        if (visited[p]) continue;
        auto t1 = walk(static_cast<int>(p), 0);
        if (!t1) {
            out.circles += 1;
            continue;
        }
        auto t2 = walk(static_cast<int>(p), 1);
        if (t1->kind != End::Cap || !t2 || t2->kind != End::Cap)
            throw Error("compose_matchings: stray chain through the middle object");
        out.arcs += 1;
    }
    return out;
}

}  // namespace

LineModel build_line_model(const LineModelOptions& opts) {
    if (opts.max_points < 0 || opts.max_points > 4)
        throw UnsupportedParams("line model supports 0..4 boundary points");
    LineModel lm;
    // Objects: sign strings of length <= max_points, lexicographic with '+' first.
    std::vector<std::vector<bool>> signs;  // true = '+'
    for (int len = 0; len <= opts.max_points; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<bool> s(len);
            for (int i = 0; i < len; ++i) s[i] = ((mask >> i) & 1) == 0;
            signs.push_back(s);
        }
    }
    for (const auto& s : signs) {
        Boundary b;
        b.sector = Sector::OneD;
        for (bool plus : s)
            b.comps.push_back(plus ? Boundary::Comp::PointPlus : Boundary::Comp::PointMinus);
        lm.objects.push_back(b);
        lm.model.objects.push_back(b.to_string());
    }
    int nobj = static_cast<int>(signs.size());

    std::map<std::string, int> index_of;
    std::vector<std::pair<int, int>> srctgt;
    for (int so = 0; so < nobj; ++so)
        for (int to = 0; to < nobj; ++to) {
            std::vector<Matching> raw;
            enumerate_matchings(signs[so], signs[to], raw);
            for (auto& m : raw)
                for (int c = 0; c <= opts.max_closed; ++c)
                    for (int a = 0; a <= opts.max_closed; ++a) {
                        Matching with = m;
                        with.circles = c;
                        with.arcs = a;
                        std::string key = matching_key(so, to, with);
                        if (index_of.count(key)) continue;
                        index_of[key] = static_cast<int>(lm.matchings.size());
                        lm.matchings.push_back(with);
                        srctgt.emplace_back(so, to);
                        CobModel::Mor mor;
                        mor.name = lm.model.objects[so] + ">" + lm.model.objects[to] + ":" +
                                   with.display();
                        mor.src = so;
                        mor.tgt = to;
                        lm.model.morphisms.push_back(mor);
                    }
        }
    // Identities: the straight matching with zero counts.
    lm.model.identities.assign(nobj, -1);
    for (int o = 0; o < nobj; ++o) {
        Matching id;
        id.src_to.resize(signs[o].size());
        id.tgt_to.resize(signs[o].size());
        for (size_t i = 0; i < signs[o].size(); ++i) {
            id.src_to[i] = End{End::Tgt, static_cast<int>(i)};
            id.tgt_to[i] = End{End::Src, static_cast<int>(i)};
        }
        lm.model.identities[o] = index_of.at(matching_key(o, o, id));
    }
    // Composition table, within the closed-component bounds.
    for (size_t first = 0; first < lm.matchings.size(); ++first)
        for (size_t second = 0; second < lm.matchings.size(); ++second) {
            if (srctgt[first].second != srctgt[second].first) continue;
            Matching comp = compose_matchings(lm.matchings[first], lm.matchings[second]);
            if (comp.circles > opts.max_closed || comp.arcs > opts.max_closed) continue;
            std::string key = matching_key(srctgt[first].first, srctgt[second].second, comp);
            auto it = index_of.find(key);
            if (it == index_of.end()) continue;
            lm.model.composition[{static_cast<int>(second), static_cast<int>(first)}] = it->second;
        }
    return lm;
}

const LineModel& cached_line_model(const LineModelOptions& opts) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<LineModel>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(opts.max_points, opts.max_closed);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<LineModel>(build_line_model(opts))).first;
    return *it->second;
}

SemitrivializedAnomaly euler_anomaly(const LineModel& lm, const Scalar& lambda) {
    if (lambda.is_zero()) throw InconsistentBoundaryData("Euler parameter must be invertible");
    SemitrivializedAnomaly w;
    w.model = lm.model;
    for (const auto& m : lm.matchings)
        w.lines.push_back(m.arcs == 0 ? "1" : "lambda^" + std::to_string(m.arcs));
    for (const auto& [pair, comp] : lm.model.composition) {
        auto [second, first] = pair;
        long e = lm.matchings[second].arcs + lm.matchings[first].arcs - lm.matchings[comp].arcs;
        w.psi[pair] = lambda.pow(e);
    }
    // The declared diffeomorphism family of the auto model is the identity
    // one: distinct matchings are never diffeomorphic.
    for (size_t m = 0; m < lm.model.morphisms.size(); ++m)
        w.diffeos.push_back({"id@" + lm.model.mor_name(static_cast<int>(m)), static_cast<int>(m),
                             static_cast<int>(m), Scalar(1)});
    return w;
}

namespace {

Matrix contract_matching(const Matching& m, const Boundary& src, const Boundary& tgt,
                         const BoundaryCondition& bc) {
    size_t d = bc.dim;
    size_t ns = src.comps.size(), nt = tgt.comps.size();
    size_t rows = 1, cols = 1;
    for (size_t i = 0; i < nt; ++i) rows *= d;
    for (size_t i = 0; i < ns; ++i) cols *= d;

    Scalar arc_value(0);
    for (size_t i = 0; i < d; ++i) arc_value += bc.phi[i] * bc.v[i];
    Scalar prefactor(1);
    for (int c = 0; c < m.circles; ++c) prefactor *= Scalar(static_cast<long>(d));
    for (int a = 0; a < m.arcs; ++a) prefactor *= arc_value;

    Matrix out(rows, cols);
    std::vector<size_t> I(ns), J(nt);
    for (size_t row = 0; row < rows; ++row) {
        size_t r = row;
        for (size_t j = nt; j-- > 0;) {
            J[j] = r % d;
            r /= d;
        }
        for (size_t col = 0; col < cols; ++col) {
            size_t cc = col;
            for (size_t i = ns; i-- > 0;) {
                I[i] = cc % d;
                cc /= d;
            }
            Scalar val = prefactor;
            bool zero = false;
            for (size_t i = 0; i < ns && !zero; ++i) {
                const End& e = m.src_to[i];
                switch (e.kind) {
                    case End::Src:
                        if (e.index > static_cast<int>(i) && I[i] != I[e.index]) zero = true;
                        break;
                    case End::Tgt:
                        if (I[i] != J[e.index]) zero = true;
                        break;
                    case End::Cap:
                        val *= bc.phi[I[i]];
                        break;
                }
            }
            for (size_t j = 0; j < nt && !zero; ++j) {
                const End& e = m.tgt_to[j];
                switch (e.kind) {
                    case End::Src:
                        break;  // handled from the source side
                    case End::Tgt:
                        if (e.index > static_cast<int>(j) && J[j] != J[e.index]) zero = true;
                        break;
                    case End::Cap:
                        val *= bc.v[J[j]];
                        break;
                }
            }
            if (!zero) out.at(row, col) = val;
        }
    }
    return out;
}

}  // namespace

AnomalousTheory reduce_boundary(const Scalar& lambda, const BoundaryCondition& bc,
                                const LineModelOptions& opts, int threads) {
    if (lambda.is_zero()) throw InconsistentBoundaryData("Euler parameter must be invertible");
    if (static_cast<int>(bc.v.size()) != bc.dim || static_cast<int>(bc.phi.size()) != bc.dim)
        throw InconsistentBoundaryData("boundary table does not match the generator signatures");
    const LineModel& lm = cached_line_model(opts);
    AnomalousTheory z;
    z.anomaly = euler_anomaly(lm, lambda);
    for (const Boundary& b : lm.objects) {
        size_t dim = 1;
        for (size_t i = 0; i < b.comps.size(); ++i) dim *= bc.dim;
        z.dims.push_back(static_cast<int>(dim));
    }
    z.maps.assign(lm.matchings.size(), Matrix());
    auto fill = [&](size_t lo, size_t hi) {
        for (size_t m = lo; m < hi; ++m) {
            const auto& mor = lm.model.morphisms[m];
            Matrix mat =
                contract_matching(lm.matchings[m], lm.objects[mor.src], lm.objects[mor.tgt], bc);
            int arcs = lm.matchings[m].arcs;
            z.maps[m] = arcs == 0 ? std::move(mat) : mat.scaled(lambda.pow(arcs));
        }
    };
    if (threads <= 1) {
        fill(0, z.maps.size());
    } else {
        std::vector<std::future<void>> futures;
        size_t chunk = (z.maps.size() + threads - 1) / threads;
        for (int c = 0; c < threads; ++c) {
            size_t lo = c * chunk, hi = std::min(z.maps.size(), lo + chunk);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, fill, lo, hi));
        }
        for (auto& f : futures) f.get();
    }
    if (Verdict v = verify_anomalous_theory(z, threads); !v)
        throw InconsistentBoundaryData(v.detail);
    return z;
}

SemitrivializedAnomaly two_group_anomaly(const CrossedModule& x, const TwoCharacter& c) {
    if (!c.group.same_as(x.base)) throw GroupMismatch();
    SemitrivializedAnomaly w;
    w.model.objects.push_back("S");
    int n = x.base.order;
    for (int g = 0; g < n; ++g) {
        w.model.morphisms.push_back({"M[" + x.base.name(g) + "]", 0, 0});
        w.lines.push_back(g == x.base.identity ? "1" : "W[" + x.base.name(g) + "]");
    }
    w.model.identities.push_back(x.base.identity);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            // M_g after M_h is the cylinder of the composite diffeomorphism gh.
            w.model.composition[{g, h}] = x.base.mul(g, h);
            w.psi[{g, h}] = c.psi_at(g, h);
        }
    if (c.is_two_group()) {
        for (int a = 0; a < x.fiber.order; ++a)
            for (int g = 0; g < n; ++g)
                w.diffeos.push_back({"a" + std::to_string(a) + "@g" + std::to_string(g), g,
                                     x.base.mul(x.delta(a), g), c.hol_at(a, g)});
    }
    return w;
}

TwoCharacter anomaly_character(const SemitrivializedAnomaly& w, int object,
                               const CrossedModule& x) {
    const CobModel& m = w.model;
    int n = x.base.order;
    std::vector<int> endos;
    for (size_t i = 0; i < m.morphisms.size(); ++i)
        if (m.morphisms[i].src == object && m.morphisms[i].tgt == object)
            endos.push_back(static_cast<int>(i));
    if (static_cast<int>(endos.size()) != n)
        throw FormatError("object does not carry exactly one endomorphism per group element");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto comp = m.compose(endos[g], endos[h]);
            if (!comp || *comp != endos[x.base.mul(g, h)])
                throw FormatError("endomorphism composition does not realize the base group");
        }
    std::vector<Scalar> psi(static_cast<size_t>(n) * n, Scalar(1));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) psi[g * n + h] = w.psi.at({endos[g], endos[h]});
    std::vector<Scalar> hol(static_cast<size_t>(x.fiber.order) * n, Scalar(0));
    std::vector<char> seen(hol.size(), 0);
    for (int g = 0; g < n; ++g) {
        // identity 2-morphisms act canonically
        hol[x.fiber.identity * n + g] = Scalar(1);
        seen[x.fiber.identity * n + g] = 1;
    }
    for (const auto& d : w.diffeos) {
        if (d.name.size() < 4 || d.name[0] != 'a') continue;
        size_t at = d.name.find("@g");
        if (at == std::string::npos) continue;
        int a = std::stoi(d.name.substr(1, at - 1));
        int g = std::stoi(d.name.substr(at + 2));
        if (a < 0 || a >= x.fiber.order || g < 0 || g >= n) continue;
        if (d.from != endos[g] || d.to != endos[x.base.mul(x.delta(a), g)])
            throw FormatError("diffeomorphism " + d.name + " does not match the crossed module");
        hol[a * n + g] = d.factor;
        seen[a * n + g] = 1;
    }
    for (char s : seen)
        if (!s) throw FormatError("missing diffeomorphism action for some (a, g)");
    return character_over(x, std::move(psi), std::move(hol));
}

}  // namespace cobalt
