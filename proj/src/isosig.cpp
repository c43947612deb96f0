#include "twobridge/isosig.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twobridge {

namespace {

const std::string ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int decode_char(char c) {
        auto pos = ALPHABET.find(c);
        if (pos == std::string::npos)
                throw std::invalid_argument(std::string("illegal character '") + c + "' in signature");
        return int(pos);
}

void append_int(std::string &s, long x, int nchars) {
        for (int i = 0; i < nchars; ++i) {
                s += ALPHABET[std::size_t(x & 63)];
                x >>= 6;
        }
}

Perm4 all_perms(int i) { return Perm4::from_ordered_index(i); }

bool connected(const Triangulation &t) {
        if (t.size() == 0)
                return true;
        std::vector<char> seen(std::size_t(t.size()), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4; ++f) {
                        int y = t.gluing(x, f).tet;
                        if (y >= 0 && !seen[std::size_t(y)]) {
                                seen[std::size_t(y)] = 1;
                                ++count;
                                stack.push_back(y);
                        }
                }
        }
        return count == t.size();
}

} // namespace

std::string isosig_from(const Triangulation &t, int start, Perm4 relabel) {
        int n = t.size();
        std::vector<int> image(std::size_t(n), -1), preimage(std::size_t(n), -1);
        std::vector<Perm4> vmap(static_cast<std::size_t>(n));
        image[std::size_t(start)] = 0;
        preimage[0] = start;
        vmap[std::size_t(start)] = relabel;
        int next = 1;

        std::vector<int> types, dests, perms;
        types.reserve(std::size_t(4 * n));
        for (int ip = 0; ip < n; ++ip) {
                int src = preimage[std::size_t(ip)];
                if (src < 0)
                        throw std::invalid_argument("triangulation is disconnected");
                Perm4 inv = vmap[std::size_t(src)].inverse();
                for (int fi = 0; fi < 4; ++fi) {
                        int f = inv[fi];
                        const auto &g = t.gluing(src, f);
                        if (g.tet < 0) {
                                types.push_back(0);
                                continue;
                        }
                        int d = g.tet;
                        if (image[std::size_t(d)] >= 0) {
                                // Each gluing is recorded once, from the earlier side.
                                if (image[std::size_t(d)] < image[std::size_t(src)] || (d == src && g.perm[f] < f))
                                        continue;
                                types.push_back(2);
                                dests.push_back(image[std::size_t(d)]);
                                perms.push_back((vmap[std::size_t(d)] * g.perm * inv).ordered_index());
                        } else {
                                image[std::size_t(d)] = next;
                                preimage[std::size_t(next)] = d;
                                vmap[std::size_t(d)] = vmap[std::size_t(src)] * g.perm.inverse();
                                ++next;
                                types.push_back(1);
                        }
                }
        }

        int nchars = 1;
        std::string s;
        if (n < 63) {
                s += ALPHABET[std::size_t(n)];
        } else {
                while ((1L << (6 * nchars)) <= n)
                        ++nchars;
                s += ALPHABET[63];
                s += ALPHABET[std::size_t(nchars)];
                append_int(s, n, nchars);
        }
        for (std::size_t i = 0; i < types.size(); i += 3) {
                int v = 0;
                for (std::size_t j = 0; j < 3 && i + j < types.size(); ++j)
                        v |= types[i + j] << (2 * j);
                s += ALPHABET[std::size_t(v)];
        }
        for (int d : dests)
                append_int(s, d, nchars);
        for (int p : perms)
                s += ALPHABET[std::size_t(p)];
        return s;
}

std::string encode_isosig_serial(const Triangulation &t) {
        if (t.size() == 0)
                return "a";
        if (!connected(t))
                throw std::invalid_argument("triangulation is disconnected");
        std::string best;
        for (int s = 0; s < t.size(); ++s)
                for (int p = 0; p < 24; ++p) {
                        std::string c = isosig_from(t, s, all_perms(p));
                        if (best.empty() || c < best)
                                best = std::move(c);
                }
        return best;
}

std::string encode_isosig(const Triangulation &t) {
        if (t.size() == 0)
                return "a";
        if (!connected(t))
                throw std::invalid_argument("triangulation is disconnected");
        int total = 24 * t.size();
        std::string best;
#pragma omp parallel
        {
                std::string local;
#pragma omp for schedule(static) nowait
                for (int k = 0; k < total; ++k) {
                        std::string c = isosig_from(t, k / 24, all_perms(k % 24));
                        if (local.empty() || c < local)
                                local = std::move(c);
                }
#pragma omp critical
                if (!local.empty() && (best.empty() || local < best))
                        best = std::move(local);
        }
        return best;
}

Triangulation decode_isosig(const std::string &s) {
        if (s.empty())
                throw std::invalid_argument("empty signature");
        std::size_t pos = 0;
        auto take = [&]() {
                if (pos >= s.size())
                        throw std::invalid_argument("truncated signature");
                return decode_char(s[pos++]);
        };
        auto take_int = [&](int nchars) {
                long v = 0;
                for (int i = 0; i < nchars; ++i)
                        v |= long(take()) << (6 * i);
                return v;
        };
        int nchars = 1;
        long n = take();
        if (n == 63) {
                nchars = take();
                if (nchars < 1 || nchars > 4)
                        throw std::invalid_argument("bad size field in signature");
                n = take_int(nchars);
        }
        if (n == 0) {
                if (pos != s.size())
                        throw std::invalid_argument("trailing characters in signature");
                return Triangulation();
        }

        // A boundary action covers one facet, the other two cover two.
        std::vector<int> types;
        long facets = 0, joins = 0, fresh = 0;
        while (facets < 4 * n) {
                int v = take();
                for (int j = 0; j < 3 && facets < 4 * n; ++j) {
                        int ty = (v >> (2 * j)) & 3;
                        if (ty == 3)
                                throw std::invalid_argument("bad facet action in signature");
                        types.push_back(ty);
                        facets += ty == 0 ? 1 : 2;
                        joins += ty == 2;
                        fresh += ty == 1;
                }
        }
        if (facets != 4 * n || fresh != n - 1)
                throw std::invalid_argument("facet actions inconsistent with size");
        std::vector<long> dests;
        for (long j = 0; j < joins; ++j)
                dests.push_back(take_int(nchars));
        std::vector<int> perms;
        for (long j = 0; j < joins; ++j) {
                int p = take();
                if (p >= 24)
                        throw std::invalid_argument("bad permutation index");
                perms.push_back(p);
        }
        if (pos != s.size())
                throw std::invalid_argument("trailing characters in signature");

        Triangulation r{int(n)};
        long created = 1;
        std::size_t ti = 0, ji = 0;
        for (long tet = 0; tet < n; ++tet)
                for (int f = 0; f < 4; ++f) {
                        if (r.glued(int(tet), f))
                                continue;
                        if (ti >= types.size())
                                throw std::invalid_argument("truncated facet actions");
                        int ty = types[ti++];
                        if (ty == 1) {
                                r.join(int(tet), f, int(created++), Perm4());
                        } else if (ty == 2) {
                                long d = dests[ji];
                                Perm4 p = Perm4::from_ordered_index(perms[ji++]);
                                if (d < 0 || d >= created || r.glued(int(d), p[f]) || (d == tet && p[f] == f))
                                        throw std::invalid_argument("inconsistent gluing in signature");
                                r.join(int(tet), f, int(d), p);
                        }
                }
        if (ti != types.size())
                throw std::invalid_argument("unused facet actions in signature");
        return r;
}

bool are_isomorphic(const Triangulation &a, const Triangulation &b) {
        if (a.size() != b.size())
                return false;
        return encode_isosig(a) == encode_isosig(b);
}

Triangulation relabel(const Triangulation &t, const std::vector<int> &order, const std::vector<Perm4> &vm) {
        Triangulation r(t.size());
        for (int i = 0; i < t.size(); ++i)
                for (int f = 0; f < 4; ++f) {
                        const auto &g = t.gluing(i, f);
                        if (g.tet < 0)
                                continue;
                        int ni = order[std::size_t(i)], nf = vm[std::size_t(i)][f];
                        if (r.glued(ni, nf))
                                continue;
                        Perm4 p = vm[std::size_t(g.tet)] * g.perm * vm[std::size_t(i)].inverse();
                        r.join(ni, nf, order[std::size_t(g.tet)], p);
                }
        return r;
}

} // namespace twobridge
