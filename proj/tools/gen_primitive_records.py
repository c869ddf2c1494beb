"""Writes generator arrays for the primitive maximal subgroups of S_n, 5 <= n <= 12."""

import itertools
import sys


def cycles(images):
    seen, out = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = images[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def affine_line(p, mult):
    return [[(x + 1) % p for x in range(p)], [(x * mult) % p for x in range(p)]]


def field(q):
    # elements as ints 0..q-1; q prime or 9 (F_3[i], i^2 = -1)
    if q == 9:
        def enc(a, b):
            return a + 3 * b

        def dec(x):
            return x % 3, x // 3

        def add(x, y):
            (a, b), (c, d) = dec(x), dec(y)
            return enc((a + c) % 3, (b + d) % 3)

        def mul(x, y):
            (a, b), (c, d) = dec(x), dec(y)
            return enc((a * c - b * d) % 3, (a * d + b * c) % 3)

        return add, mul
    return (lambda x, y: (x + y) % q), (lambda x, y: (x * y) % q)


def projective_line(q, matrices, extra=()):
    add, mul = field(q)
    inv = {x: y for x in range(1, q) for y in range(1, q) if mul(x, y) == 1}
    inf = q

    def act(m, x):
        a, b, c, d = m
        if x == inf:
            num, den = a, c
        else:
            num, den = add(mul(a, x), b), add(mul(c, x), d)
        if den == 0:
            return inf
        return mul(num, inv[den])

    gens = [[act(m, x) for x in range(q + 1)] for m in matrices]
    for f in extra:
        gens.append([inf if x == inf else f(x) for x in range(q)] + [inf])
    return gens


def neg(q, x):
    add, _ = field(q)
    for y in range(q):
        if add(x, y) == 0:
            return y


def agl2_3():
    pts = [(a, b) for a in range(3) for b in range(3)]
    idx = {p: i for i, p in enumerate(pts)}
    t = [idx[((a + 1) % 3, b)] for a, b in pts]
    g1 = [idx[((a + b) % 3, b)] for a, b in pts]
    g2 = [idx[(b, (-a) % 3)] for a, b in pts]
    g3 = [idx[((-a) % 3, b)] for a, b in pts]
    return [t, g1, g2, g3]


def order(gens, n):
    # naive closure, fine for these sizes
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = tuple(h[g[x]] for x in range(n))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen)


def main():
    records = []
    records.append((5, "AGL_1(5)", "affine", affine_line(5, 2)))
    # PGL_2(q): x -> x + 1, x -> g x, x -> -1/x
    def pgl(q, gen):
        one = 1
        return projective_line(q, [(1, 1, 0, 1), (gen, 0, 0, 1), (0, neg(q, one), 1, 0)])

    records.append((6, "PGL_2(5)", "almost_simple", pgl(5, 2)))
    records.append((7, "AGL_1(7)", "affine", affine_line(7, 3)))
    records.append((8, "PGL_2(7)", "almost_simple", pgl(7, 3)))
    records.append((9, "AGL_2(3)", "affine", agl2_3()))
    _, mul9 = field(9)
    # generator of F_9^*: 1 + i
    frob = lambda x: mul9(mul9(x, x), x)
    pgaml9 = projective_line(9, [(1, 1, 0, 1), (1 + 3, 0, 0, 1), (0, neg(9, 1), 1, 0)], extra=[frob])
    records.append((10, "PGammaL_2(9)", "almost_simple", pgaml9))
    records.append((11, "AGL_1(11)", "affine", affine_line(11, 2)))
    records.append((12, "PGL_2(11)", "almost_simple", pgl(11, 2)))

    expected = {"AGL_1(5)": 20, "PGL_2(5)": 120, "AGL_1(7)": 42, "PGL_2(7)": 336, "AGL_2(3)": 432,
                "PGammaL_2(9)": 1440, "AGL_1(11)": 110, "PGL_2(11)": 1320}
    out = sys.stdout
    out.write("# Primitive maximal subgroups of S_n other than A_n, 5 <= n <= 12.\n")
    out.write("# Generated by tools/gen_primitive_records.py.\n")
    out.write("version 1\n")
    for n, label, kind, gens in records:
        got = order(gens, n)
        assert got == expected[label], (label, got)
        out.write("\nrecord\n")
        out.write(f"degree {n}\nlabel {label}\nkind {kind}\norder {got}\n")
        for g in gens:
            out.write(f"generator {cycles(g)}\n")
        out.write("end\n")


if __name__ == "__main__":
    main()
