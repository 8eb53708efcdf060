#!/usr/bin/env python3
"""Derive generator matrices for a 4-dimensional representation of 2.A7
over Q(sqrt(-7)) and write them as a problem file.

Construction: A7 permutes the coordinates of Q^7 and preserves the
sum-zero hyperplane V (the A6 root lattice, discriminant 7).  Products of
pairs of vectors (e_i - e_j)/sqrt(2) lift even permutations into the even
Clifford algebra C0(V), whose centre is Q(z) with z^2 = -7.  The group
2.A7 spans C0(V) = M_4(Q(sqrt(-7))).  For an element c of order 7 the
idempotent e = (1 + c + ... + c^6)/7 has rank one, so the left ideal
C0(V) e is a 4-dimensional Q(sqrt(-7))-space carrying the representation.
"""
import itertools
import json
import re
import sys
from fractions import Fraction
from collections import deque

N = 7


def blade_sign(a, b):
    s = 0
    a >>= 1
    while a:
        s += bin(a & b).count("1")
        a >>= 1
    return -1 if s & 1 else 1


def cmul(x, y):
    out = {}
    for ma, ca in x.items():
        for mb, cb in y.items():
            m = ma ^ mb
            v = out.get(m, 0) + blade_sign(ma, mb) * ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def cadd(x, y, s=1):
    out = dict(x)
    for m, c in y.items():
        v = out.get(m, 0) + s * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def cscale(x, s):
    return {m: c * s for m, c in x.items()} if s else {}


def key(x):
    return tuple(sorted(x.items()))


ONE = {0: Fraction(1)}


def vec(i, j):
    return {1 << i: Fraction(1), 1 << j: Fraction(-1)}


def lift_pair(t1, t2):
    # (v1 v2)/2 for transpositions t1, t2
    return cscale(cmul(vec(*t1), vec(*t2)), Fraction(1, 2))


def lift_cycle(cyc):
    # cycle (c0 c1 ... ck) = (c0 ck)(c0 c(k-1))...(c0 c1), an even number of transpositions
    ts = [(cyc[0], cyc[i]) for i in range(len(cyc) - 1, 0, -1)]
    assert len(ts) % 2 == 0
    out = ONE
    for i in range(0, len(ts), 2):
        out = cmul(out, lift_pair(ts[i], ts[i + 1]))
    return out


def power(x, k):
    out = ONE
    for _ in range(k):
        out = cmul(out, x)
    return out


def order(x):
    y = x
    for k in range(1, 100):
        if key(y) == key(ONE):
            return k
        y = cmul(y, x)
    raise RuntimeError("order")


def odd_order_lift(x):
    """Return +-x, whichever has odd order."""
    o = order(x)
    if o % 2:
        return x
    y = cscale(x, -1)
    assert order(y) % 2
    return y


def rank(vectors, basis_masks):
    rows = [[v.get(m, Fraction(0)) for m in basis_masks] for v in vectors]
    r = 0
    cols = len(basis_masks)
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def solve(basis, target, masks):
    """Coordinates of target in the span of basis (exact)."""
    m = len(basis)
    rows = [[b.get(mk, Fraction(0)) for b in basis] + [target.get(mk, Fraction(0))] for mk in masks]
    r = 0
    pivcols = []
    for c in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [a / p for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivcols.append(c)
        r += 1
    for i in range(r, len(rows)):
        assert rows[i][m] == 0, "not in span"
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivcols):
        sol[c] = rows[i][m]
    return sol


def dump_problem(problem):
    """JSON with one matrix row per line."""
    def row(r):
        return "[" + ", ".join(json.dumps(e) for e in r) + "]"

    rep = problem["representation"]
    body = dict(problem)
    body["representation"] = "@REP@"
    text = json.dumps(body, indent=2)
    text = re.sub(r"\[\s*([-0-9,\s]*?)\s*\]", lambda m: "[" + ", ".join(m.group(1).split()).replace(",,", ",") + "]", text)
    mats = []
    for n, m in rep.items():
        rows = ",\n      ".join(row(r) for r in m)
        mats.append(f'    {json.dumps(n)}: [\n      {rows}\n    ]')
    return text.replace('"@REP@"', "{\n" + ",\n".join(mats) + "\n  }") + "\n"


def main():
    gens = {
        "a": odd_order_lift(lift_cycle([0, 1, 2])),
        "b": odd_order_lift(lift_cycle([2, 3, 4, 5, 6])),
    }
    names = list(gens)
    inv = {n: power(g, order(g) - 1) for n, g in gens.items()}

    # enumerate the group with shortlex words
    start = key(ONE)
    words = {start: []}
    elems = {start: ONE}
    q = deque([ONE])
    while q:
        x = q.popleft()
        wx = words[key(x)]
        for n in names:
            for sym, g in ((n, gens[n]), (n + "'", inv[n])):
                y = cmul(x, g)
                ky = key(y)
                if ky not in words:
                    words[ky] = wx + [sym]
                    elems[ky] = y
                    q.append(y)
    print("group order", len(words), file=sys.stderr)
    assert len(words) == 5040

    # tau: conjugation by the transposition (1 2), i.e. by e1 - e2
    v = vec(0, 1)
    vinv = cscale(v, Fraction(1, 2))
    tau = {n: words[key(cmul(cmul(v, g), vinv))] for n, g in gens.items()}

    # relations: all hold in 2.A7; presentation checked by coset enumeration below
    def ev(word):
        out = ONE
        for s in word.split():
            out = cmul(out, inv[s[0]] if s.endswith("'") else gens[s])
        return out

    # Coxeter-Moser presentation of A7 in a = (123), b = (34567), lifted:
    # z = (a b^-1 a b)^2 is the central involution.  Coset enumeration over
    # <b> gives index 1008, so these relations present a group of order 5040.
    z_word = " ".join(["a b' a b"] * 2)
    z_inv = " ".join(["b' a' b a'"] * 2)
    relations = [
        "a a a",
        "b b b b b",
        " ".join(["a b"] * 7),
        " ".join([z_word, z_word]),
        " ".join(["a b' b' a b b"] * 2 + [z_inv]),
        " ".join([z_word, "a", z_inv, "a'"]),
        " ".join([z_word, "b", z_inv, "b'"]),
    ]
    for rel in relations:
        assert key(ev(rel)) == key(ONE), rel
    assert key(ev(z_word)) == key(cscale(ONE, -1))

    # centre of C0(V): z = f1 f2 ... f6 / 720 with f_k = e1 + ... + ek - k e(k+1)
    z = ONE
    for k in range(1, 7):
        f = {1 << i: Fraction(1) for i in range(k)}
        f[1 << k] = Fraction(-k)
        z = cmul(z, f)
    z = cscale(z, Fraction(1, 720))
    assert key(cmul(z, z)) == key(cscale(ONE, -7))

    # rank-one idempotent from an element of order 7
    c = odd_order_lift(cmul(gens["a"], gens["b"]))
    assert order(c) == 7
    e = {}
    for k in range(7):
        e = cadd(e, power(c, k))
    e = cscale(e, Fraction(1, 7))
    assert key(cmul(e, e)) == key(e)

    masks = sorted({m for x in elems.values() for m in x} | set(z))
    ideal = [cmul(g, e) for g in elems.values()]
    print("ideal Q-dim", rank(ideal[:400], masks), file=sys.stderr)

    # choose 4 F-independent vectors g e with short words
    ordered = sorted(elems.items(), key=lambda kv: len(words[kv[0]]))
    best = None
    cands = [cmul(g, e) for _, g in ordered[:60]]
    cwords = [words[k] for k, _ in ordered[:60]]
    for combo in itertools.combinations(range(len(cands)), 4):
        if combo[0] != 0:
            break
        basis = []
        for i in combo:
            basis += [cands[i], cmul(z, cands[i])]
        if rank(basis, masks) != 8:
            continue
        mats = {}
        height = 0
        for n in names:
            rows = [[None] * 4 for _ in range(4)]
            for i in range(4):
                sol = solve(basis, cmul(gens[n], basis[2 * i]), masks)
                for j in range(4):
                    p, qq = sol[2 * j], sol[2 * j + 1]
                    rows[j][i] = (p, qq)
                    height = max(height, p.denominator, qq.denominator, abs(p.numerator), abs(qq.numerator))
            mats[n] = rows
        if best is None or height < best[0]:
            best = (height, combo, mats)
            print("height", height, [cwords[i] for i in combo], file=sys.stderr)
        if height <= 2:
            break

    _, combo, mats = best

    def fmt(x):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    problem = {
        "name": "2a7_4dim",
        "description": "4-dimensional representation of 2.A7 over Q(sqrt(-7)); tau is conjugation by a lift of (1 2)",
        "field": {"min_poly": [7, 0, 1], "sigma_image": [0, -1]},
        "group": {
            "generators": names,
            "relations": relations,
            "tau": {n: " ".join(w) for n, w in tau.items()},
            "order": 5040,
        },
        "representation": {
            n: [[[fmt(p), fmt(qq)] for (p, qq) in row] for row in mats[n]] for n in names
        },
    }
    sys.stdout.write(dump_problem(problem))


if __name__ == "__main__":
    main()
