#!/usr/bin/env python3
"""Generate the exact character table of the F4 Weyl group as C++ data.

Builds the group as permutations of the 48 roots, finds the conjugacy
classes, and constructs all 25 irreducible characters by splitting tensor
products of the reflection character and the linear characters.  All
arithmetic is exact (integers and fractions), and both orthogonality
relations are verified before anything is written.

Naming: dims with subscripts in order of the b-invariant (lowest first),
matching the classical labels: the reflection representation is 4_2, the
9-dimensional constituent of its symmetric square is 9_1.  For pairs tied
on the b-invariant the member with the larger value on a long-reflection
class gets the lower subscript; two pin flags below flip that choice for
the 2- and 8-dimensional pairs independently if cross-checks demand it.

Usage: python3 tools/gen_f4_table.py > src/f4data.cpp
"""

import itertools
import sys
from fractions import Fraction

# Flip to exchange the primed/unprimed member inside a b-tied pair.
PIN_SWAP = {
    1: False,  # 1_2 / 1_3
    2: False,  # 2_1 / 2_3 and 2_2 / 2_4
    4: False,  # 4_3 / 4_4
    6: False,  # 6_1 / 6_2
    8: False,  # 8_1 / 8_3 and 8_2 / 8_4
    9: False,  # 9_2 / 9_3
}

SIMPLE_ROOTS = [
    (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
]
SIMPLE_COROOTS = [
    (Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(2)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def reflect(i, v):
    c = dot(SIMPLE_COROOTS[i], v)
    return tuple(x - c * r for x, r in zip(v, SIMPLE_ROOTS[i]))


def root_closure():
    roots = set(SIMPLE_ROOTS)
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(4):
                w = reflect(i, v)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    # include negatives
    for v in list(roots):
        neg = tuple(-x for x in v)
        roots.add(neg)
    return sorted(roots)


ROOTS = root_closure()
assert len(ROOTS) == 48, len(ROOTS)
ROOT_INDEX = {v: k for k, v in enumerate(ROOTS)}

GEN_PERMS = []
for i in range(4):
    GEN_PERMS.append(tuple(ROOT_INDEX[reflect(i, v)] for v in ROOTS))


def compose(p, q):
    """(p ∘ q)(r) = p(q(r)): the permutation of x * y acting on roots."""
    return tuple(p[j] for j in q)


def enumerate_group():
    ident = tuple(range(48))
    elems = [ident]
    words = [""]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        for i in range(4):
            nxt = compose(elems[head], GEN_PERMS[i])
            if nxt not in index:
                index[nxt] = len(elems)
                elems.append(nxt)
                words.append(words[head] + str(i))
        head += 1
    return elems, words, index


ELEMS, WORDS, INDEX = enumerate_group()
N = len(ELEMS)
assert N == 1152, N


def conjugacy_classes():
    class_of = [-1] * N
    classes = []
    for x in range(N):
        if class_of[x] >= 0:
            continue
        cid = len(classes)
        orbit = [x]
        class_of[x] = cid
        stack = [x]
        while stack:
            y = stack.pop()
            for g in GEN_PERMS:
                ginv = g  # involutions
                z = INDEX[compose(ginv, compose(ELEMS[y], g))]
                if class_of[z] < 0:
                    class_of[z] = cid
                    orbit.append(z)
                    stack.append(z)
        rep = min(orbit, key=lambda e: (len(WORDS[e]), WORDS[e]))
        classes.append((rep, len(orbit)))
    return class_of, classes


CLASS_OF, CLASSES = conjugacy_classes()
NCLASS = len(CLASSES)
assert NCLASS == 25, NCLASS
SIZES = [sz for _, sz in CLASSES]
assert sum(SIZES) == N


def matrix_of_word(word):
    m = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    for ch in word:
        i = int(ch)
        # right multiply by s_i: columns transform
        refl = [[Fraction(int(r == c)) - SIMPLE_ROOTS[i][r] * SIMPLE_COROOTS[i][c]
                 for c in range(4)] for r in range(4)]
        m = [[sum(m[r][k] * refl[k][c] for k in range(4)) for c in range(4)]
             for r in range(4)]
    return m


def mat_mul(a, b):
    return [[sum(a[r][k] * b[k][c] for k in range(4)) for c in range(4)]
            for r in range(4)]


REP_MATS = [matrix_of_word(WORDS[rep]) for rep, _ in CLASSES]


def trace(m):
    return sum(m[i][i] for i in range(4))


def power_traces(m, kmax):
    out = []
    cur = m
    for _ in range(kmax):
        out.append(trace(cur))
        cur = mat_mul(cur, m)
    return out


# Power traces of class representatives, for symmetric powers.
KMAX = 30
PTR = [power_traces(m, KMAX) for m in REP_MATS]

# class of the k-th power of a class representative (for tensor squares etc.)


def inner(f, g):
    s = sum(SIZES[c] * f[c] * g[c] for c in range(NCLASS))
    assert s % N == 0 or isinstance(s, Fraction), s
    return Fraction(s, N)


def reduce_by(found, cand):
    cand = list(cand)
    for chi in found:
        m = inner(chi, cand)
        if m:
            cand = [c - m * x for c, x in zip(cand, chi)]
    return cand


def is_irreducible(f):
    nrm = inner(f, f)
    return nrm == 1 and f[IDENT_CLASS] > 0


IDENT_CLASS = CLASS_OF[0]

# Linear characters: parity of long/short letters in the representative word.
# Simples 0,1 are short (norm 1), 2,3 are long (norm 2).


def linear_char(long_sign, short_sign):
    vals = []
    for rep, _ in CLASSES:
        word = WORDS[rep]
        nl = sum(1 for ch in word if ch in "23")
        ns = sum(1 for ch in word if ch in "01")
        vals.append((long_sign ** nl) * (short_sign ** ns))
    return vals


TRIV = linear_char(1, 1)
SGN = linear_char(-1, -1)
LIN_L = linear_char(-1, 1)   # long reflections act by -1
LIN_S = linear_char(1, -1)

REFL = [ptr[0] for ptr in PTR]  # reflection character (trace on coords)


def sym_powers(kmax):
    """Characters of Sym^k of the reflection rep, k = 0..kmax, per class."""
    out = [[Fraction(1)] * NCLASS]
    for k in range(1, kmax + 1):
        vals = []
        for c in range(NCLASS):
            s = Fraction(0)
            for i in range(1, k + 1):
                s += PTR[c][i - 1] * out[k - i][c]
            vals.append(s / k)
        out.append(vals)
    return out


SYM = sym_powers(KMAX - 1)


def tensor(f, g):
    return [a * b for a, b in zip(f, g)]


# class of the square of each class representative
SQ_CLASS = []
for rep, _ in CLASSES:
    sq = compose(ELEMS[rep], ELEMS[rep])
    SQ_CLASS.append(CLASS_OF[INDEX[sq]])


def alt_square(f):
    return [(f[c] * f[c] - f[SQ_CLASS[c]]) / 2 for c in range(NCLASS)]


def sym_square(f):
    return [(f[c] * f[c] + f[SQ_CLASS[c]]) / 2 for c in range(NCLASS)]


CLASS_MEMBERS = [[] for _ in range(NCLASS)]
for x in range(N):
    CLASS_MEMBERS[CLASS_OF[x]].append(x)


def apply_class_op(c0, f):
    """Convolution with the class sum of c0: multiplies each irreducible
    constituent chi by |c0| chi(c0)/dim(chi)."""
    out = []
    for c in range(NCLASS):
        rep = CLASSES[c][0]
        s = Fraction(0)
        for x in CLASS_MEMBERS[c0]:
            s += f[CLASS_OF[INDEX[compose(ELEMS[rep], ELEMS[x])]]]
        out.append(s)
    return out


def rational_sqrt(q):
    import math
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def split_norm2(r):
    """Split r = chi_a + chi_b (distinct irreducibles) using a class operator
    that separates their central characters."""
    for c0 in range(1, NCLASS):
        tr = apply_class_op(c0, r)
        t2r = apply_class_op(c0, tr)
        # minimal polynomial of the operator on span{a,b}: T^2 = s T + t
        st = None
        for c1 in range(NCLASS):
            for c2 in range(c1 + 1, NCLASS):
                det = tr[c1] * r[c2] - tr[c2] * r[c1]
                if det == 0:
                    continue
                s = (t2r[c1] * r[c2] - t2r[c2] * r[c1]) / det
                t = (tr[c1] * t2r[c2] - tr[c2] * t2r[c1]) / det
                st = (s, t)
                break
            if st:
                break
        if st is None:
            continue  # T acts as a scalar here, try another class
        s, t = st
        if any(t2r[c] != s * tr[c] + t * r[c] for c in range(NCLASS)):
            continue
        root = rational_sqrt(s * s + 4 * t)
        if root is None or root == 0:
            continue
        mu_a, mu_b = (s + root) / 2, (s - root) / 2
        a = [(x - mu_b * y) / (mu_a - mu_b) for x, y in zip(tr, r)]
        b = [x - y for x, y in zip(r, a)]
        if inner(a, a) == 1 and inner(b, b) == 1 and \
           all(v.denominator == 1 for v in a) and a[IDENT_CLASS] > 0:
            return a, b
    raise RuntimeError("norm-2 remainder did not split")


def find_irreducibles():
    found = []

    def try_add(cand):
        cand = reduce_by(found, cand)
        if any(cand) and inner(cand, cand) == 1 and cand[IDENT_CLASS] > 0:
            if all(isinstance(v, int) or v.denominator == 1 for v in cand):
                found.append([Fraction(v) for v in cand])
                return True
        return False

    for lin in (TRIV, SGN, LIN_L, LIN_S):
        try_add(lin)
    try_add(REFL)

    # closure under products, squares and symmetric powers; when that stalls,
    # split a norm-2 remainder with a class operator and keep going
    for _ in range(30):
        if len(found) == 25:
            break
        before = len(found)
        for k in range(2, 10):
            try_add(SYM[k])
        for i in range(len(found)):
            try_add(alt_square(found[i]))
            try_add(sym_square(found[i]))
            for j in range(len(found)):
                try_add(tensor(found[i], found[j]))
                if len(found) == 25:
                    return found
        if len(found) == before:
            for k in range(2, 10):
                r = reduce_by(found, SYM[k])
                if any(r) and inner(r, r) == 2:
                    a, b = split_norm2([Fraction(v) for v in r])
                    found.append(a)
                    found.append(b)
                    break
            else:
                break
    return found


IRR = find_irreducibles()
if len(IRR) != 25:
    print(f"FAILED: found {len(IRR)} irreducibles", file=sys.stderr)
    sys.exit(1)

# full orthogonality checks
for i, f in enumerate(IRR):
    for j, g in enumerate(IRR):
        expect = Fraction(1) if i == j else Fraction(0)
        assert inner(f, g) == expect, (i, j)
for c1 in range(NCLASS):
    for c2 in range(NCLASS):
        s = sum(f[c1] * f[c2] for f in IRR)
        expect = Fraction(N, SIZES[c1]) if c1 == c2 else Fraction(0)
        assert s == expect, (c1, c2)
assert sum(f[IDENT_CLASS] ** 2 for f in IRR) == N


def b_invariant(f):
    for k in range(KMAX):
        if inner(f, SYM[k]) > 0:
            return k
    raise RuntimeError("b-invariant out of range")


# long-reflection class: size 12, order 2, trace 2 on coords
LONG_REFL_CLASS = None
for c in range(NCLASS):
    rep, sz = CLASSES[c]
    if sz == 12 and LIN_L[c] == -1 and LIN_S[c] == 1:
        LONG_REFL_CLASS = c
        break
assert LONG_REFL_CLASS is not None


def sign_partner(idx):
    """Index of IRR[idx] tensored with the sign character."""
    twisted = tensor(IRR[idx], SGN)
    for j, g in enumerate(IRR):
        if g == twisted:
            return j
    raise RuntimeError("sign twist left the table")


def assign_names():
    info = []
    for f in IRR:
        info.append({"dim": int(f[IDENT_CLASS]), "b": b_invariant(f), "chi": f})
    names = [None] * len(info)
    by_dim = {}
    for idx, rec in enumerate(info):
        by_dim.setdefault(rec["dim"], []).append(idx)
    for idxs in by_dim.values():
        idxs.sort(key=lambda i: (info[i]["b"], info[i]["chi"]))

    def tied_pair(pair, dim):
        """Order a b-tied pair; the pin flag swaps the flavors."""
        a, b = sorted(pair, key=lambda i: [-v for v in info[i]["chi"]])
        return (b, a) if PIN_SWAP.get(dim, False) else (a, b)

    # dim 1: trivial, the two b-tied twists, sign.
    d1 = by_dim[1]
    names[d1[0]] = "1_1"
    m1, m2 = tied_pair(d1[1:3], 1)
    names[m1], names[m2] = "1_2", "1_3"
    names[d1[3]] = "1_4"
    assert sign_partner(d1[0]) == d1[3]

    # dim 2: two sign-twist families {x, x*sgn}; lower subscripts on one family.
    d2 = by_dim[2]
    a, b = tied_pair(d2[0:2], 2)
    names[a], names[sign_partner(a)] = "2_1", "2_2"
    names[b], names[sign_partner(b)] = "2_3", "2_4"

    # dim 4: reflection is 4_2, its twist 4_5, the self-twist-stable one 4_1,
    # the remaining b-tied pair 4_3/4_4.
    d4 = by_dim[4]
    refl_idx = next(i for i in d4 if info[i]["chi"] == [Fraction(v) for v in REFL])
    names[refl_idx] = "4_2"
    names[sign_partner(refl_idx)] = "4_5"
    rest = [i for i in d4 if names[i] is None]
    selfdual = [i for i in rest if sign_partner(i) == i]
    assert len(selfdual) == 1
    names[selfdual[0]] = "4_1"
    rest = [i for i in rest if names[i] is None]
    a, b = tied_pair(rest, 4)
    names[a], names[b] = "4_3", "4_4"

    d6 = by_dim[6]
    a, b = tied_pair(d6, 6)
    names[a], names[b] = "6_1", "6_2"

    # dim 8: like dim 2.
    d8 = by_dim[8]
    a, b = tied_pair(d8[0:2], 8)
    names[a], names[sign_partner(a)] = "8_1", "8_2"
    names[b], names[sign_partner(b)] = "8_3", "8_4"

    # dim 9: unique lowest and highest b, tied middle pair.
    d9 = by_dim[9]
    names[d9[0]] = "9_1"
    a, b = tied_pair(d9[1:3], 9)
    names[a], names[b] = "9_2", "9_3"
    names[d9[3]] = "9_4"
    assert sign_partner(d9[0]) == d9[3]

    names[by_dim[12][0]] = "12"
    names[by_dim[16][0]] = "16"
    assert all(n is not None for n in names)
    return names, info


NAMES, INFO = assign_names()

# sanity anchors
by_name = {n: rec for n, rec in zip(NAMES, INFO)}
assert by_name["1_1"]["b"] == 0 and by_name["1_1"]["dim"] == 1
assert by_name["4_2"]["b"] == 1, by_name["4_2"]["b"]          # reflection rep
assert by_name["9_1"]["b"] == 2, by_name["9_1"]["b"]          # Sym^2 constituent
assert by_name["4_2"]["chi"] == [Fraction(v) for v in REFL]
assert by_name["1_4"]["chi"] == [Fraction(v) for v in SGN]

# emit, types sorted by (dim, subscript)
order = sorted(range(25), key=lambda i: (INFO[i]["dim"], NAMES[i]))


def emit():
    w = sys.stdout.write
    w('#include "hecke/f4data.hpp"\n\n')
    w("// Generated by tools/gen_f4_table.py; do not edit by hand.\n")
    w("namespace hecke::f4 {\n\n")
    w(f"const int class_count = {NCLASS};\n")
    w(f"const int type_count = 25;\n\n")
    w("const char* const class_words[] = {\n    ")
    w(", ".join(f'"{WORDS[rep]}"' for rep, _ in CLASSES))
    w("\n};\n\n")
    w("const int class_sizes[] = {\n    ")
    w(", ".join(str(sz) for _, sz in CLASSES))
    w("\n};\n\n")
    w("const char* const type_names[] = {\n    ")
    w(", ".join(f'"{NAMES[i]}"' for i in order))
    w("\n};\n\n")
    w("const int type_dims[] = {\n    ")
    w(", ".join(str(INFO[i]["dim"]) for i in order))
    w("\n};\n\n")
    w("const long values[25][25] = {\n")
    for i in order:
        row = ", ".join(str(int(v)) for v in INFO[i]["chi"])
        w(f"    {{{row}}},\n")
    w("};\n\n")
    w("}  // namespace hecke::f4\n")


emit()
