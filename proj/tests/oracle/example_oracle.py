"""Independent brute-force oracle for the bundled worked example.

Uses only fractions.Fraction and plain tuples; shares no code with the C++
library. Values printed here are frozen into the C++ unit tests.
"""
from fractions import Fraction as F
from itertools import product

PARAMS = ["e1", "e2", "e3"]
OBJS = ["h1", "h2", "h3"]


def mk(rows):
    # rows: dict param -> (g1, g2, g3) as strings; missing params are zero
    out = []
    for p in PARAMS:
        r = rows.get(p, ("0", "0", "0"))
        out.extend(F(x) for x in r)
    return tuple(out)


AMB = mk({"e1": ("0.2", "0.8", "0.5"), "e2": ("0.8", "0.1", "1"), "e3": ("0.7", "0.5", "0.2")})
PHI = tuple(F(0) for _ in AMB)
T = {
    "T3": mk({"e1": ("0.2", "0.4", "0.1")}),
    "T4": mk({"e1": ("0.1", "0.5", "0.5"), "e2": ("0.7", "0", "0.7"), "e3": ("0.6", "0.1", "0.1")}),
    "T5": mk({"e1": ("0.2", "0.6", "0.4"), "e2": ("0.1", "0.1", "0.9"), "e3": ("0.5", "0.5", "0.1")}),
    "T6": mk({"e1": ("0", "0.8", "0.5"), "e2": ("0.8", "0", "0.1"), "e3": ("0.4", "0.3", "0")}),
    "T7": mk({"e1": ("0.2", "0.8", "0.5"), "e2": ("0.8", "0.1", "0.9"), "e3": ("0.5", "0.3", "0.1")}),
    "T8": mk({"e1": ("0.1", "0.8", "0.5"), "e2": ("0.8", "0", "0.7"), "e3": ("0.6", "0.3", "0.1")}),
    "T9": mk({"e1": ("0.2", "0.5", "0.5"), "e2": ("0.7", "0", "0.7"), "e3": ("0.6", "0.1", "0.1")}),
    "T10": mk({"e1": ("0.2", "0.8", "0.5"), "e2": ("0.8", "0", "0.1"), "e3": ("0.4", "0.3", "0")}),
    "T11": mk({"e1": ("0.2", "0.6", "0.5"), "e2": ("0.7", "0.1", "0.9"), "e3": ("0.6", "0.5", "0.1")}),
}
G_E = mk({"e1": ("0.1", "0.4", "0.5"), "e2": ("0.1", "0", "0.7"), "e3": ("0.5", "0.1", "0.1")})

NAMED = [("phi", PHI), ("ambient", AMB)] + list(T.items())


def leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def meet(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def comp(a):
    return tuple(f - x for f, x in zip(AMB, a))


def show(a):
    return {p: tuple(str(a[i * 3 + j]) for j in range(3)) for i, p in enumerate(PARAMS) if True}


def name_of(s):
    for n, v in NAMED:
        if v == s:
            return n
    return None


def interior(opens, g):
    r = PHI
    for h in opens:
        if leq(h, g):
            r = join(r, h)
    return r


def closure(opens, g):
    r = AMB
    for h in opens:
        c = comp(h)
        if leq(g, c):
            r = meet(r, c)
    return r


opens = [v for _, v in NAMED]
print("== validate printed tau ==")
names = [n for n, _ in NAMED]
missing_meet = []
missing_join = []
for i in range(len(NAMED)):
    for j in range(i + 1, len(NAMED)):
        a, b = NAMED[i][1], NAMED[j][1]
        if name_of(meet(a, b)) is None:
            missing_meet.append((NAMED[i][0], NAMED[j][0], show(meet(a, b))))
        if name_of(join(a, b)) is None:
            missing_join.append((NAMED[i][0], NAMED[j][0], show(join(a, b))))
print("missing meets:", len(missing_meet))
for m in missing_meet:
    print("  ", m)
print("missing joins:", len(missing_join))
for m in missing_join:
    print("  ", m)

print("union(T4,T5) is", name_of(join(T["T4"], T["T5"])))
print("meet(T4,T5) =", show(meet(T["T4"], T["T5"])))

# subbasis closure
fam = set(opens)
while True:
    new = set(fam)
    for a in fam:
        for b in fam:
            new.add(meet(a, b))
            new.add(join(a, b))
    if new == fam:
        break
    fam = new
print("subbasis closure cardinality:", len(fam))
rep = sorted(fam)

print("== printed tau queries ==")
print("interior(g_E) =", show(interior(opens, G_E)), name_of(interior(opens, G_E)))
print("closure(T3) =", name_of(closure(opens, T["T3"])))
print("closure(g_E) =", show(closure(opens, G_E)), name_of(closure(opens, G_E)))
print("complement(T3) =", show(comp(T["T3"])))
# def route semiopen scan
wit = [n for n, h in NAMED if leq(h, G_E) and leq(G_E, closure(opens, h))]
print("semiopen witnesses for g_E:", wit)
print("g_E semiopen(char):", leq(G_E, closure(opens, interior(opens, G_E))))
print("g_E semiclosed(char):", leq(interior(opens, closure(opens, G_E)), G_E))
print("== repaired tau queries ==")
print("interior_rep(g_E) =", show(interior(rep, G_E)))
print("closure_rep(g_E) =", show(closure(rep, G_E)))
print("g_E semiopen in repaired:", leq(G_E, closure(rep, interior(rep, G_E))))
print("g_E semiclosed in repaired:", leq(interior(rep, closure(rep, G_E)), G_E))
print("closure_rep(T3) =", show(closure(rep, T["T3"])))

cnt = 1
for x in AMB:
    cnt *= int(x * 10) + 1
print("grid count d=10:", cnt)
