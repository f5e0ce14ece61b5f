# Brute-force reference for the crisp space U = {a, b, c}, E = {e}, whose
# topology is generated by {a} and {b}. Sets are frozensets; semi-closure and
# semi-interior are computed from their defining families, not from any
# closed formula.
from itertools import combinations

U = frozenset("abc")
TAU = [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab"), U]
ALL = [frozenset(c) for r in range(4) for c in combinations("abc", r)]


def interior(g):
    return frozenset().union(*[h for h in TAU if h <= g])


def closure(g):
    out = U
    for h in TAU:
        if g <= U - h:
            out = out & (U - h)
    return out


def semiopen(g):
    return any(h <= g <= closure(h) for h in TAU)


def semiclosed(g):
    return any(interior(U - h) <= g <= U - h for h in TAU)


def fsscl(g):
    out = U
    for s in ALL:
        if semiclosed(s) and g <= s:
            out = out & s
    return out


def fssint(g):
    out = frozenset()
    for s in ALL:
        if semiopen(s) and s <= g:
            out = out | s
    return out


def show(s):
    return "".join(sorted(s)) or "-"


if __name__ == "__main__":
    print("semiopen:", [show(s) for s in ALL if semiopen(s)])
    print("semiclosed:", [show(s) for s in ALL if semiclosed(s)])
    for s in ALL:
        print(show(s), "fsscl", show(fsscl(s)), "fssint", show(fssint(s)))
