"""Finite groups given by multiplication tables, conjugacy classes, G-sets.

Groups are always fully enumerated: every construction downstream
(conjugacy classes, skew hom-spaces, matrix-category objects) iterates
over all elements, so tables are the right presentation and nothing
fancier than brute force is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


class GroupError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class FinGroup:
    names: tuple
    table: tuple  # table[i][j] = index of names[i] * names[j]
    identity: int
    inverses: tuple

    def __len__(self):
        return len(self.names)

    @property
    def order(self):
        return len(self.names)

    def mul(self, s, t):
        return self.table[s][t]

    def inv(self, s):
        return self.inverses[s]

    def conj(self, s, x):
        """s x s^{-1}"""
        return self.mul(self.mul(s, x), self.inv(s))

    def product(self, elems):
        """Left-to-right product of a sequence of element indices."""
        p = self.identity
        for e in elems:
            p = self.mul(p, e)
        return p

    def name(self, s):
        return self.names[s]

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise GroupError(f"unknown group element {name!r}") from None


def validate_group(names, table):
    """Check the group axioms on a raw table and return a FinGroup.

    Each violated axiom is reported with a witness: duplicated entries for
    the Latin-square check, a triple for associativity.
    """
    names = tuple(str(n) for n in names)
    m = len(names)
    if len(set(names)) != m:
        raise GroupError("duplicate element names")
    if len(table) != m or any(len(row) != m for row in table):
        raise GroupError(f"table must be {m}x{m}")
    table = tuple(tuple(int(v) for v in row) for row in table)
    for i, row in enumerate(table):
        for v in row:
            if not 0 <= v < m:
                raise GroupError(f"table entry {v} out of range in row {i}")
    for i in range(m):
        if len(set(table[i])) != m:
            raise GroupError(
                f"not a Latin square: row {names[i]} has a repeated entry",
                witness={"row": names[i]},
            )
        col = [table[j][i] for j in range(m)]
        if len(set(col)) != m:
            raise GroupError(
                f"not a Latin square: column {names[i]} has a repeated entry",
                witness={"column": names[i]},
            )
    identity = None
    for e in range(m):
        if all(table[e][x] == x == table[x][e] for x in range(m)):
            identity = e
            break
    if identity is None:
        raise GroupError("no identity element")
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise GroupError(
                        "associativity fails at "
                        f"({names[a]}, {names[b]}, {names[c]})",
                        witness={"triple": [names[a], names[b], names[c]]},
                    )
    inverses = []
    for a in range(m):
        inv = next(
            (b for b in range(m) if table[a][b] == identity == table[b][a]), None
        )
        if inv is None:
            raise GroupError(f"element {names[a]} has no inverse")
        inverses.append(inv)
    return FinGroup(names, table, identity, tuple(inverses))


@dataclass(frozen=True)
class ConjClass:
    rep: int
    members: tuple
    name: str

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)


def conjugacy_classes(g):
    """Partition of the group under s·x·s^{-1}; the identity's class first."""
    seen = set()
    classes = []
    order = [g.identity] + [x for x in range(len(g)) if x != g.identity]
    for x in order:
        if x in seen:
            continue
        members = sorted({g.conj(s, x) for s in range(len(g))})
        seen.update(members)
        rep = members[0] if x != g.identity else g.identity
        classes.append(ConjClass(rep, tuple(members), g.name(rep)))
    return classes


def trivial_class(g):
    return ConjClass(g.identity, (g.identity,), g.name(g.identity))


@dataclass(frozen=True)
class GSetAction:
    group: FinGroup
    size: int
    perm: tuple  # perm[s][x] = s·x

    def act(self, s, x):
        return self.perm[s][x]


def validate_gset(action):
    g = action.group
    if len(action.perm) != len(g):
        raise GroupError("one permutation required per group element")
    for s in range(len(g)):
        if sorted(action.perm[s]) != list(range(action.size)):
            raise GroupError(f"action of {g.name(s)} is not a permutation")
    for x in range(action.size):
        if action.act(g.identity, x) != x:
            raise GroupError("identity must act trivially", witness={"point": x})
    for t in range(len(g)):
        for s in range(len(g)):
            ts = g.mul(t, s)
            for x in range(action.size):
                if action.act(ts, x) != action.act(t, action.act(s, x)):
                    raise GroupError(
                        "action is not a homomorphism",
                        witness={"t": g.name(t), "s": g.name(s), "point": x},
                    )
    return action


@dataclass(frozen=True)
class Transversal:
    reps: tuple  # one point per orbit, ascending
    rep_of: tuple  # rep_of[x] = chosen representative of x's orbit
    witness: tuple  # witness[x] = group element with x = witness[x]·rep_of[x]


def orbits_transversal(action, prefer=None):
    """Deterministic transversal plus a freeness flag.

    The representative of each orbit is its smallest point unless `prefer`
    lists a point of that orbit (first listed wins).  The witness of x is
    the smallest s with s·rep = x; for free actions it is the unique one.
    """
    g = action.group
    n = action.size
    prefer = list(prefer) if prefer else []
    for x in prefer:
        if not 0 <= x < n:
            raise GroupError(f"preferred representative {x} out of range")
    assigned = [None] * n
    orbits = []
    for x in range(n):
        if assigned[x] is not None:
            continue
        orbit = sorted({action.act(s, x) for s in range(len(g))})
        oi = len(orbits)
        orbits.append(orbit)
        for y in orbit:
            assigned[y] = oi
    reps = []
    for orbit in orbits:
        rep = next((x for x in prefer if x in orbit), orbit[0])
        reps.append(rep)
    rep_of = [reps[assigned[x]] for x in range(n)]
    witness = []
    for x in range(n):
        s = next(s for s in range(len(g)) if action.act(s, rep_of[x]) == x)
        witness.append(s)
    free = all(
        sum(1 for s in range(len(g)) if action.act(s, x) == x) == 1 for x in range(n)
    )
    return Transversal(tuple(reps), tuple(rep_of), tuple(witness)), free


def transversal_from_reps(action, reps):
    """Build a transversal from an explicit full list of representatives."""
    t, free = orbits_transversal(action, prefer=reps)
    if sorted(t.reps) != sorted(set(reps)):
        raise GroupError(
            f"{list(reps)} is not a transversal: expected one point per orbit, "
            f"orbits have representatives {sorted(t.reps)}"
        )
    return t, free


# -- builders -----------------------------------------------------------


def trivial_group():
    return validate_group(["1"], [[0]])


def cyclic_group(n):
    names = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate_group(names, table)


def _cycle_name(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + "".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "e"


def symmetric_group(n):
    """S_n from permutation composition; (p·q)(i) = p(q(i))."""
    perms = sorted(permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [
        [idx[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    names = [_cycle_name(p) for p in perms]
    return validate_group(names, table)


# -- JSON schema --------------------------------------------------------


def group_from_json(doc):
    """{"elements": [names], "table": [[indices]]}; identity inferred."""
    if "elements" not in doc or "table" not in doc:
        raise GroupError('group document needs "elements" and "table"')
    return validate_group(doc["elements"], doc["table"])


def group_to_json(g):
    return {"elements": list(g.names), "table": [list(r) for r in g.table]}
