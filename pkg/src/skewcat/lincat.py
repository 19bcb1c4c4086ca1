"""Finite k-linear categories presented by hom bases and structure constants.

A category is a list of objects, a global ordered list of basis morphisms
(each with source and target, and optionally a group degree), a sparse
composition table on basis pairs (absent entry = zero composite), and an
identity coefficient vector per object.  Vectors over a hom space are
dicts {morphism id: coefficient}; coefficients are canonical elements of
the category's field.

Basis order is input order everywhere; every derived basis downstream is
enumerated lexicographically over constituent indices, which is what makes
golden outputs reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .groups import FinGroup, GroupError, GSetAction, validate_gset


class CategoryError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotFullyFaithful(CategoryError):
    pass


@dataclass(frozen=True)
class BasisMor:
    name: str
    src: int
    tgt: int
    degree: int | None = None


def vec_clean(fieldobj, vec):
    return {k: c for k, c in vec.items() if not fieldobj.is_zero(c)}


def vec_add_scaled(fieldobj, acc, vec, scale):
    for k, c in vec.items():
        v = fieldobj.add(acc.get(k, fieldobj.zero), fieldobj.mul(scale, c))
        if fieldobj.is_zero(v):
            acc.pop(k, None)
        else:
            acc[k] = v
    return acc


def vec_eq(fieldobj, u, v):
    return vec_clean(fieldobj, u) == vec_clean(fieldobj, v)


class LinCat:
    def __init__(self, field, objects, morphisms, comp, identities):
        self.field = field
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.comp = comp
        self.identities = list(identities)
        self.hom = {
            (x, y): [] for x in range(len(self.objects)) for y in range(len(self.objects))
        }
        for mid, m in enumerate(self.morphisms):
            self.hom[(m.src, m.tgt)].append(mid)
        self._pos = {}
        for pair, mids in self.hom.items():
            for k, mid in enumerate(mids):
                self._pos[mid] = k

    # -- lookups ---------------------------------------------------------

    def mor(self, mid):
        return self.morphisms[mid]

    def hom_ids(self, x, y):
        return self.hom[(x, y)]

    def hom_pos(self, mid):
        return self._pos[mid]

    def dim_hom(self, x, y):
        return len(self.hom[(x, y)])

    @property
    def total_dim(self):
        return len(self.morphisms)

    @property
    def n_objects(self):
        return len(self.objects)

    def is_graded(self):
        return all(m.degree is not None for m in self.morphisms)

    def mor_index(self, name):
        for mid, m in enumerate(self.morphisms):
            if m.name == name:
                return mid
        raise CategoryError(f"unknown morphism {name!r}")

    def obj_index(self, name):
        try:
            return self.objects.index(name)
        except ValueError:
            raise CategoryError(f"unknown object {name!r}") from None

    # -- algebraic operations ---------------------------------------------

    def compose_basis(self, g, f):
        """Composite g∘f of basis morphisms as a vector; {} means zero."""
        if self.mor(f).tgt != self.mor(g).src:
            raise CategoryError(
                f"morphisms {self.mor(g).name} and {self.mor(f).name} not composable"
            )
        return self.comp.get((g, f), {})

    def compose_vec(self, gv, fv):
        out = {}
        fl = self.field
        for g, cg in gv.items():
            for f, cf in fv.items():
                scale = fl.mul(cg, cf)
                if fl.is_zero(scale):
                    continue
                vec_add_scaled(fl, out, self.compose_basis(g, f), scale)
        return out

    def identity_vec(self, x):
        return dict(self.identities[x])


@dataclass
class GActionOnCat:
    group: FinGroup
    obj_perm: tuple  # obj_perm[s][x] = s·x
    mor_map: tuple  # mor_map[s][mid] = vector over hom(s·src, s·tgt)

    def act_obj(self, s, x):
        return self.obj_perm[s][x]

    def act_mor(self, s, mid):
        return self.mor_map[s][mid]

    def act_vec(self, s, vec, fieldobj):
        out = {}
        for mid, c in vec.items():
            vec_add_scaled(fieldobj, out, self.mor_map[s][mid], c)
        return out

    def object_action(self):
        return GSetAction(self.group, len(self.obj_perm[0]), self.obj_perm)


@dataclass
class GradedLinCat:
    cat: LinCat
    group: FinGroup

    def degree(self, mid):
        return self.cat.mor(mid).degree


@dataclass
class LinFunctor:
    src: LinCat
    tgt: LinCat
    obj_map: tuple
    mor_map: dict  # mid -> vector over hom(F src, F tgt)
    fully_faithful: bool = dc_field(default=False)
    surjective_on_objects: bool = dc_field(default=False)
    dense: bool = dc_field(default=False)

    def apply_obj(self, x):
        return self.obj_map[x]

    def apply_mor(self, mid):
        return self.mor_map[mid]

    def apply_vec(self, vec):
        out = {}
        for mid, c in vec.items():
            vec_add_scaled(self.tgt.field, out, self.mor_map[mid], c)
        return out

    def hom_matrix(self, x, y):
        """Matrix of hom_src(x,y) -> hom_tgt(Fx,Fy) on the chosen bases."""
        from .linalg import Matrix

        fl = self.tgt.field
        rows = self.tgt.hom_ids(self.apply_obj(x), self.apply_obj(y))
        cols = self.src.hom_ids(x, y)
        entries = {}
        rowpos = {mid: i for i, mid in enumerate(rows)}
        for j, mid in enumerate(cols):
            for m2, c in self.mor_map[mid].items():
                entries[(rowpos[m2], j)] = c
        return Matrix.from_entries(fl, len(rows), len(cols), entries)


# -- validation ------------------------------------------------------------


def validate_category(c):
    """Associativity on all composable basis triples plus identity laws."""
    fl = c.field
    nobj = c.n_objects
    for mid, m in enumerate(c.morphisms):
        if not (0 <= m.src < nobj and 0 <= m.tgt < nobj):
            raise CategoryError(f"morphism {m.name} has out-of-range endpoints")
    names = [m.name for m in c.morphisms]
    if len(set(names)) != len(names):
        raise CategoryError("duplicate morphism names")
    for (g, f), vec in c.comp.items():
        if c.mor(f).tgt != c.mor(g).src:
            raise CategoryError(
                f"composition entry ({c.mor(g).name}, {c.mor(f).name}) is not composable"
            )
        for h, coef in vec.items():
            if (c.mor(h).src, c.mor(h).tgt) != (c.mor(f).src, c.mor(g).tgt):
                raise CategoryError(
                    f"composite of ({c.mor(g).name}, {c.mor(f).name}) has support "
                    f"outside hom({c.objects[c.mor(f).src]}, {c.objects[c.mor(g).tgt]})",
                    witness={"g": c.mor(g).name, "f": c.mor(f).name, "h": c.mor(h).name},
                )
    if len(c.identities) != nobj:
        raise CategoryError("one identity vector required per object")
    for x, vec in enumerate(c.identities):
        for mid in vec:
            if (c.mor(mid).src, c.mor(mid).tgt) != (x, x):
                raise CategoryError(
                    f"identity of {c.objects[x]} supported outside its endomorphisms"
                )
    for mid, m in enumerate(c.morphisms):
        f_vec = {mid: fl.one}
        left = c.compose_vec(c.identity_vec(m.tgt), f_vec)
        if not vec_eq(fl, left, f_vec):
            raise CategoryError(
                f"identity law fails: id∘{m.name} ≠ {m.name}",
                witness={"morphism": m.name, "side": "left"},
            )
        right = c.compose_vec(f_vec, c.identity_vec(m.src))
        if not vec_eq(fl, right, f_vec):
            raise CategoryError(
                f"identity law fails: {m.name}∘id ≠ {m.name}",
                witness={"morphism": m.name, "side": "right"},
            )
    for h, mh in enumerate(c.morphisms):
        for g, mg in enumerate(c.morphisms):
            if mg.tgt != mh.src:
                continue
            for f, mf in enumerate(c.morphisms):
                if mf.tgt != mg.src:
                    continue
                lhs = c.compose_vec(c.compose_basis(h, g), {f: fl.one})
                rhs = c.compose_vec({h: fl.one}, c.compose_basis(g, f))
                if not vec_eq(fl, lhs, rhs):
                    raise CategoryError(
                        f"associativity fails at ({mh.name}, {mg.name}, {mf.name})",
                        witness={"h": mh.name, "g": mg.name, "f": mf.name},
                    )


def validate_action(c, a):
    """Exhaustive check that `a` is a group action by linear functors."""
    fl = c.field
    g = a.group
    try:
        validate_gset(a.object_action())
    except GroupError as e:
        raise CategoryError(f"object action invalid: {e}", e.witness) from e
    for s in range(len(g)):
        if set(a.mor_map[s].keys()) != set(range(c.total_dim)):
            raise CategoryError(f"action of {g.name(s)} must map every basis morphism")
        for mid, vec in a.mor_map[s].items():
            m = c.mor(mid)
            tx, ty = a.act_obj(s, m.src), a.act_obj(s, m.tgt)
            for m2 in vec:
                if (c.mor(m2).src, c.mor(m2).tgt) != (tx, ty):
                    raise CategoryError(
                        f"{g.name(s)}·{m.name} has support outside "
                        f"hom({c.objects[tx]}, {c.objects[ty]})"
                    )
    e = g.identity
    for mid in range(c.total_dim):
        if not vec_eq(fl, a.act_mor(e, mid), {mid: fl.one}):
            raise CategoryError(
                "identity group element must act trivially",
                witness={"morphism": c.mor(mid).name},
            )
    for t in range(len(g)):
        for s in range(len(g)):
            ts = g.mul(t, s)
            for mid in range(c.total_dim):
                two_step = a.act_vec(t, a.act_mor(s, mid), fl)
                if not vec_eq(fl, two_step, a.act_mor(ts, mid)):
                    raise CategoryError(
                        f"action law fails: {g.name(t)}({g.name(s)}·{c.mor(mid).name}) "
                        f"≠ ({g.name(t)}{g.name(s)})·{c.mor(mid).name}",
                        witness={"t": g.name(t), "s": g.name(s), "f": c.mor(mid).name},
                    )
    for s in range(len(g)):
        for x in range(c.n_objects):
            got = a.act_vec(s, c.identity_vec(x), fl)
            want = c.identity_vec(a.act_obj(s, x))
            if not vec_eq(fl, got, want):
                raise CategoryError(
                    f"action of {g.name(s)} does not preserve the identity of "
                    f"{c.objects[x]}",
                    witness={"s": g.name(s), "object": c.objects[x]},
                )
    for s in range(len(g)):
        for gmid, mg in enumerate(c.morphisms):
            for fmid, mf in enumerate(c.morphisms):
                if mf.tgt != mg.src:
                    continue
                lhs = a.act_vec(s, c.compose_basis(gmid, fmid), fl)
                rhs = c.compose_vec(a.act_mor(s, gmid), a.act_mor(s, fmid))
                if not vec_eq(fl, lhs, rhs):
                    raise CategoryError(
                        f"action of {g.name(s)} is not multiplicative at "
                        f"({mg.name}, {mf.name})",
                        witness={"s": g.name(s), "g": mg.name, "f": mf.name},
                    )


def validate_grading(gc):
    """Composition must respect degree multiplication; identities sit in
    degree 1."""
    c, g = gc.cat, gc.group
    if not c.is_graded():
        raise CategoryError("not graded: some basis morphism has no degree")
    for m in c.morphisms:
        if not 0 <= m.degree < len(g):
            raise CategoryError(f"morphism {m.name} has out-of-range degree")
    for (gm, fm), vec in c.comp.items():
        want = g.mul(c.mor(gm).degree, c.mor(fm).degree)
        for h in vec:
            if c.mor(h).degree != want:
                raise CategoryError(
                    f"degree leak: {c.mor(gm).name}∘{c.mor(fm).name} has a component "
                    f"{c.mor(h).name} of degree {g.name(c.mor(h).degree)}, expected "
                    f"{g.name(want)}",
                    witness={"g": c.mor(gm).name, "f": c.mor(fm).name, "h": c.mor(h).name},
                )
    for x, vec in enumerate(c.identities):
        for mid in vec:
            if c.mor(mid).degree != g.identity:
                raise CategoryError(
                    f"identity of {c.objects[x]} has a component outside degree "
                    f"{g.name(g.identity)}",
                    witness={"object": c.objects[x]},
                )


def validate_functor(F):
    """Check functoriality; set the fully-faithful/surjectivity flags."""
    src, tgt = F.src, F.tgt
    fl = tgt.field
    if src.field != tgt.field:
        raise CategoryError("functor between categories over different fields")
    for mid, m in enumerate(src.morphisms):
        fx, fy = F.apply_obj(m.src), F.apply_obj(m.tgt)
        for m2 in F.mor_map[mid]:
            if (tgt.mor(m2).src, tgt.mor(m2).tgt) != (fx, fy):
                raise CategoryError(f"functor image of {m.name} lands in a wrong hom")
    for x in range(src.n_objects):
        if not vec_eq(fl, F.apply_vec(src.identity_vec(x)), tgt.identity_vec(F.apply_obj(x))):
            raise CategoryError(
                f"functor does not preserve the identity of {src.objects[x]}"
            )
    for g, mg in enumerate(src.morphisms):
        for f, mf in enumerate(src.morphisms):
            if mf.tgt != mg.src:
                continue
            mapped = F.apply_vec(src.compose_basis(g, f))
            composed = tgt.compose_vec(F.apply_mor(g), F.apply_mor(f))
            if not vec_eq(fl, mapped, composed):
                raise CategoryError(
                    f"functor is not multiplicative at ({mg.name}, {mf.name})",
                    witness={"g": mg.name, "f": mf.name},
                )
    ff = True
    for x in range(src.n_objects):
        for y in range(src.n_objects):
            m = F.hom_matrix(x, y)
            if m.rows != m.cols or m.rank() != m.rows:
                ff = False
    F.fully_faithful = ff
    F.surjective_on_objects = set(F.obj_map) == set(range(tgt.n_objects))
    if F.surjective_on_objects:
        F.dense = True
    return F


# -- the associated algebra -------------------------------------------------


def algebra_of(c):
    """Flatten a finite-object category into one object whose endomorphism
    algebra is the direct sum of all hom spaces, products given by
    composition where defined and zero otherwise.  The sum of the identity
    vectors is the unit."""
    unit = {}
    for x in range(c.n_objects):
        for mid, coef in c.identity_vec(x).items():
            unit[mid] = coef
    morphisms = [BasisMor(m.name, 0, 0, m.degree) for m in c.morphisms]
    return LinCat(c.field, ["*"], morphisms, dict(c.comp), [unit])


# -- JSON schema -------------------------------------------------------------


def category_from_json(doc, fieldobj, group=None):
    for key in ("objects", "morphisms"):
        if key not in doc:
            raise CategoryError(f'category document needs "{key}"')
    objects = [str(o) for o in doc["objects"]]
    if len(set(objects)) != len(objects):
        raise CategoryError("duplicate object names")
    oidx = {o: i for i, o in enumerate(objects)}
    morphisms = []
    midx = {}
    for m in doc["morphisms"]:
        name = str(m["name"])
        if name in midx:
            raise CategoryError(f"duplicate morphism name {name!r}")
        if m["src"] not in oidx or m["tgt"] not in oidx:
            raise CategoryError(f"morphism {name!r} references unknown objects")
        degree = None
        if "degree" in m:
            if group is None:
                raise CategoryError(
                    f"morphism {name!r} carries a degree but no group was given"
                )
            degree = group.index(str(m["degree"]))
        midx[name] = len(morphisms)
        morphisms.append(BasisMor(name, oidx[m["src"]], oidx[m["tgt"]], degree))

    def parse_vec(d):
        out = {}
        for mname, coef in d.items():
            if mname not in midx:
                raise CategoryError(f"unknown morphism {mname!r} in a coefficient vector")
            val = fieldobj.parse(coef)
            if not fieldobj.is_zero(val):
                out[midx[mname]] = val
        return out

    comp = {}
    for entry in doc.get("composition", []):
        gname, fname = str(entry["g"]), str(entry["f"])
        if gname not in midx or fname not in midx:
            raise CategoryError(f"composition entry references unknown morphisms")
        key = (midx[gname], midx[fname])
        if key in comp:
            raise CategoryError(f"duplicate composition entry ({gname}, {fname})")
        vec = parse_vec(entry.get("result", {}))
        if vec:
            comp[key] = vec
    identities = []
    ids_doc = doc.get("identities", {})
    for o in objects:
        if o not in ids_doc:
            raise CategoryError(f"missing identity vector for object {o!r}")
        identities.append(parse_vec(ids_doc[o]))
    return LinCat(fieldobj, objects, morphisms, comp, identities)


def category_to_json(c, group=None):
    fl = c.field
    morphisms = []
    for m in c.morphisms:
        entry = {"name": m.name, "src": c.objects[m.src], "tgt": c.objects[m.tgt]}
        if m.degree is not None and group is not None:
            entry["degree"] = group.name(m.degree)
        morphisms.append(entry)

    def fmt_vec(vec):
        return {c.mor(mid).name: fl.fmt(coef) for mid, coef in sorted(vec.items())}

    composition = [
        {"g": c.mor(g).name, "f": c.mor(f).name, "result": fmt_vec(vec)}
        for (g, f), vec in sorted(c.comp.items())
    ]
    identities = {c.objects[x]: fmt_vec(vec) for x, vec in enumerate(c.identities)}
    return {
        "objects": list(c.objects),
        "morphisms": morphisms,
        "identities": identities,
        "composition": composition,
    }


def action_from_json(doc, c, group):
    on_obj = doc.get("on_objects", {})
    on_mor = doc.get("on_morphisms", {})
    obj_perm = []
    mor_map = []
    for s in range(len(group)):
        sname = group.name(s)
        if s == group.identity and sname not in on_obj:
            obj_perm.append(tuple(range(c.n_objects)))
            mor_map.append({mid: {mid: c.field.one} for mid in range(c.total_dim)})
            continue
        if sname not in on_obj or sname not in on_mor:
            raise CategoryError(f"action document missing group element {sname!r}")
        omap = on_obj[sname]
        perm = []
        for o in c.objects:
            if o not in omap:
                raise CategoryError(f"action of {sname!r} missing object {o!r}")
            perm.append(c.obj_index(str(omap[o])))
        mmap = {}
        mdoc = on_mor[sname]
        for mid, m in enumerate(c.morphisms):
            if m.name not in mdoc:
                raise CategoryError(f"action of {sname!r} missing morphism {m.name!r}")
            vec = {}
            for m2name, coef in mdoc[m.name].items():
                val = c.field.parse(coef)
                if not c.field.is_zero(val):
                    vec[c.mor_index(str(m2name))] = val
            mmap[mid] = vec
        obj_perm.append(tuple(perm))
        mor_map.append(mmap)
    return GActionOnCat(group, tuple(obj_perm), tuple(mor_map))


def action_to_json(a, c):
    g = a.group
    on_obj = {}
    on_mor = {}
    for s in range(len(g)):
        on_obj[g.name(s)] = {
            c.objects[x]: c.objects[a.act_obj(s, x)] for x in range(c.n_objects)
        }
        on_mor[g.name(s)] = {
            c.mor(mid).name: {
                c.mor(m2).name: c.field.fmt(coef)
                for m2, coef in sorted(a.act_mor(s, mid).items())
            }
            for mid in range(c.total_dim)
        }
    return {"on_objects": on_obj, "on_morphisms": on_mor}
