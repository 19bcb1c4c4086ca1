"""Category-level constructions: skew categories, matrix categories,
quotients by free actions, transversal subcategories and the canonical
functors between them.

Conventions fixed here and relied on by the (co)homology modules:

* skew basis morphisms are written "[f]^s" and ordered, within each hom
  space, by group element first and original basis order second;
* the degree-s component of the skew hom from x to y is the hom of the
  base category from s·x to y, and composition twists the inner morphism:
  [g]^t ∘ [f]^s = [g ∘ (t·f)]^{ts};
* the quotient category of a free action is presented on a transversal
  with exactly the same naming scheme, which makes it literally equal,
  entry for entry, to the full subcategory of the skew category on the
  transversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import orbits_transversal
from .lincat import (
    BasisMor,
    CategoryError,
    GActionOnCat,
    GradedLinCat,
    LinCat,
    LinFunctor,
    validate_grading,
    vec_add_scaled,
)


class NonFreeAction(CategoryError):
    pass


@dataclass
class SkewOutput:
    cat: GradedLinCat
    provenance: dict  # skew mid -> (base mid, group element)
    index: dict  # (base mid, group element) -> skew mid

    @property
    def group(self):
        return self.cat.group


def skew(c, a):
    """Skew category: same objects, hom(x,y) = ⊕_s hom(s·x, y), graded by s."""
    g = a.group
    fl = c.field
    morphisms = []
    provenance = {}
    index = {}
    for x in range(c.n_objects):
        for y in range(c.n_objects):
            for s in range(len(g)):
                for f in c.hom_ids(a.act_obj(s, x), y):
                    mid = len(morphisms)
                    morphisms.append(
                        BasisMor(f"[{c.mor(f).name}]^{g.name(s)}", x, y, s)
                    )
                    provenance[mid] = (f, s)
                    index[(f, s, x)] = mid
    # hom(x, y) may contain the same underlying f for several s when the
    # object action has coincidences, so the index is keyed by source too.
    comp = {}
    sk = LinCat(fl, list(c.objects), morphisms, comp, [])
    for gmid in range(len(morphisms)):
        gf, t = provenance[gmid]
        y, z = sk.mor(gmid).src, sk.mor(gmid).tgt
        for fmid in range(len(morphisms)):
            if sk.mor(fmid).tgt != y:
                continue
            ff, s = provenance[fmid]
            x = sk.mor(fmid).src
            twisted = a.act_mor(t, ff)  # in hom(ts·x, t·y)
            out = {}
            for h, coef in twisted.items():
                vec_add_scaled(fl, out, c.compose_basis(gf, h), coef)
            ts = g.mul(t, s)
            tagged = {index[(h, ts, x)]: coef for h, coef in out.items()}
            if tagged:
                comp[(gmid, fmid)] = tagged
    identities = []
    for x in range(c.n_objects):
        identities.append(
            {index[(b, g.identity, x)]: coef for b, coef in c.identity_vec(x).items()}
        )
    sk = LinCat(fl, list(c.objects), morphisms, comp, identities)
    graded = GradedLinCat(sk, g)
    validate_grading(graded)
    return SkewOutput(graded, provenance, index)


@dataclass
class MatrixCatOutput:
    cat: LinCat
    action: GActionOnCat
    functor_L: LinFunctor
    provenance: dict  # matrix-cat mid -> (base mid, src pair index, tgt pair index)


def matrix_category(c, a):
    """Objects G × C_0, every hom space a tagged copy of the corresponding
    hom of the base category; G acts freely on objects by left translation
    on the tag.  The collapse functor L drops the tag."""
    g = a.group
    fl = c.field
    n = c.n_objects
    objects = [f"({g.name(s)},{c.objects[x]})" for s in range(len(g)) for x in range(n)]

    def oi(s, x):
        return s * n + x

    morphisms = []
    provenance = {}
    index = {}
    for src in range(len(objects)):
        s, x = divmod(src, n)
        for tgt in range(len(objects)):
            t, y = divmod(tgt, n)
            for f in c.hom_ids(x, y):
                mid = len(morphisms)
                morphisms.append(
                    BasisMor(f"{c.mor(f).name}:{objects[src]}->{objects[tgt]}", src, tgt)
                )
                provenance[mid] = (f, src, tgt)
                index[(f, src, tgt)] = mid
    comp = {}
    for gmid, (gf, gs, gt) in provenance.items():
        for fmid, (ff, fs, ft) in provenance.items():
            if ft != gs:
                continue
            under = c.compose_basis(gf, ff)
            tagged = {index[(h, fs, gt)]: coef for h, coef in under.items()}
            if tagged:
                comp[(gmid, fmid)] = tagged
    identities = []
    for src in range(len(objects)):
        s, x = divmod(src, n)
        identities.append(
            {index[(b, src, src)]: coef for b, coef in c.identity_vec(x).items()}
        )
    mg = LinCat(fl, objects, morphisms, comp, identities)

    obj_perm = []
    mor_map = []
    for r in range(len(g)):
        obj_perm.append(
            tuple(
                oi(g.mul(r, s), a.act_obj(r, x))
                for s in range(len(g))
                for x in range(n)
            )
        )
        mmap = {}
        for mid, (f, src, tgt) in provenance.items():
            moved = a.act_mor(r, f)
            s, x = divmod(src, n)
            t, y = divmod(tgt, n)
            nsrc = oi(g.mul(r, s), a.act_obj(r, x))
            ntgt = oi(g.mul(r, t), a.act_obj(r, y))
            mmap[mid] = {index[(h, nsrc, ntgt)]: coef for h, coef in moved.items()}
        mor_map.append(mmap)
    action = GActionOnCat(g, tuple(obj_perm), tuple(mor_map))

    L = LinFunctor(
        mg,
        c,
        tuple(x for s in range(len(g)) for x in range(n)),
        {mid: {provenance[mid][0]: fl.one} for mid in range(mg.total_dim)},
    )
    return MatrixCatOutput(mg, action, L, provenance)


def quotient_category(c, a, transversal=None):
    """Quotient by a free object action, presented on a transversal: objects
    are the orbits, hom(α,β) = ⊕_s hom(s·u_α, u_β) graded by s, and the
    composite of g of degree t with f of degree s is g∘(t·f) in degree ts.
    Raises NonFreeAction when any stabiliser is nontrivial."""
    g = a.group
    fl = c.field
    t, free = (
        orbits_transversal(a.object_action())
        if transversal is None
        else (transversal, None)
    )
    if free is None:
        _, free = orbits_transversal(a.object_action(), prefer=t.reps)
    if not free:
        raise NonFreeAction("the object action has a nontrivial stabiliser")
    reps = t.reps
    objects = [c.objects[u] for u in reps]
    morphisms = []
    index = {}
    for ai, ua in enumerate(reps):
        for bi, ub in enumerate(reps):
            for s in range(len(g)):
                for f in c.hom_ids(a.act_obj(s, ua), ub):
                    mid = len(morphisms)
                    morphisms.append(
                        BasisMor(f"[{c.mor(f).name}]^{g.name(s)}", ai, bi, s)
                    )
                    index[(f, s, ai)] = mid
    comp = {}
    q = LinCat(fl, objects, morphisms, {}, [])
    prov = {mid: None for mid in range(len(morphisms))}
    for mid, m in enumerate(morphisms):
        pass
    for gmid, mg_ in enumerate(morphisms):
        t_elt = mg_.degree
        gf = next(f for (f, s, ai), mm in index.items() if mm == gmid)
        for fmid, mf in enumerate(morphisms):
            if mf.tgt != mg_.src:
                continue
            s_elt = mf.degree
            ff = next(f for (f, s, ai), mm in index.items() if mm == fmid)
            twisted = a.act_mor(t_elt, ff)
            out = {}
            for h, coef in twisted.items():
                vec_add_scaled(fl, out, c.compose_basis(gf, h), coef)
            ts = g.mul(t_elt, s_elt)
            tagged = {index[(h, ts, mf.src)]: coef for h, coef in out.items()}
            if tagged:
                comp[(gmid, fmid)] = tagged
    identities = []
    for ai, ua in enumerate(reps):
        identities.append(
            {index[(b, g.identity, ai)]: coef for b, coef in c.identity_vec(ua).items()}
        )
    out = GradedLinCat(LinCat(fl, objects, morphisms, comp, identities), g)
    validate_grading(out)
    return out


@dataclass
class TransversalOutput:
    cat: GradedLinCat
    inclusion: LinFunctor
    provenance: dict  # sub mid -> skew mid
    skew: SkewOutput
    transversal: object


def transversal_subcategory(sk, t):
    """Full graded subcategory of a skew category on a transversal of the
    object action, together with the fully faithful inclusion."""
    skc = sk.cat.cat
    g = sk.cat.group
    fl = skc.field
    reps = list(t.reps)
    if len(set(reps)) != len(reps) or any(not 0 <= u < skc.n_objects for u in reps):
        raise CategoryError(f"invalid transversal {reps}")
    pos = {u: i for i, u in enumerate(reps)}
    morphisms = []
    sub_to_skew = {}
    skew_to_sub = {}
    for ua in reps:
        for ub in reps:
            for mid in skc.hom_ids(ua, ub):
                nid = len(morphisms)
                m = skc.mor(mid)
                morphisms.append(BasisMor(m.name, pos[ua], pos[ub], m.degree))
                sub_to_skew[nid] = mid
                skew_to_sub[mid] = nid
    comp = {}
    for (gm, fm), vec in skc.comp.items():
        if gm in skew_to_sub and fm in skew_to_sub:
            comp[(skew_to_sub[gm], skew_to_sub[fm])] = {
                skew_to_sub[h]: coef for h, coef in vec.items()
            }
    identities = [
        {skew_to_sub[mid]: coef for mid, coef in skc.identity_vec(u).items()}
        for u in reps
    ]
    sub = LinCat(fl, [skc.objects[u] for u in reps], morphisms, comp, identities)
    graded = GradedLinCat(sub, g)
    validate_grading(graded)
    inclusion = LinFunctor(
        sub, skc, tuple(reps), {nid: {sub_to_skew[nid]: fl.one} for nid in sub_to_skew}
    )
    return TransversalOutput(graded, inclusion, sub_to_skew, sk, t)


def orbit_isos(sk, base_cat, t):
    """For every object x, mutually inverse skew morphisms between the
    orbit representative u of x and x itself: a = [1_x]^w from u to x and
    b = [1_u]^{w^{-1}} from x to u, where x = w·u."""
    g = sk.cat.group
    out = {}
    for x in range(base_cat.n_objects):
        u = t.rep_of[x]
        w = t.witness[x]
        a_vec = {
            sk.index[(b, w, u)]: coef for b, coef in base_cat.identity_vec(x).items()
        }
        b_vec = {
            sk.index[(b, g.inv(w), x)]: coef
            for b, coef in base_cat.identity_vec(u).items()
        }
        out[x] = (a_vec, b_vec)
    return out


def skew_of_functor(F, a_src, a_tgt, sk_src, sk_tgt):
    """Lift an equivariant functor F to a homogeneous functor between the
    skew categories, [f]^s ↦ [F(f)]^s."""
    g = a_src.group
    fl = F.tgt.field
    for s in range(len(g)):
        for x in range(F.src.n_objects):
            if F.apply_obj(a_src.act_obj(s, x)) != a_tgt.act_obj(s, F.apply_obj(x)):
                raise CategoryError("functor is not equivariant on objects")
        for mid in range(F.src.total_dim):
            lhs = F.apply_vec(a_src.act_mor(s, mid))
            rhs = a_tgt.act_vec(s, F.apply_mor(mid), fl)
            if lhs != rhs:
                raise CategoryError(
                    f"functor is not equivariant at {F.src.mor(mid).name}"
                )
    mor_map = {}
    for mid, (f, s) in sk_src.provenance.items():
        x = sk_src.cat.cat.mor(mid).src
        fx = F.apply_obj(x)
        vec = {}
        for b, coef in F.apply_mor(f).items():
            vec_add_scaled(fl, vec, {sk_tgt.index[(b, s, fx)]: coef}, fl.one)
        mor_map[mid] = vec
    return LinFunctor(
        sk_src.cat.cat,
        sk_tgt.cat.cat,
        tuple(F.apply_obj(x) for x in range(F.src.n_objects)),
        mor_map,
    )
