"""Finite categories, functors and natural transformations.

Everything is explicit tabulated data: a category is its object list, its
morphism list with dom/cod, an identity assignment and a total composition
table over composable pairs.  All constructions are deterministic: iteration
follows declared order, enumerations are ordered, and equality is extensional
(same tables), never nominal.
"""

from itertools import product as iproduct

from .errors import (
    AssociativityViolation, DanglingId, IdentityViolation, MissingComposite,
    ShapeMismatch, SizeBudgetExceeded, ValidationError,
)

DEFAULT_MAX_OBJECTS = 500
DEFAULT_MAX_MORPHISMS = 5000


class Budget:
    """Size cap for constructed categories; fail loudly instead of hanging."""

    def __init__(self, max_objects=DEFAULT_MAX_OBJECTS,
                 max_morphisms=DEFAULT_MAX_MORPHISMS):
        self.max_objects = max_objects
        self.max_morphisms = max_morphisms

    def check_objects(self, what, count):
        if count > self.max_objects:
            raise SizeBudgetExceeded(what + " objects", count, self.max_objects)

    def check_morphisms(self, what, count):
        if count > self.max_morphisms:
            raise SizeBudgetExceeded(what + " morphisms", count, self.max_morphisms)


DEFAULT_BUDGET = Budget()


class FinCat:
    """A finite category with a total, validated composition table.

    `objects` and `morphisms` are id tuples in declared order; `dom`, `cod`,
    `identity` and `compose` are maps over those ids.  Instances are treated
    as immutable after construction.
    """

    def __init__(self, name, objects, morphisms, dom, cod, identity, compose):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.dom = dict(dom)
        self.cod = dict(cod)
        self.identity = dict(identity)
        self.compose = dict(compose)
        self._index()

    def _index(self):
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((self.dom[m], self.cod[m]), []).append(m)
        self._identities = set(self.identity.values())
        self._inverse = {}
        for m in self.morphisms:
            a, b = self.dom[m], self.cod[m]
            for n in self._hom.get((b, a), ()):
                if (self.compose[(n, m)] == self.identity[a]
                        and self.compose[(m, n)] == self.identity[b]):
                    self._inverse[m] = n
                    break

    # -- views ---------------------------------------------------------------

    def hom(self, a, b):
        return tuple(self._hom.get((a, b), ()))

    def comp(self, g, f):
        assert self.dom[g] == self.cod[f], (g, f)
        return self.compose[(g, f)]

    def id(self, a):
        return self.identity[a]

    def is_identity(self, m):
        return m in self._identities

    def is_iso(self, m):
        return m in self._inverse

    def inverse(self, m):
        return self._inverse[m]

    def isos(self):
        return tuple(m for m in self.morphisms if m in self._inverse)

    def composable_pairs(self):
        for g in self.morphisms:
            for f in self.morphisms:
                if self.dom[g] == self.cod[f]:
                    yield g, f

    # -- constructions ---------------------------------------------------------

    def op(self):
        comp = {(f, g): h for (g, f), h in self.compose.items()}
        return FinCat(self.name + "_op", self.objects, self.morphisms,
                      dict(self.cod), dict(self.dom), self.identity, comp)

    def full_subcategory(self, objs, name=None):
        objs = tuple(o for o in self.objects if o in set(objs))
        mors = tuple(m for m in self.morphisms
                     if self.dom[m] in objs and self.cod[m] in objs)
        keep = set(mors)
        comp = {p: h for p, h in self.compose.items()
                if p[0] in keep and p[1] in keep}
        sub = FinCat(name or self.name + "_sub", objs, mors,
                     {m: self.dom[m] for m in mors},
                     {m: self.cod[m] for m in mors},
                     {o: self.identity[o] for o in objs}, comp)
        incl = Functor(sub, self, {o: o for o in objs}, {m: m for m in mors})
        return sub, incl

    # -- equality ---------------------------------------------------------------

    def same_data(self, other):
        if self is other:
            return True
        return (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.dom == other.dom and self.cod == other.cod
                and self.identity == other.identity
                and self.compose == other.compose)

    def __eq__(self, other):
        return isinstance(other, FinCat) and self.same_data(other)

    __hash__ = None

    def __repr__(self):
        return (f"FinCat({self.name!r}, {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")


def validate_category(name, objects, morphisms, dom, cod, identity, compose):
    """Check every invariant exhaustively and return the validated FinCat.

    morphisms/objects: iterables of ids in declared order; identity may be
    partial (missing entries raise).  Raises DanglingId, MissingComposite,
    IdentityViolation or AssociativityViolation with a witness.
    """
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    if len(set(objects)) != len(objects):
        raise ValidationError(f"{name}: duplicate object ids")
    if len(set(morphisms)) != len(morphisms):
        raise ValidationError(f"{name}: duplicate morphism ids")
    oset, mset = set(objects), set(morphisms)
    for m in morphisms:
        if m not in dom or m not in cod:
            raise DanglingId(f"{name}: morphism {m} lacks dom/cod")
        if dom[m] not in oset or cod[m] not in oset:
            raise DanglingId(f"{name}: morphism {m} has unknown endpoint")
    for o in objects:
        if o not in identity:
            raise DanglingId(f"{name}: object {o} has no identity")
        i = identity[o]
        if i not in mset:
            raise DanglingId(f"{name}: identity of {o} is unknown morphism {i}")
        if dom[i] != o or cod[i] != o:
            raise IdentityViolation(i, "(wrong endpoints)")
    for (g, f), h in compose.items():
        if g not in mset or f not in mset or h not in mset:
            raise DanglingId(f"{name}: composition entry ({g} . {f}) = {h} dangles")
        if dom[g] != cod[f]:
            raise ValidationError(f"{name}: ({g} . {f}) is not composable")
        if dom[h] != dom[f] or cod[h] != cod[g]:
            raise ValidationError(f"{name}: ({g} . {f}) = {h} has wrong endpoints")
    for g in morphisms:
        for f in morphisms:
            if dom[g] == cod[f] and (g, f) not in compose:
                raise MissingComposite(g, f)
    for m in morphisms:
        if compose[(m, identity[dom[m]])] != m:
            raise IdentityViolation(m, "(right identity)")
        if compose[(identity[cod[m]], m)] != m:
            raise IdentityViolation(m, "(left identity)")
    for h in morphisms:
        for g in morphisms:
            if dom[h] != cod[g]:
                continue
            hg = compose[(h, g)]
            for f in morphisms:
                if dom[g] != cod[f]:
                    continue
                if compose[(hg, f)] != compose[(h, compose[(g, f)])]:
                    raise AssociativityViolation(h, g, f)
    return FinCat(name, objects, morphisms, dom, cod, identity, compose)


class Functor:
    """A functor between finite categories, as tabulated object/morphism maps."""

    def __init__(self, source, target, obj_map, mor_map, check=True):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        if check:
            self._validate()

    def _validate(self):
        s, t = self.source, self.target
        for o in s.objects:
            if self.obj_map.get(o) not in t.identity:
                raise ValidationError(f"functor: object {o} unmapped or dangling")
        for m in s.morphisms:
            fm = self.mor_map.get(m)
            if fm not in t.dom:
                raise ValidationError(f"functor: morphism {m} unmapped or dangling")
            if (t.dom[fm] != self.obj_map[s.dom[m]]
                    or t.cod[fm] != self.obj_map[s.cod[m]]):
                raise ValidationError(f"functor: {m} image has wrong endpoints")
        for o in s.objects:
            if self.mor_map[s.id(o)] != t.id(self.obj_map[o]):
                raise ValidationError(f"functor: identity of {o} not preserved")
        for g, f in s.composable_pairs():
            if self.mor_map[s.comp(g, f)] != t.comp(self.mor_map[g], self.mor_map[f]):
                raise ValidationError(f"functor: composition ({g} . {f}) not preserved")

    def on_obj(self, o):
        return self.obj_map[o]

    def on_mor(self, m):
        return self.mor_map[m]

    @staticmethod
    def identity(c):
        return Functor(c, c, {o: o for o in c.objects},
                       {m: m for m in c.morphisms}, check=False)

    @staticmethod
    def constant(source, target, obj):
        i = target.id(obj)
        return Functor(source, target, {o: obj for o in source.objects},
                       {m: i for m in source.morphisms}, check=False)

    def then(self, other):
        """Composite other . self (self applied first)."""
        if self.target is not other.source and not self.target.same_data(other.source):
            raise ShapeMismatch("functor composition: target != source")
        return Functor(self.source, other.target,
                       {o: other.obj_map[self.obj_map[o]] for o in self.source.objects},
                       {m: other.mor_map[self.mor_map[m]] for m in self.source.morphisms},
                       check=False)

    def op(self):
        return Functor(self.source.op(), self.target.op(),
                       self.obj_map, self.mor_map, check=False)

    def is_identity_like(self):
        return (self.source.same_data(self.target)
                and all(self.obj_map[o] == o for o in self.source.objects)
                and all(self.mor_map[m] == m for m in self.source.morphisms))

    def signature(self):
        s = self.source
        return ("|".join(self.obj_map[o] for o in s.objects)
                + ";" + "|".join(self.mor_map[m] for m in s.morphisms))

    def __eq__(self, other):
        return (isinstance(other, Functor)
                and self.source.same_data(other.source)
                and self.target.same_data(other.target)
                and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map)

    __hash__ = None

    def __repr__(self):
        return f"Functor({self.source.name} -> {self.target.name})"


def compose_functors(outer, inner):
    return inner.then(outer)


class NatTrans:
    """A natural transformation, as a component table over source objects."""

    def __init__(self, source, target, components, check=True):
        if check and not (source.source.same_data(target.source)
                          and source.target.same_data(target.target)):
            raise ShapeMismatch("natural transformation between non-parallel functors")
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self._validate()

    def _validate(self):
        c, d = self.source.source, self.source.target
        for o in c.objects:
            comp = self.components.get(o)
            if comp not in d.dom:
                raise ValidationError(f"nat: component at {o} unmapped or dangling")
            if (d.dom[comp] != self.source.obj_map[o]
                    or d.cod[comp] != self.target.obj_map[o]):
                raise ValidationError(f"nat: component at {o} has wrong endpoints")
        for m in c.morphisms:
            a, b = c.dom[m], c.cod[m]
            lhs = d.comp(self.components[b], self.source.mor_map[m])
            rhs = d.comp(self.target.mor_map[m], self.components[a])
            if lhs != rhs:
                raise ValidationError(f"nat: naturality fails at {m}")

    def at(self, o):
        return self.components[o]

    @staticmethod
    def identity(f):
        return NatTrans(f, f, {o: f.target.id(f.obj_map[o])
                               for o in f.source.objects}, check=False)

    def is_identity(self):
        d = self.source.target
        return all(d.is_identity(x) for x in self.components.values())

    def is_iso(self):
        d = self.source.target
        return all(d.is_iso(x) for x in self.components.values())

    def inverse(self):
        d = self.source.target
        return NatTrans(self.target, self.source,
                        {o: d.inverse(x) for o, x in self.components.items()},
                        check=False)

    def __eq__(self, other):
        return (isinstance(other, NatTrans)
                and self.source == other.source and self.target == other.target
                and self.components == other.components)

    __hash__ = None

    def __repr__(self):
        return f"NatTrans({self.source!r} => {self.target!r})"


# -- 2-categorical composition -------------------------------------------------


def vertical(t2, t1):
    """t2 . t1 for t1: F => G, t2: G => H."""
    if t1.target != t2.source:
        raise ShapeMismatch("vertical composition: middle functors differ")
    d = t1.source.target
    return NatTrans(t1.source, t2.target,
                    {o: d.comp(t2.components[o], t1.components[o])
                     for o in t1.source.source.objects}, check=False)


def whisker_left(f, t):
    """f t: f.F => f.G for t: F => G and f out of the common target."""
    if not t.source.target.same_data(f.source):
        raise ShapeMismatch("left whisker: categories differ")
    return NatTrans(t.source.then(f), t.target.then(f),
                    {o: f.mor_map[t.components[o]]
                     for o in t.source.source.objects}, check=False)


def whisker_right(t, f):
    """t_f: F.f => G.f for t: F => G and f into the common source."""
    if not f.target.same_data(t.source.source):
        raise ShapeMismatch("right whisker: categories differ")
    return NatTrans(f.then(t.source), f.then(t.target),
                    {o: t.components[f.obj_map[o]]
                     for o in f.source.objects}, check=False)


def horizontal(t2, t1):
    """t2 * t1 for t1: F => G (C -> D) and t2: H => K (D -> E)."""
    return vertical(whisker_right(t2, t1.target), whisker_left(t2.source, t1))


def compose_whisker(kind, a, b):
    """Dispatch entry point: kind in vertical|horizontal|left-whisker|right-whisker."""
    if kind == "vertical":
        return vertical(a, b)
    if kind == "horizontal":
        return horizontal(a, b)
    if kind == "left-whisker":
        return whisker_left(a, b)
    if kind == "right-whisker":
        return whisker_right(a, b)
    raise ShapeMismatch(f"unknown composition kind {kind!r}")


# -- enumeration ----------------------------------------------------------------


def enumerate_functors(c, d, budget=None):
    """All functors c -> d, duplicate-free, in deterministic order.

    Backtracks over object images (declared order) and then morphism images,
    pruning with every composition entry whose participants are all assigned.
    """
    budget = budget or DEFAULT_BUDGET
    nonid = [m for m in c.morphisms if not c.is_identity(m)]
    entries = [(g, f, h) for (g, f), h in c.compose.items()]
    touching = {m: [] for m in c.morphisms}
    for e in entries:
        for m in set(e):
            touching[m].append(e)
    results = []

    def consistent(mor_map, m):
        for g, f, h in touching[m]:
            if g in mor_map and f in mor_map and h in mor_map:
                if mor_map[h] != d.comp(mor_map[g], mor_map[f]):
                    return False
        return True

    def extend_mors(obj_map, k, mor_map):
        if k == len(nonid):
            results.append(Functor(c, d, obj_map, mor_map, check=False))
            budget.check_objects("enumerate_functors", len(results))
            return
        m = nonid[k]
        for im in d.hom(obj_map[c.dom[m]], obj_map[c.cod[m]]):
            mor_map[m] = im
            if consistent(mor_map, m):
                extend_mors(obj_map, k + 1, mor_map)
            del mor_map[m]

    for images in iproduct(d.objects, repeat=len(c.objects)):
        obj_map = dict(zip(c.objects, images))
        mor_map = {c.id(o): d.id(obj_map[o]) for o in c.objects}
        extend_mors(obj_map, 0, mor_map)
    return results


def enumerate_nats(f, g):
    """All natural transformations f => g, in deterministic order."""
    if not (f.source.same_data(g.source) and f.target.same_data(g.target)):
        raise ShapeMismatch("enumerate_nats: functors not parallel")
    c, d = f.source, f.target
    objs = list(c.objects)
    results = []

    def extend(k, comps):
        if k == len(objs):
            results.append(NatTrans(f, g, comps, check=False))
            return
        o = objs[k]
        for x in d.hom(f.obj_map[o], g.obj_map[o]):
            comps[o] = x
            ok = True
            for m in c.morphisms:
                a, b = c.dom[m], c.cod[m]
                if a in comps and b in comps:
                    if d.comp(comps[b], f.mor_map[m]) != d.comp(g.mor_map[m], comps[a]):
                        ok = False
                        break
            if ok:
                extend(k + 1, comps)
            del comps[o]

    extend(0, {})
    return results


# -- functor categories ------------------------------------------------------------


class FunctorCategory:
    """The category of functors shape -> base with natural transformations.

    `cat` is the materialized FinCat (objects d0, d1, ...; morphisms t0, ...),
    `functors`/`nats` map those ids back to the structural data.
    """

    def __init__(self, shape, base, cat, functors, nats):
        self.shape = shape
        self.base = base
        self.cat = cat
        self.functors = functors
        self.nats = nats
        self._obj_by_sig = {functors[o].signature(): o for o in cat.objects}

    def obj_id(self, functor):
        return self._obj_by_sig[functor.signature()]

    def mor_id(self, nat):
        src = self.obj_id(nat.source)
        tgt = self.obj_id(nat.target)
        for t in self.cat.hom(src, tgt):
            if self.nats[t].components == nat.components:
                return t
        raise ValidationError("natural transformation not found in functor category")

    def as_nat(self, mid):
        return self.nats[mid]


def functor_category(shape, base, budget=None, name=None):
    """Materialize base^shape with componentwise composition."""
    budget = budget or DEFAULT_BUDGET
    functors = enumerate_functors(shape, base, budget=budget)
    budget.check_objects("functor category", len(functors))
    return _category_of_diagrams(shape, base, functors, budget,
                                 name or f"{base.name}^{shape.name}")


def _category_of_diagrams(shape, base, functors, budget, name):
    """Build the FinCat on a given (full) family of functors shape -> base."""
    obj_ids = [f"d{k}" for k in range(len(functors))]
    fun_of = dict(zip(obj_ids, functors))
    mors, dom, cod, nat_of = [], {}, {}, {}
    identity = {}
    comp_key = {}
    for i, fi in enumerate(functors):
        for j, fj in enumerate(functors):
            for t in enumerate_nats(fi, fj):
                mid = f"t{len(mors)}"
                mors.append(mid)
                dom[mid], cod[mid] = obj_ids[i], obj_ids[j]
                nat_of[mid] = t
                key = (obj_ids[i], obj_ids[j],
                       tuple(t.components[o] for o in shape.objects))
                comp_key[key] = mid
                if i == j and t.is_identity():
                    identity[obj_ids[i]] = mid
            budget.check_morphisms("functor category", len(mors))
    compose = {}
    for g in mors:
        for f in mors:
            if dom[g] != cod[f]:
                continue
            comps = tuple(base.comp(nat_of[g].components[o], nat_of[f].components[o])
                          for o in shape.objects)
            compose[(g, f)] = comp_key[(dom[f], cod[g], comps)]
    cat = FinCat(name, obj_ids, mors, dom, cod, identity, compose)
    return FunctorCategory(shape, base, cat, fun_of, nat_of)


def constant_diagram_functor(fc):
    """Delta: base -> base^shape sending an object to its constant diagram."""
    shape, base = fc.shape, fc.base
    obj_map = {o: fc.obj_id(Functor.constant(shape, base, o)) for o in base.objects}
    mor_map = {}
    for m in base.morphisms:
        t = NatTrans(fc.functors[obj_map[base.dom[m]]],
                     fc.functors[obj_map[base.cod[m]]],
                     {o: m for o in shape.objects}, check=False)
        mor_map[m] = fc.mor_id(t)
    return Functor(base, fc.cat, obj_map, mor_map, check=False)


def evaluation_functor(fc, j):
    """ev_j: base^shape -> base, evaluation at the shape object j."""
    return Functor(fc.cat, fc.base,
                   {o: fc.functors[o].obj_map[j] for o in fc.cat.objects},
                   {m: fc.nats[m].components[j] for m in fc.cat.morphisms},
                   check=False)


def evaluation_at_mor(fc, j_mor):
    """The transformation ev_dom(j) => ev_cod(j) with components X(j_mor)."""
    shape, base = fc.shape, fc.base
    a, b = shape.dom[j_mor], shape.cod[j_mor]
    return NatTrans(evaluation_functor(fc, a), evaluation_functor(fc, b),
                    {o: fc.functors[o].mor_map[j_mor] for o in fc.cat.objects},
                    check=False)


def postcompose_functor(fc_src, fc_tgt, f):
    """f^shape: base1^shape -> base2^shape, postcomposition with f: base1 -> base2."""
    if not fc_src.shape.same_data(fc_tgt.shape):
        raise ShapeMismatch("postcompose: shapes differ")
    obj_map = {o: fc_tgt.obj_id(fc_src.functors[o].then(f)) for o in fc_src.cat.objects}
    mor_map = {}
    for m in fc_src.cat.morphisms:
        t = fc_src.nats[m]
        mor_map[m] = fc_tgt.mor_id(NatTrans(
            fc_tgt.functors[obj_map[fc_src.cat.dom[m]]],
            fc_tgt.functors[obj_map[fc_src.cat.cod[m]]],
            {o: f.mor_map[t.components[o]] for o in fc_src.shape.objects},
            check=False))
    return Functor(fc_src.cat, fc_tgt.cat, obj_map, mor_map, check=False)


def product_category(c, d, budget=None):
    """c x d with pairwise objects/morphisms and componentwise composition."""
    budget = budget or DEFAULT_BUDGET
    budget.check_objects("product category", len(c.objects) * len(d.objects))
    budget.check_morphisms("product category", len(c.morphisms) * len(d.morphisms))
    objs = [f"({a},{b})" for a in c.objects for b in d.objects]
    mors = [f"({m},{n})" for m in c.morphisms for n in d.morphisms]
    dom = {f"({m},{n})": f"({c.dom[m]},{d.dom[n]})"
           for m in c.morphisms for n in d.morphisms}
    cod = {f"({m},{n})": f"({c.cod[m]},{d.cod[n]})"
           for m in c.morphisms for n in d.morphisms}
    identity = {f"({a},{b})": f"({c.id(a)},{d.id(b)})"
                for a in c.objects for b in d.objects}
    compose = {}
    for m2 in c.morphisms:
        for n2 in d.morphisms:
            for m1 in c.morphisms:
                if c.dom[m2] != c.cod[m1]:
                    continue
                for n1 in d.morphisms:
                    if d.dom[n2] != d.cod[n1]:
                        continue
                    compose[(f"({m2},{n2})", f"({m1},{n1})")] = \
                        f"({c.comp(m2, m1)},{d.comp(n2, n1)})"
    cat = FinCat(f"{c.name}x{d.name}", objs, mors, dom, cod, identity, compose)
    proj1 = Functor(cat, c, {f"({a},{b})": a for a in c.objects for b in d.objects},
                    {f"({m},{n})": m for m in c.morphisms for n in d.morphisms},
                    check=False)
    proj2 = Functor(cat, d, {f"({a},{b})": b for a in c.objects for b in d.objects},
                    {f"({m},{n})": n for m in c.morphisms for n in d.morphisms},
                    check=False)
    return cat, proj1, proj2


def curry_functor(fc_prod, fc_outer, fc_inner, prod_cat, c_shape, d_shape):
    """Iso base^(c x d) -> (base^c)^d as a tabulated functor.

    fc_prod is over prod_cat, fc_inner over c_shape (base fixed), fc_outer is
    (base^c_shape)^d_shape.  Returns the currying functor; its inverse is
    uncurry_functor.
    """
    obj_map, mor_map = {}, {}
    for o in fc_prod.cat.objects:
        x = fc_prod.functors[o]
        curried = _curry_diagram(x, fc_inner, c_shape, d_shape)
        obj_map[o] = fc_outer.obj_id(curried)
    for m in fc_prod.cat.morphisms:
        t = fc_prod.nats[m]
        comps = {}
        for b in d_shape.objects:
            inner = NatTrans(
                fc_inner.functors[fc_outer.functors[obj_map[fc_prod.cat.dom[m]]].obj_map[b]],
                fc_inner.functors[fc_outer.functors[obj_map[fc_prod.cat.cod[m]]].obj_map[b]],
                {a: t.components[f"({a},{b})"] for a in c_shape.objects},
                check=False)
            comps[b] = fc_inner.mor_id(inner)
        outer_nat = NatTrans(fc_outer.functors[obj_map[fc_prod.cat.dom[m]]],
                             fc_outer.functors[obj_map[fc_prod.cat.cod[m]]],
                             comps, check=False)
        mor_map[m] = fc_outer.mor_id(outer_nat)
    return Functor(fc_prod.cat, fc_outer.cat, obj_map, mor_map, check=False)


def _curry_diagram(x, fc_inner, c_shape, d_shape):
    """x: c x d -> base as a functor d -> base^c."""
    obj_map, mor_map = {}, {}
    for b in d_shape.objects:
        slice_f = Functor(c_shape, fc_inner.base,
                          {a: x.obj_map[f"({a},{b})"] for a in c_shape.objects},
                          {m: x.mor_map[f"({m},{d_shape.id(b)})"]
                           for m in c_shape.morphisms}, check=False)
        obj_map[b] = fc_inner.obj_id(slice_f)
    for n in d_shape.morphisms:
        a0, b0 = d_shape.dom[n], d_shape.cod[n]
        t = NatTrans(fc_inner.functors[obj_map[a0]], fc_inner.functors[obj_map[b0]],
                     {a: x.mor_map[f"({c_shape.id(a)},{n})"] for a in c_shape.objects},
                     check=False)
        mor_map[n] = fc_inner.mor_id(t)
    return Functor(d_shape, fc_inner.cat, obj_map, mor_map, check=False)


def postcompose_nat(fc_src, fc_tgt, t):
    """t^shape: f^shape => g^shape for a transformation t: f => g of bases."""
    f_up = postcompose_functor(fc_src, fc_tgt, t.source)
    g_up = postcompose_functor(fc_src, fc_tgt, t.target)
    comps = {}
    for o in fc_src.cat.objects:
        x = fc_src.functors[o]
        comps[o] = fc_tgt.mor_id(NatTrans(
            fc_tgt.functors[f_up.obj_map[o]], fc_tgt.functors[g_up.obj_map[o]],
            {i: t.components[x.obj_map[i]] for i in fc_src.shape.objects},
            check=False))
    return NatTrans(f_up, g_up, comps, check=False)


def invert_functor(f):
    """The inverse of an isomorphism of categories."""
    assert len(set(f.obj_map.values())) == len(f.source.objects)
    assert len(set(f.mor_map.values())) == len(f.source.morphisms)
    return Functor(f.target, f.source,
                   {v: k for k, v in f.obj_map.items()},
                   {v: k for k, v in f.mor_map.items()}, check=False)


def is_preorder(c):
    return all(len(c.hom(a, b)) <= 1 for a in c.objects for b in c.objects)


def terminal_objects(c):
    return [t for t in c.objects
            if all(len(c.hom(x, t)) == 1 for x in c.objects)]


def initial_objects(c):
    return [t for t in c.objects
            if all(len(c.hom(t, x)) == 1 for x in c.objects)]


def find_category_isomorphism(c, d):
    """Search an isomorphism of categories c ~ d; None when there is none."""
    if (len(c.objects) != len(d.objects)
            or len(c.morphisms) != len(d.morphisms)):
        return None
    for f in enumerate_functors(c, d):
        if len(set(f.obj_map.values())) != len(c.objects):
            continue
        if len(set(f.mor_map.values())) != len(c.morphisms):
            continue
        return f
    return None


def functor_isos(f, g):
    """All natural isomorphisms f => g (ordered)."""
    return [t for t in enumerate_nats(f, g) if t.is_iso()]
