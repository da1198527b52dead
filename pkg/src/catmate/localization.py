"""Relative categories and strict localizations by bounded congruence closure.

A morphism of Ho C is an equivalence class of zig-zag words: formal
composites of morphisms of C and formal inverses of weak equivalences.  The
closure is run as a saturation of generator actions on word classes: nodes
are classes of words out of a fixed source object, generators act partially,
and the composition table, the cancellation rules w . w^-1 = id = w^-1 . w
and the identity rules are enforced as merge constraints.  A saturated,
total fixpoint assembled into a validated category is a strict localization:
any functor inverting the weak equivalences evaluates representative words
consistently (every merge is an equation valid in its target), which gives
the unique factorization.  If the table cannot be completed within the word
length bound, the honest answer is status "undecided".
"""

from .core import Functor, NatTrans, functor_category, validate_category
from .errors import (
    NoInitialObject, NotHomotopical, UndecidedLocalization, ValidationError,
)

INV = "^-1"


def inv_letter(m):
    return m + INV


def is_inv(letter):
    return letter.endswith(INV)


def base_mor(letter):
    return letter[:-len(INV)] if is_inv(letter) else letter


class RelCat:
    """A category with a distinguished class of weak equivalences.

    Identities and isomorphisms are always added (they do not change the
    localization); nothing else is closed up by default.
    """

    def __init__(self, cat, weq, name=None):
        weq = set(weq)
        for w in weq:
            if w not in cat.dom:
                raise ValidationError(f"weak equivalence {w} is not a morphism")
        weq.update(cat.identity.values())
        weq.update(cat.isos())
        self.cat = cat
        self.weq = frozenset(weq)
        self.weq_list = tuple(m for m in cat.morphisms if m in weq)
        self.name = name or cat.name

    def is_weq(self, m):
        return m in self.weq

    def __repr__(self):
        return f"RelCat({self.name!r}, |W|={len(self.weq)})"


def saturate_two_out_of_three(rc):
    """Close W under 2-out-of-3 (optional; off by default everywhere)."""
    weq = set(rc.weq)
    changed = True
    while changed:
        changed = False
        for (g, f), h in rc.cat.compose.items():
            known = (f in weq) + (g in weq) + (h in weq)
            if known == 2:
                weq.update((f, g, h))
                changed = True
    return RelCat(rc.cat, weq, name=rc.name + "_2of3")


def is_homotopical(f, src, tgt):
    """Whether f preserves weak equivalences, checked exhaustively."""
    return all(f.mor_map[w] in tgt.weq for w in src.weq)


class LocalizationResult:
    """A computed Ho C: quotient category, comparison functor and normal
    forms, or an honest undecided status at the explored bound."""

    def __init__(self, rc, status, bound, ho=None, h=None, normal_forms=None):
        self.rc = rc
        self.status = status
        self.bound = bound
        self.ho = ho
        self.h = h
        self.normal_forms = normal_forms or {}

    @property
    def exact(self):
        return self.status == "exact"

    def require_exact(self):
        if not self.exact:
            raise UndecidedLocalization(
                f"localization of {self.rc.name} undecided at bound {self.bound}")

    def apply_letter(self, letter, cls):
        cat = self.rc.cat
        if is_inv(letter):
            w = base_mor(letter)
            if cat.is_iso(w):
                return self.ho.comp(self.h.mor_map[cat.inverse(w)], cls)
            if w not in self.rc.weq:
                raise ValidationError(f"{letter}: {w} is not a weak equivalence")
            return self.ho.comp(self.ho.inverse(self.h.mor_map[w]), cls)
        return self.ho.comp(self.h.mor_map[letter], cls)

    def fold(self, word, src):
        """Normal form of a zig-zag word (letters in composition order)."""
        self.require_exact()
        cur = self.ho.id(src)
        for letter in reversed(tuple(word)):
            cur = self.apply_letter(letter, cur)
        return cur

    normal_form = fold

    def __repr__(self):
        return f"LocalizationResult({self.rc.name!r}, {self.status})"


def default_bound(cat):
    return 2 * len(cat.morphisms) + 4


def localize(rc, bound=None, max_nodes=20000):
    """Compute the strict localization of rc, or undecided at the bound."""
    cat = rc.cat
    if bound is None:
        bound = default_bound(cat)

    letters = list(cat.morphisms)
    letters += [inv_letter(w) for w in rc.weq_list if not cat.is_iso(w)]

    def letter_dom(a):
        return cat.cod[base_mor(a)] if is_inv(a) else cat.dom[base_mor(a)]

    def letter_cod(a):
        return cat.dom[base_mor(a)] if is_inv(a) else cat.cod[base_mor(a)]

    letters_by_dom = {}
    for a in letters:
        letters_by_dom.setdefault(letter_dom(a), []).append(a)
    pairs_by_dom = {}
    for (g, f) in cat.compose:
        pairs_by_dom.setdefault(cat.dom[f], []).append((g, f))
    invertibles = [w for w in rc.weq_list if not cat.is_iso(w)]

    words, src, cods, parent = [], [], [], []

    def new_node(word, s, c):
        k = len(parent)
        words.append(word)
        src.append(s)
        cods.append(c)
        parent.append(k)
        return k

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    action = {}
    state = {"changed": True, "overflow": False}

    def merge(i, j):
        i, j = find(i), find(j)
        if i == j:
            return
        assert src[i] == src[j] and cods[i] == cods[j]
        if (len(words[j]), words[j]) < (len(words[i]), words[i]):
            i, j = j, i
        parent[j] = i
        state["changed"] = True

    def get(a, n):
        t = action.get((a, find(n)))
        return None if t is None else find(t)

    def define(a, n, target):
        key = (a, find(n))
        cur = action.get(key)
        if cur is None:
            action[key] = find(target)
            state["changed"] = True
        else:
            merge(cur, target)

    def apply_or_create(a, n):
        n = find(n)
        cur = action.get((a, n))
        if cur is not None:
            return find(cur)
        w = (a,) + words[n]
        if len(w) > bound or len(parent) >= max_nodes:
            state["overflow"] = True
            return None
        node = new_node(w, src[n], letter_cod(a))
        action[(a, n)] = node
        state["changed"] = True
        return node

    def canonicalize():
        fresh = {}
        for (a, n), t in action.items():
            key = (a, find(n))
            rt = find(t)
            if key in fresh:
                merge(fresh[key], rt)
                fresh[key] = find(fresh[key])
            else:
                fresh[key] = rt
        action.clear()
        action.update(fresh)

    for o in cat.objects:
        new_node((), o, o)
    base = {o: i for i, o in enumerate(cat.objects)}

    while state["changed"]:
        state["changed"] = False
        canonicalize()
        live = sorted({find(i) for i in range(len(parent))},
                      key=lambda i: (len(words[i]), words[i]))
        for n in live:
            for a in letters_by_dom.get(cods[find(n)], ()):
                apply_or_create(a, n)
        for n in live:
            n = find(n)
            x = get(cat.id(cods[n]), n)
            if x is not None:
                merge(x, n)
            for (g, f) in pairs_by_dom.get(cods[n], ()):
                xf = get(f, n)
                if xf is None:
                    continue
                xg = get(g, xf)
                xh = get(cat.comp(g, f), n)
                if xg is not None and xh is not None:
                    merge(xg, xh)
                elif xg is not None:
                    define(cat.comp(g, f), n, xg)
                elif xh is not None:
                    define(g, xf, xh)
            for w in invertibles:
                wi = inv_letter(w)
                if cat.dom[w] == cods[n]:
                    x = get(w, n)
                    if x is not None:
                        y = get(wi, x)
                        if y is None:
                            define(wi, x, n)
                        else:
                            merge(y, n)
                if cat.cod[w] == cods[n]:
                    x = get(wi, n)
                    if x is not None:
                        y = get(w, x)
                        if y is None:
                            define(w, x, n)
                        else:
                            merge(y, n)

    canonicalize()
    roots = {find(i) for i in range(len(parent))}
    total = not state["overflow"]
    for n in roots:
        for a in letters_by_dom.get(cods[n], ()):
            if get(a, n) is None:
                total = False
    if not total:
        return LocalizationResult(rc, "undecided", bound)

    rep = {}
    for i in range(len(parent)):
        r = find(i)
        if r not in rep or (len(words[i]), words[i]) < (len(rep[r]), rep[r]):
            rep[r] = words[i]

    obj_index = {o: k for k, o in enumerate(cat.objects)}
    order = sorted(roots, key=lambda r: (obj_index[src[r]], obj_index[cods[r]],
                                         len(rep[r]), rep[r]))
    mor_ids = {r: f"z{k}" for k, r in enumerate(order)}

    def fold_root(word, start):
        cur = find(start)
        for a in reversed(word):
            cur = find(action[(a, cur)])
        return cur

    dom = {mor_ids[r]: src[r] for r in order}
    cod = {mor_ids[r]: cods[r] for r in order}
    identity = {o: mor_ids[find(base[o])] for o in cat.objects}
    compose = {}
    for rg in order:
        for rf in order:
            if src[rg] != cods[rf]:
                continue
            compose[(mor_ids[rg], mor_ids[rf])] = mor_ids[fold_root(rep[rg], rf)]

    ho = validate_category(f"Ho_{rc.name}", cat.objects,
                           [mor_ids[r] for r in order], dom, cod, identity,
                           compose)
    h = Functor(cat, ho, {o: o for o in cat.objects},
                {m: mor_ids[fold_root((m,), base[cat.dom[m]])]
                 for m in cat.morphisms})
    for w in rc.weq_list:
        if not ho.is_iso(h.mor_map[w]):
            raise ValidationError(f"localization failed to invert {w}")
    return LocalizationResult(rc, "exact", bound, ho=ho, h=h,
                              normal_forms={mor_ids[r]: rep[r] for r in order})


def ho_functor(f, src_loc, tgt_loc):
    """The induced functor Ho f between exact localizations.

    Requires f homotopical; satisfies Ho f . H_src = H_tgt . f strictly and
    is strictly functorial in f.
    """
    src_loc.require_exact()
    tgt_loc.require_exact()
    if not is_homotopical(f, src_loc.rc, tgt_loc.rc):
        bad = next(w for w in src_loc.rc.weq
                   if f.mor_map[w] not in tgt_loc.rc.weq)
        raise NotHomotopical(bad)
    obj_map = {o: f.obj_map[o] for o in src_loc.ho.objects}
    mor_map = {}
    for z, word in src_loc.normal_forms.items():
        mapped = tuple(
            inv_letter(f.mor_map[base_mor(a)]) if is_inv(a) else f.mor_map[a]
            for a in word)
        mor_map[z] = tgt_loc.fold(mapped, f.obj_map[src_loc.ho.dom[z]])
    return Functor(src_loc.ho, tgt_loc.ho, obj_map, mor_map, check=False)


def ho_nat(t, src_loc, tgt_loc):
    """Componentwise lift of a transformation to the homotopy categories."""
    fs = ho_functor(t.source, src_loc, tgt_loc)
    ft = ho_functor(t.target, src_loc, tgt_loc)
    return NatTrans(fs, ft,
                    {o: tgt_loc.h.mor_map[t.components[o]]
                     for o in src_loc.ho.objects}, check=False)


def check_initial_preserved(rc, loc):
    """A localization sends an initial object to an initial object."""
    loc.require_exact()
    cat = rc.cat
    initials = [o for o in cat.objects
                if all(len(cat.hom(o, x)) == 1 for x in cat.objects)]
    if not initials:
        raise NoInitialObject(f"{rc.name} has no initial object")
    h0 = loc.h.obj_map[initials[0]]
    return all(len(loc.ho.hom(h0, x)) == 1 for x in loc.ho.objects)


def pointwise_relcat(rc, shape, budget=None):
    """The diagram relative category rc^shape with pointwise weak equivalences."""
    fc = functor_category(shape, rc.cat, budget=budget,
                          name=f"{rc.name}^{shape.name}")
    weq = [m for m in fc.cat.morphisms
           if all(c in rc.weq for c in fc.nats[m].components.values())]
    return RelCat(fc.cat, weq, name=f"{rc.name}^{shape.name}"), fc
