"""The line-oriented description format and workspaces.

Grammar ('#' starts a comment, blank lines ignored):

    category <name>
      object <id>
      morphism <id> : <dom> -> <cod>
      compose <g> . <f> = <h>
    end
    relcat <name> from <category>
      weq <mor-id>
    end
    functor <name> : <src> -> <tgt>
      obj <a> |-> <x>
      mor <f> |-> <g>
    end
    nat <name> : <F> => <G>
      at <obj> = <mor>
    end
    adjunction <name> = <F> -| <G> unit <nat> counit <nat>
    retraction <name> on <relcat> sub <obj>... Q { a |-> b ; f |-> g } q { a = <mor> }

Identities are auto-named id_<obj> and their composition entries filled in,
unless the table already determines an identity for the object.  Relative
categories always absorb isomorphisms into their weak equivalences.
"""

from .adjunction import verify_adjunction
from .core import Functor, NatTrans, validate_category
from .derived import validate_retraction
from .errors import ParseError, ValidationError
from .localization import RelCat


class Workspace:
    """Named categories, relative categories, functors, transformations,
    adjunctions and retractions, with all cross-references resolved."""

    def __init__(self):
        self.categories = {}
        self.relcats = {}
        self.functors = {}
        self.nats = {}
        self.adjunctions = {}
        self.retractions = {}

    def category(self, name):
        if name in self.categories:
            return self.categories[name]
        raise ValidationError(f"unknown category {name!r}")

    def relcat(self, name):
        if name in self.relcats:
            return self.relcats[name]
        raise ValidationError(f"unknown relative category {name!r}")


def _tokens(line):
    if "#" in line:
        line = line[:line.index("#")]
    return line.split()


def parse(text):
    """Parse one description file into a validated Workspace."""
    ws = Workspace()
    lines = text.splitlines()
    i = 0
    n = len(lines)

    def err(lineno, msg):
        raise ParseError(lineno + 1, msg)

    while i < n:
        toks = _tokens(lines[i])
        if not toks:
            i += 1
            continue
        head = toks[0]
        if head == "category":
            if len(toks) != 2:
                err(i, "category needs exactly a name")
            i = _parse_category(ws, lines, i, toks[1], err)
        elif head == "relcat":
            if len(toks) != 4 or toks[2] != "from":
                err(i, "expected: relcat <name> from <category>")
            i = _parse_relcat(ws, lines, i, toks[1], toks[3], err)
        elif head == "functor":
            if len(toks) != 6 or toks[2] != ":" or toks[4] != "->":
                err(i, "expected: functor <name> : <src> -> <tgt>")
            i = _parse_functor(ws, lines, i, toks[1], toks[3], toks[5], err)
        elif head == "nat":
            if len(toks) != 6 or toks[2] != ":" or toks[4] != "=>":
                err(i, "expected: nat <name> : <F> => <G>")
            i = _parse_nat(ws, lines, i, toks[1], toks[3], toks[5], err)
        elif head == "adjunction":
            _parse_adjunction(ws, toks, i, err)
            i += 1
        elif head == "retraction":
            i = _parse_retraction(ws, lines, i, err)
        else:
            err(i, f"unknown declaration {head!r}")
    return ws


def _block(lines, start, err):
    """Collect statement lines until the matching 'end'."""
    body = []
    i = start + 1
    while i < len(lines):
        toks = _tokens(lines[i])
        if toks == ["end"]:
            return body, i + 1
        if toks:
            body.append((i, toks))
        i += 1
    err(start, "unterminated block (missing 'end')")


def _parse_category(ws, lines, start, name, err):
    if name in ws.categories:
        err(start, f"duplicate category {name!r}")
    body, nxt = _block(lines, start, err)
    objects, morphisms = [], []
    dom, cod, compose = {}, {}, {}
    for lineno, toks in body:
        if toks[0] == "object" and len(toks) == 2:
            objects.append(toks[1])
        elif toks[0] == "morphism":
            if len(toks) != 6 or toks[2] != ":" or toks[4] != "->":
                err(lineno, "expected: morphism <id> : <dom> -> <cod>")
            morphisms.append(toks[1])
            dom[toks[1]], cod[toks[1]] = toks[3], toks[5]
        elif toks[0] == "compose":
            if len(toks) != 7 or toks[2] != "." or toks[5] != "=":
                err(lineno, "expected: compose <g> . <f> = <h>")
            compose[(toks[1], toks[3])] = toks[6]
        else:
            err(lineno, f"unexpected {toks[0]!r} in category block")
    identity = _infer_identities(objects, morphisms, dom, cod, compose)
    for o in objects:
        if o not in identity:
            i_id = f"id_{o}"
            if i_id in dom:
                raise ParseError(start + 1,
                                 f"{i_id} exists but is not an identity")
            morphisms.append(i_id)
            dom[i_id], cod[i_id] = o, o
            identity[o] = i_id
    _fill_identity_composites(morphisms, dom, cod, identity, compose)
    try:
        cat = validate_category(name, objects, morphisms, dom, cod, identity,
                                compose)
    except ValidationError as exc:
        raise type(exc)(f"category {name!r}: {exc}") from exc
    ws.categories[name] = cat
    return nxt


def _infer_identities(objects, morphisms, dom, cod, compose):
    """Morphisms the declared table already proves to be identities."""
    identity = {}
    for o in objects:
        for e in morphisms:
            if dom[e] != o or cod[e] != o:
                continue
            if compose.get((e, e)) != e:
                continue
            into = [f for f in morphisms if cod[f] == o]
            outof = [g for g in morphisms if dom[g] == o]
            if (all(compose.get((e, f)) == f for f in into)
                    and all(compose.get((g, e)) == g for g in outof)):
                identity[o] = e
                break
    for o in objects:
        if f"id_{o}" in dom and o not in identity:
            identity[o] = f"id_{o}"
    return identity


def _fill_identity_composites(morphisms, dom, cod, identity, compose):
    for m in morphisms:
        compose.setdefault((m, identity[dom[m]]), m)
        compose.setdefault((identity[cod[m]], m), m)


def _parse_relcat(ws, lines, start, name, catname, err):
    if name in ws.relcats:
        err(start, f"duplicate relcat {name!r}")
    body, nxt = _block(lines, start, err)
    cat = ws.category(catname)
    weq = []
    for lineno, toks in body:
        if toks[0] != "weq" or len(toks) < 2:
            err(lineno, "expected: weq <mor-id>...")
        weq.extend(toks[1:])
    try:
        ws.relcats[name] = RelCat(cat, weq, name=name)
    except ValidationError as exc:
        raise type(exc)(f"relcat {name!r}: {exc}") from exc
    return nxt


def _parse_functor(ws, lines, start, name, src, tgt, err):
    if name in ws.functors:
        err(start, f"duplicate functor {name!r}")
    body, nxt = _block(lines, start, err)
    c, d = ws.category(src), ws.category(tgt)
    obj_map, mor_map = {}, {}
    for lineno, toks in body:
        if len(toks) != 4 or toks[2] != "|->":
            err(lineno, "expected: obj/mor <x> |-> <y>")
        if toks[0] == "obj":
            obj_map[toks[1]] = toks[3]
        elif toks[0] == "mor":
            mor_map[toks[1]] = toks[3]
        else:
            err(lineno, f"unexpected {toks[0]!r} in functor block")
    for o in c.objects:
        if o in obj_map:
            mor_map.setdefault(c.id(o), d.identity.get(obj_map[o]))
    try:
        ws.functors[name] = Functor(c, d, obj_map, mor_map)
    except ValidationError as exc:
        raise type(exc)(f"functor {name!r}: {exc}") from exc
    return nxt


def _parse_nat(ws, lines, start, name, fname, gname, err):
    if name in ws.nats:
        err(start, f"duplicate nat {name!r}")
    body, nxt = _block(lines, start, err)
    if fname not in ws.functors or gname not in ws.functors:
        err(start, f"nat {name!r} references an unknown functor")
    comps = {}
    for lineno, toks in body:
        if len(toks) != 4 or toks[0] != "at" or toks[2] != "=":
            err(lineno, "expected: at <obj> = <mor>")
        comps[toks[1]] = toks[3]
    try:
        ws.nats[name] = NatTrans(ws.functors[fname], ws.functors[gname], comps)
    except ValidationError as exc:
        raise type(exc)(f"nat {name!r}: {exc}") from exc
    return nxt


def _parse_adjunction(ws, toks, lineno, err):
    want = ["adjunction", None, "=", None, "-|", None, "unit", None,
            "counit", None]
    if len(toks) != len(want) or any(
            w is not None and t != w for t, w in zip(toks, want)):
        err(lineno, "expected: adjunction <name> = <F> -| <G> "
                    "unit <nat> counit <nat>")
    name, fname, gname, unit, counit = toks[1], toks[3], toks[5], toks[7], toks[9]
    if name in ws.adjunctions:
        err(lineno, f"duplicate adjunction {name!r}")
    for ref, kind in ((fname, "functor"), (gname, "functor"),
                      (unit, "nat"), (counit, "nat")):
        table = ws.functors if kind == "functor" else ws.nats
        if ref not in table:
            err(lineno, f"adjunction {name!r} references unknown {kind} {ref!r}")
    try:
        ws.adjunctions[name] = verify_adjunction(
            ws.functors[fname], ws.functors[gname], ws.nats[unit],
            ws.nats[counit])
    except ValidationError as exc:
        raise type(exc)(f"adjunction {name!r}: {exc}") from exc


def _parse_retraction(ws, lines, start, err):
    toks = _tokens(lines[start])
    i = start
    while toks.count("{") != toks.count("}") or toks.count("{") < 2:
        i += 1
        if i >= len(lines):
            err(start, "unterminated retraction statement")
        toks.extend(_tokens(lines[i]))
    if len(toks) < 6 or toks[2] != "on" or toks[4] != "sub":
        err(start, "expected: retraction <name> on <relcat> sub <obj>... "
                   "Q { ... } q { ... }")
    name = toks[1]
    rc = ws.relcat(toks[3])
    if name in ws.retractions:
        err(start, f"duplicate retraction {name!r}")
    k = 5
    sub = []
    while k < len(toks) and toks[k] != "Q":
        sub.append(toks[k])
        k += 1
    q_entries, k = _brace_entries(toks, k + 1, start, err)
    if k >= len(toks) or toks[k] != "q":
        err(start, "retraction needs the q { ... } block")
    r_entries, k = _brace_entries(toks, k + 1, start, err)
    q_obj, q_mor = {}, {}
    for entry in q_entries:
        if len(entry) != 3 or entry[1] != "|->":
            err(start, "Q entries look like: x |-> y")
        if entry[0] in rc.cat.identity:
            q_obj[entry[0]] = entry[2]
        else:
            q_mor[entry[0]] = entry[2]
    q = {}
    for entry in r_entries:
        if len(entry) != 3 or entry[1] != "=":
            err(start, "q entries look like: a = mor")
        q[entry[0]] = entry[2]
    for o in rc.cat.objects:
        q_mor.setdefault(rc.cat.id(o), rc.cat.id(q_obj.get(o, o)))
    try:
        ws.retractions[name] = validate_retraction(rc, sub, q_obj, q_mor, q)
    except ValidationError as exc:
        raise type(exc)(f"retraction {name!r}: {exc}") from exc
    return i + 1


def _brace_entries(toks, k, lineno, err):
    if k >= len(toks) or toks[k] != "{":
        err(lineno, "expected '{'")
    k += 1
    entries, cur = [], []
    while k < len(toks) and toks[k] != "}":
        if toks[k] == ";":
            if cur:
                entries.append(cur)
            cur = []
        else:
            cur.append(toks[k])
        k += 1
    if k >= len(toks):
        err(lineno, "unterminated '{'")
    if cur:
        entries.append(cur)
    return entries, k + 1


# -- serialization ------------------------------------------------------------


def serialize_category(cat):
    out = [f"category {cat.name}"]
    for o in cat.objects:
        out.append(f"  object {o}")
    for m in cat.morphisms:
        out.append(f"  morphism {m} : {cat.dom[m]} -> {cat.cod[m]}")
    for (g, f), h in sorted(cat.compose.items()):
        out.append(f"  compose {g} . {f} = {h}")
    out.append("end")
    return "\n".join(out)


def serialize(ws):
    """Emit a workspace in the text format (deterministic order)."""
    chunks = []
    for name in ws.categories:
        cat = ws.categories[name]
        text = serialize_category(cat)
        if cat.name != name:
            text = text.replace(f"category {cat.name}", f"category {name}", 1)
        chunks.append(text)
    for name, rc in ws.relcats.items():
        lines = [f"relcat {name} from {_catname(ws, rc.cat)}"]
        for w in rc.weq_list:
            lines.append(f"  weq {w}")
        lines.append("end")
        chunks.append("\n".join(lines))
    for name, f in ws.functors.items():
        lines = [f"functor {name} : {_catname(ws, f.source)} -> "
                 f"{_catname(ws, f.target)}"]
        for o in f.source.objects:
            lines.append(f"  obj {o} |-> {f.obj_map[o]}")
        for m in f.source.morphisms:
            if not f.source.is_identity(m):
                lines.append(f"  mor {m} |-> {f.mor_map[m]}")
        lines.append("end")
        chunks.append("\n".join(lines))
    for name, t in ws.nats.items():
        fname = _functorname(ws, t.source)
        gname = _functorname(ws, t.target)
        lines = [f"nat {name} : {fname} => {gname}"]
        for o in t.source.source.objects:
            lines.append(f"  at {o} = {t.components[o]}")
        lines.append("end")
        chunks.append("\n".join(lines))
    for name, adj in ws.adjunctions.items():
        chunks.append(
            f"adjunction {name} = {_functorname(ws, adj.left)} -| "
            f"{_functorname(ws, adj.right)} unit {_natname(ws, adj.unit)} "
            f"counit {_natname(ws, adj.counit)}")
    for name, ret in ws.retractions.items():
        qs = " ; ".join([f"{o} |-> {ret.q_obj[o]}" for o in ret.rc.cat.objects]
                        + [f"{m} |-> {ret.q_mor[m]}"
                           for m in ret.rc.cat.morphisms
                           if not ret.rc.cat.is_identity(m)])
        rs = " ; ".join(f"{o} = {ret.q[o]}" for o in ret.rc.cat.objects)
        chunks.append(f"retraction {name} on {_relcatname(ws, ret.rc)} "
                      f"sub {' '.join(ret.sub_objects)} "
                      f"Q {{ {qs} }} q {{ {rs} }}")
    return "\n\n".join(chunks) + "\n"


def _catname(ws, cat):
    for name, c in ws.categories.items():
        if c is cat or c.same_data(cat):
            return name
    raise ValidationError(f"category {cat.name!r} is not in the workspace")


def _relcatname(ws, rc):
    for name, r in ws.relcats.items():
        if r is rc:
            return name
    raise ValidationError("relative category is not in the workspace")


def _functorname(ws, f):
    for name, g in ws.functors.items():
        if g is f or g == f:
            return name
    raise ValidationError("functor is not in the workspace")


def _natname(ws, t):
    for name, s in ws.nats.items():
        if s is t or s == t:
            return name
    raise ValidationError("transformation is not in the workspace")
