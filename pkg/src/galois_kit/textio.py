"""Self-describing text formats and the named-entity workspace.

Every value kind has a one-line (or block) rendering that parses back
to an equal value; files start with the versioned header "galois-kit
v1" and may contain '#' comments.  Serialization is deterministic:
identical values produce identical bytes.
"""

import re

from .errors import GaloisKitError
from .extnat import format_extnat, parse_extnat
from .operations import Operation, OperationClass
from .multisets import FiniteMultiset, TupleMatrix
from .repetition import RepetitionFunction
from .constraints import GeneralizedConstraint
from .minors import MinorScheme
from .clusters import BoxedGenerator, Cluster

__all__ = [
    "HEADER",
    "Workspace",
    "format_class",
    "format_cluster",
    "format_constraint",
    "format_matrix",
    "format_multiset",
    "format_operation",
    "format_rf",
    "format_scheme",
    "parse_workspace",
    "parse_workspace_file",
]

HEADER = "galois-kit v1"

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


class Workspace:
    """Named, validated entities parsed from one or more input files."""

    KINDS = ("operation", "class", "multiset", "matrix", "rf", "constraint",
             "scheme", "cluster")

    def __init__(self):
        self.entities = {kind: {} for kind in self.KINDS}

    def add(self, kind, name, value):
        if kind not in self.entities:
            raise GaloisKitError(f"unknown entity kind {kind!r}")
        if name in self.entities[kind]:
            raise GaloisKitError(f"duplicate {kind} name {name!r}")
        self.entities[kind][name] = value

    def get(self, kind, name):
        try:
            return self.entities[kind][name]
        except KeyError:
            raise GaloisKitError(f"no {kind} named {name!r}") from None

    def names(self, kind):
        return sorted(self.entities[kind])


def _parse_ints(tokens):
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as e:
        raise GaloisKitError(f"expected integers, got {tokens!r}") from e


def _kv(token, key):
    if not token.startswith(key + "="):
        raise GaloisKitError(f"expected {key}=..., got {token!r}")
    return token[len(key) + 1:]


# --- operations ---

def format_operation(name, op):
    k = str(op.domain_size)
    if op.codomain_size != op.domain_size:
        k += f",{op.codomain_size}"
    vals = " ".join(str(v) for v in op.table)
    return f"op {name} k={k} arity={op.arity} : {vals}"


def _parse_operation(body):
    # body: <name> k=<k>[,<k_out>] arity=<n> : v_0 v_1 ...
    head, sep, vals = body.partition(":")
    if not sep:
        raise GaloisKitError("op line needs ':' before the value table")
    tokens = head.split()
    if len(tokens) != 3:
        raise GaloisKitError(f"malformed op line head {head!r}")
    name = tokens[0]
    ks = _kv(tokens[1], "k").split(",")
    k_in = int(ks[0])
    k_out = int(ks[1]) if len(ks) > 1 else k_in
    arity = int(_kv(tokens[2], "arity"))
    table = _parse_ints(vals.split())
    return name, Operation(k_in, k_out, arity, table)


def format_class(name, cls_):
    lines = [f"class {name} {{"]
    for i, op in enumerate(cls_):
        lines.append("  " + format_operation(f"{name}.{i}", op))
    lines.append("}")
    return "\n".join(lines)


# --- multisets and matrices ---

def format_multiset(name, s):
    entries = " ; ".join(
        " ".join(str(x) for x in t) + f" * {c}"
        for t, c in sorted(s.counts.items())
    )
    return f"ms {name} arity={s.arity} {{ {entries} }}".replace("{  }", "{ }")


def _parse_multiset(body):
    m = re.match(r"^(\S+)\s+arity=(\d+)\s*\{(.*)\}\s*$", body)
    if not m:
        raise GaloisKitError(f"malformed ms line {body!r}")
    name, arity, inner = m.group(1), int(m.group(2)), m.group(3)
    counts = {}
    for entry in filter(None, (e.strip() for e in inner.split(";"))):
        left, sep, count = entry.rpartition("*")
        if not sep:
            raise GaloisKitError(f"ms entry {entry!r} needs '* <count>'")
        t = _parse_ints(left.split())
        counts[t] = counts.get(t, 0) + int(count)
    return name, FiniteMultiset(arity, counts)


def format_matrix(name, mat):
    cols = " ".join(
        "col(" + " ".join(str(x) for x in c) + ")" for c in mat.columns
    )
    return (
        f"mat {name} rows={mat.row_count} cols={mat.column_count} : {cols}"
    ).rstrip()


def _parse_matrix(body):
    head, sep, rest = body.partition(":")
    if not sep:
        raise GaloisKitError("mat line needs ':' before the columns")
    tokens = head.split()
    if len(tokens) != 3:
        raise GaloisKitError(f"malformed mat line head {head!r}")
    name = tokens[0]
    rows = int(_kv(tokens[1], "rows"))
    cols = int(_kv(tokens[2], "cols"))
    columns = [
        _parse_ints(m.group(1).split())
        for m in re.finditer(r"col\(([^()]*)\)", rest)
    ]
    if len(columns) != cols:
        raise GaloisKitError(
            f"mat declares cols={cols} but lists {len(columns)} columns"
        )
    return name, TupleMatrix(rows, tuple(columns))


# --- repetition functions ---

def _format_rf_body(phi, with_shape=True):
    parts = []
    if with_shape:
        parts.append(f"arity={phi.arity} k={phi.domain_size}")
    parts.append(f"default={format_extnat(phi.default)}")
    entries = " ; ".join(
        " ".join(str(x) for x in t) + f" -> {format_extnat(v)}"
        for t, v in sorted(phi.exceptions.items())
    )
    parts.append("{ " + entries + " }" if entries else "{ }")
    return " ".join(parts)


def format_rf(name, phi):
    return f"rf {name} {_format_rf_body(phi)}"


def _parse_rf_body(body, arity=None, k=None):
    m = re.match(r"^(.*?)\{(.*)\}\s*$", body, re.DOTALL)
    if not m:
        raise GaloisKitError(f"malformed rf body {body!r}")
    head, inner = m.group(1).split(), m.group(2)
    default = 0
    for token in head:
        key, sep, val = token.partition("=")
        if not sep:
            raise GaloisKitError(f"unexpected token {token!r} in rf head")
        if key == "arity":
            arity = int(val)
        elif key == "k":
            k = int(val)
        elif key == "default":
            default = parse_extnat(val)
        else:
            raise GaloisKitError(f"unknown rf field {key!r}")
    if arity is None or k is None:
        raise GaloisKitError("rf needs arity= and k= (here or from context)")
    exceptions = {}
    for entry in filter(None, (e.strip() for e in inner.split(";"))):
        left, sep, val = entry.rpartition("->")
        if not sep:
            raise GaloisKitError(f"rf entry {entry!r} needs '-> <value>'")
        exceptions[_parse_ints(left.split())] = parse_extnat(val.strip())
    return RepetitionFunction(arity, k, default, exceptions)


def _parse_rf(body):
    name, _, rest = body.partition(" ")
    if not name:
        raise GaloisKitError("rf line needs a name")
    return name, _parse_rf_body(rest)


def _rf_field(text, workspace, arity=None, k=None):
    """rf=@name reference or rf=[inline body]."""
    if text.startswith("@"):
        if workspace is None:
            raise GaloisKitError("rf reference used outside a workspace")
        return workspace.get("rf", text[1:])
    if text.startswith("[") and text.endswith("]"):
        return _parse_rf_body(text[1:-1], arity, k)
    raise GaloisKitError(f"rf field must be @name or [inline], got {text!r}")


# --- constraints ---

def format_constraint(name, c):
    tuples = ", ".join(
        "(" + " ".join(str(x) for x in t) + ")" for t in sorted(c.consequent)
    )
    body = _format_rf_body(c.antecedent)
    k_out = f" k_out={c.codomain_size}" if c.codomain_size != c.domain_size else ""
    return (
        f"constraint {name} : rf=[{body}]{k_out} consequent={{ {tuples} }}"
        .replace("{  }", "{ }")
    )


def _parse_constraint(body, workspace):
    m = re.match(
        r"^(\S+)\s*:\s*rf=(@\S+|\[.*\])\s*(?:k_out=(\d+)\s*)?"
        r"consequent=\{(.*)\}\s*$",
        body,
        re.DOTALL,
    )
    if not m:
        raise GaloisKitError(f"malformed constraint line {body!r}")
    name, rf_text, k_out, inner = m.groups()
    phi = _rf_field(rf_text, workspace)
    tuples = [
        _parse_ints(t.group(1).split())
        for t in re.finditer(r"\(([^()]*)\)", inner)
    ]
    codomain = int(k_out) if k_out else phi.domain_size
    return name, GeneralizedConstraint(phi, frozenset(tuples), codomain)


# --- schemes ---

def format_scheme(name, scheme):
    vars_ = ",".join(scheme.indeterminates)
    lines = [f"scheme {name} target={scheme.target} vars=[{vars_}]"]
    for j, h in enumerate(scheme.maps):
        entries = " ".join(str(e) for e in h)
        lines.append(f"map j={j} arity={len(h)} : {entries}")
    return "\n".join(lines)


def _parse_scheme_header(body):
    m = re.match(r"^(\S+)\s+target=(\d+)\s+vars=\[([^\]]*)\]\s*$", body)
    if not m:
        raise GaloisKitError(f"malformed scheme line {body!r}")
    name, target, vars_ = m.group(1), int(m.group(2)), m.group(3)
    indeterminates = tuple(filter(None, (v.strip() for v in vars_.split(","))))
    return name, target, indeterminates


def _parse_map_line(body, indeterminates):
    head, sep, entries = body.partition(":")
    if not sep:
        raise GaloisKitError("map line needs ':' before the entries")
    tokens = head.split()
    if len(tokens) != 2:
        raise GaloisKitError(f"malformed map line head {head!r}")
    j = int(_kv(tokens[0], "j"))
    arity = int(_kv(tokens[1], "arity"))
    names = set(indeterminates)
    h = tuple(
        e if e in names else int(e) for e in entries.split()
    )
    if len(h) != arity:
        raise GaloisKitError(
            f"map declares arity={arity} but lists {len(h)} entries"
        )
    return j, h


# --- clusters ---

def format_cluster(name, cluster):
    gens = " ; ".join(
        f"gen cap={format_extnat(g.cap)} rf=[{_format_rf_body(g.box, with_shape=False)}]"
        for g in cluster.sorted_generators()
    )
    return (
        f"cluster {name} arity={cluster.arity} k={cluster.domain_size}"
        f" {{ {gens} }}".replace("{  }", "{ }")
    )


def _parse_cluster(body, workspace):
    m = re.match(
        r"^(\S+)\s+arity=(\d+)\s+k=(\d+)\s*\{(.*)\}\s*$", body, re.DOTALL
    )
    if not m:
        raise GaloisKitError(f"malformed cluster line {body!r}")
    name, arity, k, inner = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
    gens = set()
    # split generator entries on ';' outside brackets
    depth = 0
    entry = []
    entries = []
    for ch in inner:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == ";" and depth == 0:
            entries.append("".join(entry))
            entry = []
        else:
            entry.append(ch)
    entries.append("".join(entry))
    for text in filter(None, (e.strip() for e in entries)):
        gm = re.match(r"^gen\s+cap=(\S+)\s+rf=(@\S+|\[.*\])\s*$", text, re.DOTALL)
        if not gm:
            raise GaloisKitError(f"malformed generator entry {text!r}")
        cap = parse_extnat(gm.group(1))
        box = _rf_field(gm.group(2), workspace, arity=arity, k=k)
        gens.add(BoxedGenerator(box, cap))
    return name, Cluster(arity, k, frozenset(gens))


# --- workspace files ---

def parse_workspace(text, workspace=None):
    """Parse one file's worth of entity lines into a workspace."""
    ws = workspace if workspace is not None else Workspace()
    lines = text.splitlines()
    # join continuation state for class blocks and scheme map lines
    i = 0
    seen_header = False
    pending_scheme = None  # (name, target, indeterminates, maps)

    def flush_scheme():
        nonlocal pending_scheme
        if pending_scheme is None:
            return
        name, target, indeterminates, maps = pending_scheme
        pending_scheme = None
        ws.add("scheme", name, MinorScheme(target, indeterminates, tuple(maps)))

    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            if line != HEADER:
                raise GaloisKitError(
                    f"missing header line {HEADER!r} (got {line!r})"
                )
            seen_header = True
            continue
        kind, _, body = line.partition(" ")
        if kind == "map":
            if pending_scheme is None:
                raise GaloisKitError("map line outside a scheme block")
            j, h = _parse_map_line(body, pending_scheme[2])
            if j != len(pending_scheme[3]):
                raise GaloisKitError(f"map index j={j} out of order")
            pending_scheme[3].append(h)
            continue
        flush_scheme()
        if kind == "op":
            name, op = _parse_operation(body)
            ws.add("operation", name, op)
        elif kind == "class":
            m = re.match(r"^(\S+)\s*\{\s*$", body)
            if not m:
                raise GaloisKitError(f"malformed class line {body!r}")
            members = []
            while True:
                if i >= len(lines):
                    raise GaloisKitError("unterminated class block")
                inner = lines[i].strip()
                i += 1
                if inner == "}":
                    break
                if not inner or inner.startswith("#"):
                    continue
                ikind, _, ibody = inner.partition(" ")
                if ikind != "op":
                    raise GaloisKitError(
                        f"class blocks contain only op lines, got {inner!r}"
                    )
                members.append(_parse_operation(ibody)[1])
            if not members:
                raise GaloisKitError("class blocks need at least one op line")
            cls_ = OperationClass(
                members[0].domain_size, members[0].codomain_size, members
            )
            ws.add("class", m.group(1), cls_)
        elif kind == "ms":
            name, s = _parse_multiset(body)
            ws.add("multiset", name, s)
        elif kind == "mat":
            name, mat = _parse_matrix(body)
            ws.add("matrix", name, mat)
        elif kind == "rf":
            name, phi = _parse_rf(body)
            ws.add("rf", name, phi)
        elif kind == "constraint":
            name, c = _parse_constraint(body, ws)
            ws.add("constraint", name, c)
        elif kind == "scheme":
            name, target, indeterminates = _parse_scheme_header(body)
            pending_scheme = (name, target, indeterminates, [])
        elif kind == "cluster":
            name, cluster = _parse_cluster(body, ws)
            ws.add("cluster", name, cluster)
        else:
            raise GaloisKitError(f"unknown entity kind {kind!r}")
    flush_scheme()
    if not seen_header:
        raise GaloisKitError(f"missing header line {HEADER!r}")
    return ws


def parse_workspace_file(path, workspace=None):
    with open(path, encoding="utf-8") as fh:
        return parse_workspace(fh.read(), workspace)
