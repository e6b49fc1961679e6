"""Textual grammar: parsing and canonical printing.

  node            (0 0)            empty node / constant description: ()
  level-1 tree    {(0) (0 0)}
  level-1 tower   [{} {(0)}]
  domain sequence ((0) (0 0)), possibly ending in -1
  level-2 tree    () -> ({}, (0)); ((0)) -> ({(0)}, (0 0))
  level <=2 tree  ({(0)} ; <level-2 entries>)
  partial <=2     (<level <=2 tree> @ (d, q, P))
  level-3 tree    ((0)) -> (<level <=2 tree> @ (d, q, P)); ...
  index map       {1->2, 2->3}
  ordinal         u3*2 + u1*(w^2+3) + 5     (w is omega)

Parsing is whitespace-insensitive; printers emit the canonical spacing used
above, and parse(print(x)) = x on all canonical forms.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .level1 import Level1Tree, validate_level1
from .ordinals import CtblOrd, IndexMap, UOrd

MINUS_ONE = -1

_TOKEN = re.compile(r"->|[(){}\[\];,@]|\^|\*|\+|-?\d+|u\d+|w|[A-Za-z_]+")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items = []
        pos = 0
        for m in _TOKEN.finditer(text):
            between = text[pos:m.start()]
            if between.strip():
                raise ParseError(f"unexpected {between.strip()!r}",
                                 *_loc(text, pos))
            self.items.append((m.group(), m.start()))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError(f"unexpected {text[pos:].strip()!r}", *_loc(text, pos))
        self.i = 0

    def peek(self):
        return self.items[self.i][0] if self.i < len(self.items) else None

    def next(self):
        if self.i >= len(self.items):
            raise ParseError("unexpected end of input", *_loc(self.text, len(self.text)))
        tok = self.items[self.i]
        self.i += 1
        return tok[0]

    def expect(self, want: str):
        got = self.next()
        if got != want:
            raise ParseError(f"expected {want!r}, got {got!r}", *self.loc_back())
        return got

    def loc_back(self):
        pos = self.items[self.i - 1][1] if 0 < self.i <= len(self.items) else len(self.text)
        return _loc(self.text, pos)

    def done(self):
        if self.i != len(self.items):
            raise ParseError(f"trailing input {self.peek()!r}", *self.loc_back())


def _loc(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _parse_with(text, fn):
    toks = _Tokens(text)
    out = fn(toks)
    toks.done()
    return out


# -- nodes, trees, sequences ---------------------------------------------------

def _node(toks) -> tuple:
    toks.expect("(")
    out = []
    while toks.peek() != ")":
        tok = toks.next()
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"node entries are naturals, got {tok!r}", *toks.loc_back())
        out.append(int(tok))
    toks.expect(")")
    return tuple(out)


def parse_node(text: str) -> tuple:
    return _parse_with(text, _node)


def _l1(toks) -> Level1Tree:
    toks.expect("{")
    nodes = []
    while toks.peek() != "}":
        nodes.append(_node(toks))
    toks.expect("}")
    return validate_level1(nodes)


def parse_l1(text: str) -> Level1Tree:
    return _parse_with(text, _l1)


def _tower(toks):
    toks.expect("[")
    trees = []
    while toks.peek() != "]":
        trees.append(_l1(toks))
    toks.expect("]")
    return trees


def parse_tower(text: str):
    return _parse_with(text, _tower)


def _domseq(toks) -> tuple:
    """A parenthesized sequence of nodes, optionally ending in -1."""
    toks.expect("(")
    out = []
    while toks.peek() != ")":
        if toks.peek() == "-1":
            toks.next()
            out.append(MINUS_ONE)
        else:
            out.append(_node(toks))
    toks.expect(")")
    return tuple(out)


def parse_domseq(text: str) -> tuple:
    return _parse_with(text, _domseq)


def _node_or_minus(toks):
    if toks.peek() == "-1":
        toks.next()
        return MINUS_ONE
    return _node(toks)


# -- level-2 / level <=2 trees ---------------------------------------------------

def _l2_entries(toks, stop):
    entries = {}
    while toks.peek() not in stop:
        q = _domseq(toks)
        toks.expect("->")
        toks.expect("(")
        tree = _l1(toks)
        toks.expect(",")
        node = _node_or_minus(toks)
        toks.expect(")")
        entries[q] = (tree, node)
        if toks.peek() == ";":
            toks.next()
    from .level2 import validate_level2
    return validate_level2(entries)


def parse_l2(text: str):
    return _parse_with(text, lambda t: _l2_entries(t, {None}))


def _le2(toks):
    from .level2 import LevelLe2Tree
    toks.expect("(")
    t1 = _l1(toks)
    toks.expect(";")
    t2 = _l2_entries(toks, {")"})
    toks.expect(")")
    return LevelLe2Tree(t1, t2)


def parse_le2(text: str):
    return _parse_with(text, _le2)


def _pl2(toks):
    from .level2 import validate_level2  # noqa: F401  (shared validation path)
    from .level3 import validate_partial_le2
    toks.expect("(")
    base = _le2(toks)
    toks.expect("@")
    toks.expect("(")
    d = int(toks.next())
    toks.expect(",")
    if d == 0:
        if toks.next() != "-1":
            raise ParseError("degree 0 extension is -1", *toks.loc_back())
        q = MINUS_ONE
    elif d == 1:
        q = _node(toks)
    else:
        q = _domseq(toks)
    toks.expect(",")
    p = _l1(toks)
    toks.expect(")")
    toks.expect(")")
    return validate_partial_le2(base, d, q, p)


def parse_pl2(text: str):
    return _parse_with(text, _pl2)


def _l3_entries(toks, stop):
    from .level3 import validate_level3
    entries = {}
    while toks.peek() not in stop:
        r = _domseq(toks)
        toks.expect("->")
        entries[r] = _pl2(toks)
        if toks.peek() == ";":
            toks.next()
    return validate_level3(entries)


def parse_l3(text: str):
    return _parse_with(text, lambda t: _l3_entries(t, {None}))


def parse_l2_tower(text: str):
    def inner(toks):
        toks.expect("[")
        out = []
        while toks.peek() != "]":
            toks.expect("[")
            out.append(_l2_entries(toks, {"]"}))
            toks.expect("]")
        toks.expect("]")
        return out
    return _parse_with(text, inner)


def parse_l3_tower(text: str):
    def inner(toks):
        toks.expect("[")
        out = []
        while toks.peek() != "]":
            toks.expect("[")
            out.append(_l3_entries(toks, {"]"}))
            toks.expect("]")
        toks.expect("]")
        return out
    return _parse_with(text, inner)


# -- index maps --------------------------------------------------------------------

def _index_map(toks) -> IndexMap:
    toks.expect("{")
    pairs = []
    while toks.peek() != "}":
        i = int(toks.next())
        toks.expect("->")
        v = int(toks.next())
        pairs.append((i, v))
        if toks.peek() == ",":
            toks.next()
    toks.expect("}")
    if [i for i, _ in pairs] != list(range(1, len(pairs) + 1)):
        raise ParseError("index map domain must be 1..n in order", *toks.loc_back())
    image = tuple(v for _, v in pairs)
    n2 = max(image) if image else 0
    return IndexMap(len(pairs), n2, image)


def parse_index_map(text: str, n2: int = None) -> IndexMap:
    m = _parse_with(text, _index_map)
    if n2 is not None and n2 >= m.n2:
        m = IndexMap(m.n, n2, m.image)
    return m


# -- ordinals ------------------------------------------------------------------------

def _ctbl_atom(toks) -> CtblOrd:
    tok = toks.peek()
    if tok == "(":
        toks.next()
        out = _ctbl_expr(toks)
        toks.expect(")")
        return out
    if tok == "w":
        toks.next()
        exp = CtblOrd.natural(1)
        if toks.peek() == "^":
            toks.next()
            exp = _ctbl_atom(toks)
        return CtblOrd.omega_power(exp)
    tok = toks.next()
    if tok and re.fullmatch(r"\d+", tok):
        return CtblOrd.natural(int(tok))
    raise ParseError(f"expected a countable ordinal, got {tok!r}", *toks.loc_back())


def _ctbl_product(toks) -> CtblOrd:
    out = _ctbl_atom(toks)
    while toks.peek() == "*":
        toks.next()
        out = out * _ctbl_atom(toks)
    return out


def _ctbl_expr(toks) -> CtblOrd:
    out = _ctbl_product(toks)
    while toks.peek() == "+":
        toks.next()
        out = out + _ctbl_product(toks)
    return out


def parse_ctbl(text: str) -> CtblOrd:
    return _parse_with(text, _ctbl_expr)


def _uord_term(toks) -> UOrd:
    tok = toks.peek()
    if tok and re.fullmatch(r"u\d+", tok):
        toks.next()
        level = int(tok[1:])
        if level < 1:
            raise ParseError("u-levels start at 1", *toks.loc_back())
        coeff = CtblOrd.natural(1)
        if toks.peek() == "*":
            toks.next()
            coeff = _ctbl_atom(toks)
            while toks.peek() == "*":
                toks.next()
                coeff = coeff * _ctbl_atom(toks)
        if coeff.is_zero():
            raise ParseError("zero coefficient on a u-term", *toks.loc_back())
        return UOrd.u(level, coeff)
    return UOrd.from_ctbl(_ctbl_product(toks))


def _uord_expr(toks) -> UOrd:
    out = _uord_term(toks)
    while toks.peek() == "+":
        toks.next()
        out = out + _uord_term(toks)
    return out


def parse_uord(text: str) -> UOrd:
    return _parse_with(text, _uord_expr)


# -- printers --------------------------------------------------------------------------

def format_node(node) -> str:
    if node == MINUS_ONE:
        return "-1"
    return "(" + " ".join(str(i) for i in node) + ")"


def format_l1(tree) -> str:
    return "{" + " ".join(format_node(n) for n in sorted(tree.nodes)) + "}"


def format_tower(trees) -> str:
    return "[" + " ".join(format_l1(t) for t in trees) + "]"


def format_domseq(q) -> str:
    return "(" + " ".join(format_node(n) for n in q) + ")"


def format_l2(t2) -> str:
    parts = []
    for q, (tree, node) in t2.entries:
        parts.append(f"{format_domseq(q)} -> ({format_l1(tree)}, {format_node(node)})")
    return "; ".join(parts)


def format_le2(le2) -> str:
    return f"({format_l1(le2.t1)} ; {format_l2(le2.t2)})"


def format_pl2(pt) -> str:
    if pt.d == 0:
        ext = "(0, -1, {})"
    elif pt.d == 1:
        ext = f"(1, {format_node(pt.q)}, {{}})"
    else:
        ext = f"(2, {format_domseq(pt.q)}, {format_l1(pt.p)})"
    return f"({format_le2(pt.base)} @ {ext})"


def format_l3(t3) -> str:
    parts = []
    for r, pt in t3.entries:
        parts.append(f"{format_domseq(r)} -> {format_pl2(pt)}")
    return "; ".join(parts)


def format_l2_tower(towers) -> str:
    return "[" + " ".join(f"[{format_l2(t)}]" for t in towers) + "]"


def format_l3_tower(towers) -> str:
    return "[" + " ".join(f"[{format_l3(t)}]" for t in towers) + "]"


def format_index_map(m: IndexMap) -> str:
    return "{" + ", ".join(f"{i}->{m(i)}" for i in range(1, m.n + 1)) + "}"


def _format_ctbl_exponent(exp: CtblOrd) -> str:
    if exp.is_natural():
        return str(exp.natural_value())
    if len(exp.terms) == 1 and exp.terms[0][1] == 1 and exp.terms[0][0].is_natural() \
            and exp.terms[0][0].natural_value() == 1:
        return "w"
    return "(" + format_ctbl(exp) + ")"


def format_ctbl(c: CtblOrd) -> str:
    if c.is_zero():
        return "0"
    parts = []
    for exp, coeff in c.terms:
        if exp.is_zero():
            parts.append(str(coeff))
            continue
        if exp.compare(CtblOrd.natural(1)) == 0:
            base = "w"
        else:
            base = f"w^{_format_ctbl_exponent(exp)}"
        parts.append(base if coeff == 1 else f"{base}*{coeff}")
    return "+".join(parts)


def _format_coeff(c: CtblOrd) -> str:
    if c.is_natural():
        return str(c.natural_value())
    if len(c.terms) == 1 and c.terms[0][1] == 1:
        return format_ctbl(c)  # a bare omega power: w, w^2, ...
    return "(" + format_ctbl(c) + ")"


def format_uord(b: UOrd) -> str:
    if b.is_zero():
        return "0"
    parts = []
    for level, coeff in b.uterms:
        if coeff.is_natural() and coeff.natural_value() == 1:
            parts.append(f"u{level}")
        else:
            parts.append(f"u{level}*{_format_coeff(coeff)}")
    if not b.tail.is_zero():
        parts.append(format_ctbl(b.tail))
    return " + ".join(parts)


def format_desc(desc) -> str:
    pvec = "(" + " ".join(format_node(p) for p in desc.pvec) + ")"
    return f"({format_domseq(desc.q)}, {format_l1(desc.tree)}, {pvec})"


def format_rep1(elt) -> str:
    if elt.index is None:
        return f"[{format_node(elt.node)}]"
    return f"[{format_node(elt.node)}, {elt.index}]"


def format_rep2(elt) -> str:
    if elt.side == 1:
        return f"(1, {format_rep1(elt.payload)})"
    inner = ", ".join(_rep_entry(e) for e in elt.payload)
    return f"(2, [{inner}])"


def format_rep3(elt) -> str:
    return "[" + ", ".join(_rep_entry(e) for e in elt.payload) + "]"


def _rep_entry(e) -> str:
    if isinstance(e, int):
        return str(e)
    if isinstance(e, tuple):
        return format_node(e)
    if isinstance(e, CtblOrd):
        return format_ctbl(e)
    return format_uord(e)


def parse_rep_seq(text: str):
    """Bracketed, comma-separated entries: nodes, -1, naturals or ordinals."""
    def inner(toks):
        toks.expect("[")
        out = []
        while toks.peek() != "]":
            if toks.peek() == "(":
                out.append(_node(toks))
            elif toks.peek() == "-1":
                toks.next()
                out.append(MINUS_ONE)
            else:
                out.append(_uord_expr(toks))
            if toks.peek() == ",":
                toks.next()
        toks.expect("]")
        return tuple(out)
    return _parse_with(text, inner)
