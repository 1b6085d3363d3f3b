"""Parsing and printing of ring elements.

Grammar (whitespace insensitive):

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := primary ['^' INT]
    primary := INT | NAME | '(' expr ')'

NAME covers ring generators (z00, cw1, cxT, ...; z0, z1, cw, cxw;
Z0, Z1, Z2, cL, cxL, cW, cxW) and point-coefficient atoms
(e, xi, kappa, g, u[n], t[n]).  Parse errors carry the position and the
expected tokens.  Printing emits normal forms the parser accepts, with
monomials in descending monomial order.
"""

from __future__ import annotations

from .hcoeff import EXI, KAPPA, ONE, HCoeff, Laurent1


class ParseError(ValueError):
    def __init__(self, pos, message):
        super().__init__("position %d: %s" % (pos, message))
        self.pos = pos


# -- lexer ---------------------------------------------------------------

def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if j < n and text[j] == "[":
                k = text.find("]", j)
                if k < 0:
                    raise ParseError(j, "unclosed '[' in atom name")
                try:
                    idx = int(text[j + 1:k])
                except ValueError:
                    raise ParseError(j + 1, "expected integer index")
                toks.append(("NAME", "%s[%d]" % (name, idx), i))
                i = k + 1
            else:
                toks.append(("NAME", name, i))
                i = j
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(i, "unexpected character %r" % ch)
    toks.append(("EOF", None, n))
    return toks


# -- symbol tables --------------------------------------------------------

def _atom_value(name):
    """Point-coefficient atom by name, or None."""
    if name == "e":
        return HCoeff.e()
    if name == "xi":
        return HCoeff.xi()
    if name == "kappa":
        return HCoeff.kappa()
    if name == "g":
        return HCoeff.g()
    if name.startswith("u[") and name.endswith("]"):
        return HCoeff.u(int(name[2:-1]))
    if name.startswith("t[") and name.endswith("]"):
        return HCoeff.t(int(name[2:-1]))
    return None


class RingSyntax:
    """Binds the grammar to a particular ring."""

    def __init__(self, kind):
        self.kind = kind

    def from_int(self, n):
        from . import rings
        if self.kind == "bt2":
            return rings.flat_ring("h").scalar(HCoeff.from_int(n))
        if self.kind == "bt1":
            return rings.bt1_ring("h").scalar(HCoeff.from_int(n))
        if self.kind == "bu2":
            return rings.BU2Element.scalar(n)
        return HCoeff.from_int(n)

    def from_name(self, name):
        from . import rings
        if self.kind == "bt2":
            R = rings.flat_ring("h")
            if name in R.gens.index:
                return R.gen(name)
        elif self.kind == "bt1":
            R = rings.bt1_ring("h")
            if name in R.gens.index:
                return R.gen(name)
        elif self.kind == "bu2":
            if name in rings.BU2_GENS.index:
                return rings.BU2Element.gen(name)
        atom = _atom_value(name)
        if atom is not None:
            if self.kind == "bt2":
                return rings.flat_ring("h").scalar(atom)
            if self.kind == "bt1":
                return rings.bt1_ring("h").scalar(atom)
            if self.kind == "bu2":
                return rings.BU2Element.scalar(atom)
            return atom
        return None


class _Parser:
    def __init__(self, toks, syntax):
        self.toks = toks
        self.pos = 0
        self.syntax = syntax

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(tok[2], "expected %s, found %r" % (kind, tok[1]))
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(tok[2], "expected '+', '-', '*', '^' or end of "
                                     "input, found %r" % (tok[1],))
        return v

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        v = self.term()
        if sign < 0:
            v = -v
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            v = v - t if op == "-" else v + t
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] == "*":
            self.take()
            v = v * self.factor()
        return v

    def factor(self):
        v = self.primary()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            out = self.syntax.from_int(1)
            for _ in range(tok[1]):
                out = out * v
            return out
        return v

    def primary(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return self.syntax.from_int(tok[1])
        if tok[0] == "NAME":
            self.take()
            v = self.syntax.from_name(tok[1])
            if v is None:
                raise ParseError(tok[2], "unknown symbol %r" % tok[1])
            return v
        if tok[0] == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(tok[2], "expected integer, name or '(', found %r"
                         % (tok[1],))


def parse_element(text, ring="bt2"):
    """Parse an expression in the given ring ('bt2', 'bt1', 'bu2', 'h')."""
    if not text or not text.strip():
        raise ParseError(0, "empty expression")
    return _Parser(_tokenize(text), RingSyntax(ring)).parse()


# -- printing -------------------------------------------------------------

_ATOM_SORT = {"one": 0, "kappa": 1, "exi": 2, "u": 3, "t": 4}


def _atom_str(atom, c):
    kind = atom[0]
    if kind == "one":
        return str(c)
    if kind == "kappa":
        body = "kappa"
    elif kind == "exi":
        _, a, b = atom
        bits = []
        if a:
            bits.append("e" if a == 1 else "e^%d" % a)
        if b:
            bits.append("xi" if b == 1 else "xi^%d" % b)
        body = "*".join(bits)
    elif kind == "u":
        body = "u[%d]" % atom[1]
    else:
        body = "t[%d]" % atom[1]
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return "%d*%s" % (c, body)


def format_hcoeff(hc):
    if hc.is_zero():
        return "0"
    atoms = sorted(hc.terms, key=lambda a: (_ATOM_SORT[a[0]],) + a[1:])
    bits = []
    for atom in atoms:
        s = _atom_str(atom, hc.terms[atom])
        if bits:
            if s.startswith("-"):
                bits.append(" - " + s[1:])
            else:
                bits.append(" + " + s)
        else:
            bits.append(s)
    return "".join(bits)


def _scalar_str(c):
    if isinstance(c, HCoeff):
        return format_hcoeff(c)
    if isinstance(c, Laurent1):
        return str(c)
    return str(c)


def _needs_parens(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
        elif ch == "*" and depth == 0:
            return True
    return False


def format_element(poly, gens):
    """Deterministic text form, monomials in descending order."""
    if not poly:
        return "0"
    bits = []
    for m in sorted(poly, key=gens.sort_key, reverse=True):
        c = poly[m]
        cs = _scalar_str(c)
        mono = gens.format(m)
        if mono == "1":
            body = cs if not _needs_parens(cs) else "(%s)" % cs
        elif cs == "1":
            body = mono
        elif cs == "-1":
            body = "-" + mono
        elif _needs_parens(cs):
            body = "(%s)*%s" % (cs, mono)
        else:
            body = "%s*%s" % (cs, mono)
        if bits:
            if body.startswith("-"):
                bits.append(" - " + body[1:])
            else:
                bits.append(" + " + body)
        else:
            bits.append(body)
    return "".join(bits)
