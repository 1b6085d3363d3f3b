"""Grading groups for C2-equivariant cohomology of BT^1, BT^2 and BU(2).

The groups are free abelian groups modulo a single relation:

    RO(Pi BT^2) = Z{1, s, W00, W01, W10, W11} / (W00+W01+W10+W11 = 2s - 2)
    RO(Pi BT^1) = Z{1, s, W0, W1}             / (W0 + W1 = 2s - 2)

where ``s`` denotes the sign representation sigma.  Canonical forms
eliminate the last Omega (W11, resp. W1), so equality is componentwise
equality of the stored integers.  RO(Pi BU(2)) is realized inside
RO(Pi BT^2) as the image of s*, i.e. the gradings with m01 == m10.

All values are plain Python integers (arbitrary precision), and all types
here are immutable.
"""

from __future__ import annotations


class GradingBT2:
    """Element of RO(Pi BT^2) in canonical form (W11 eliminated)."""

    __slots__ = ("a", "b", "m00", "m01", "m10")

    def __init__(self, a=0, b=0, m00=0, m01=0, m10=0, m11=0):
        # W11 = (2s - 2) - W00 - W01 - W10
        if m11:
            a -= 2 * m11
            b += 2 * m11
            m00 -= m11
            m01 -= m11
            m10 -= m11
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m00", m00)
        object.__setattr__(self, "m01", m01)
        object.__setattr__(self, "m10", m10)

    def __setattr__(self, name, value):
        raise AttributeError("GradingBT2 is immutable")

    def key(self):
        return (self.a, self.b, self.m00, self.m01, self.m10)

    def __eq__(self, other):
        return isinstance(other, GradingBT2) and self.key() == other.key()

    def __hash__(self):
        return hash(("BT2",) + self.key())

    def __add__(self, other):
        return GradingBT2(self.a + other.a, self.b + other.b,
                          self.m00 + other.m00, self.m01 + other.m01,
                          self.m10 + other.m10)

    def __neg__(self):
        return GradingBT2(-self.a, -self.b, -self.m00, -self.m01, -self.m10)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        return GradingBT2(n * self.a, n * self.b, n * self.m00,
                          n * self.m01, n * self.m10)

    __rmul__ = __mul__

    def is_zero(self):
        return self.key() == (0, 0, 0, 0, 0)

    def rho_deg(self):
        """Underlying nonequivariant degree: 1 -> 1, s -> 1, W -> 0."""
        return self.a + self.b

    def phi_deg(self):
        """Fixed-set degrees (a - 2*m_ij) indexed (00, 01, 10, 11)."""
        return (self.a - 2 * self.m00, self.a - 2 * self.m01,
                self.a - 2 * self.m10, self.a)

    def is_sro(self):
        """Membership in SRO(Pi BT^2): m00 + m11 == m01 + m10.

        Evaluated on the canonical vector; the defining relation satisfies
        the characterization, so the answer is representative independent.
        """
        return self.m00 == self.m01 + self.m10

    def is_even(self):
        """True iff a and b are both even (the relation is even, so this
        is representative independent)."""
        return self.a % 2 == 0 and self.b % 2 == 0

    def in_bu2(self):
        """True iff the grading is in the image of s*, i.e. m01 == m10."""
        return self.m01 == self.m10

    def ro2_part(self):
        """If the Omega part vanishes, return the RO(C2) pair (a, b)."""
        if self.m00 or self.m01 or self.m10:
            raise ValueError("grading has nonzero Omega part: %s" % (self,))
        return (self.a, self.b)

    def __repr__(self):
        return "GradingBT2(%d, %d, %d, %d, %d)" % self.key()

    def __str__(self):
        return format_grading(self)


class GradingBT1:
    """Element of RO(Pi BT^1) in canonical form (W1 eliminated)."""

    __slots__ = ("a", "b", "m0")

    def __init__(self, a=0, b=0, m0=0, m1=0):
        if m1:
            a -= 2 * m1
            b += 2 * m1
            m0 -= m1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m0", m0)

    def __setattr__(self, name, value):
        raise AttributeError("GradingBT1 is immutable")

    def key(self):
        return (self.a, self.b, self.m0)

    def __eq__(self, other):
        return isinstance(other, GradingBT1) and self.key() == other.key()

    def __hash__(self):
        return hash(("BT1",) + self.key())

    def __add__(self, other):
        return GradingBT1(self.a + other.a, self.b + other.b, self.m0 + other.m0)

    def __neg__(self):
        return GradingBT1(-self.a, -self.b, -self.m0)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        return GradingBT1(n * self.a, n * self.b, n * self.m0)

    __rmul__ = __mul__

    def rho_deg(self):
        return self.a + self.b

    def phi_deg(self):
        """Fixed-set degrees indexed (0, 1)."""
        return (self.a - 2 * self.m0, self.a)

    def is_even(self):
        return self.a % 2 == 0 and self.b % 2 == 0

    def __repr__(self):
        return "GradingBT1(%d, %d, %d)" % self.key()


class GradingBU2:
    """Element of RO(Pi BU(2)), stored as its s*-image in RO(Pi BT^2).

    s* sends W0 -> W00, W1 -> W01 + W10, W2 -> W11, so the image consists
    of the BT^2 gradings with m01 == m10.
    """

    __slots__ = ("bt2",)

    def __init__(self, a=0, b=0, n0=0, n1=0, n2=0):
        bt2 = GradingBT2(a, b, m00=n0, m01=n1, m10=n1, m11=n2)
        if not bt2.in_bu2():
            raise ValueError("not symmetric")
        object.__setattr__(self, "bt2", bt2)

    def __setattr__(self, name, value):
        raise AttributeError("GradingBU2 is immutable")

    @classmethod
    def from_bt2(cls, g):
        if not g.in_bu2():
            raise ValueError("BT2 grading %s is not an s* image" % (g,))
        self = object.__new__(cls)
        object.__setattr__(self, "bt2", g)
        return self

    def key(self):
        return self.bt2.key()

    def __eq__(self, other):
        return isinstance(other, GradingBU2) and self.key() == other.key()

    def __hash__(self):
        return hash(("BU2",) + self.key())

    def __add__(self, other):
        return GradingBU2.from_bt2(self.bt2 + other.bt2)

    def __neg__(self):
        return GradingBU2.from_bt2(-self.bt2)

    def embed(self):
        return self.bt2

    def is_even(self):
        return self.bt2.is_even()

    def __repr__(self):
        return "GradingBU2%r" % (self.key(),)


class GradingRO2:
    """Element a + b*sigma of RO(C2)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("GradingRO2 is immutable")

    def key(self):
        return (self.a, self.b)

    def __eq__(self, other):
        return isinstance(other, GradingRO2) and self.key() == other.key()

    def __hash__(self):
        return hash(("RO2",) + self.key())

    def __add__(self, other):
        return GradingRO2(self.a + other.a, self.b + other.b)

    def __neg__(self):
        return GradingRO2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return "GradingRO2(%d, %d)" % self.key()


# The constant lambda = 2 + W1 in RO(Pi BU(2)); s_! lowers grading by it.
LAMBDA_BU2 = GradingBU2(a=2, n1=1)


def embed_bt1_pi1(g):
    """pi_1^*: W0 -> W00 + W01, W1 -> W10 + W11."""
    m1 = 0  # canonical form has W1 eliminated
    return GradingBT2(g.a, g.b, m00=g.m0, m01=g.m0, m10=m1, m11=m1)


def embed_bt1_pi2(g):
    """pi_2^*: W0 -> W00 + W10, W1 -> W01 + W11."""
    return GradingBT2(g.a, g.b, m00=g.m0, m01=0, m10=g.m0, m11=0)


def embed_bu2(g):
    """s^*: W0 -> W00, W1 -> W01 + W10, W2 -> W11."""
    return g.embed()


_BT2_SYMBOLS = {"s": "b", "W00": "m00", "W01": "m01", "W10": "m10", "W11": "m11"}


def parse_grading(text):
    """Parse ``a + b*s + m00*W00 + ...`` into a GradingBT2.

    Zero terms may be omitted; whitespace is ignored; each term is an
    optionally signed integer, an optional integer times a symbol, or a
    bare symbol.
    """
    coeffs = {"a": 0, "b": 0, "m00": 0, "m01": 0, "m10": 0, "m11": 0}
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty grading")
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while pos <= len(s):
        # find end of term
        end = pos
        while end < len(s) and s[end] not in "+-":
            end += 1
        term = s[pos:end]
        if not term:
            raise ValueError("empty term at position %d in %r" % (pos, text))
        num = 1
        sym = None
        if "*" in term:
            numpart, sympart = term.split("*", 1)
            num = int(numpart)
            sym = sympart
        elif term.isdigit():
            num = int(term)
        else:
            # possibly like "2s"? keep grammar strict: bare symbol only
            sym = term
        if sym is None:
            coeffs["a"] += sign * num
        else:
            if sym not in _BT2_SYMBOLS:
                raise ValueError("unknown grading symbol %r in %r" % (sym, text))
            if sym == "W11":
                g = GradingBT2(m11=sign * num)
                coeffs["a"] += g.a
                coeffs["b"] += g.b
                coeffs["m00"] += g.m00
                coeffs["m01"] += g.m01
                coeffs["m10"] += g.m10
            else:
                coeffs[_BT2_SYMBOLS[sym]] += sign * num
        if end == len(s):
            break
        sign = -1 if s[end] == "-" else 1
        pos = end + 1
    return GradingBT2(coeffs["a"], coeffs["b"], coeffs["m00"], coeffs["m01"],
                      coeffs["m10"])


def parse_grading_bt1(text):
    """Parse ``a + b*s + m0*W0 + m1*W1`` into a GradingBT1."""
    coeffs = {"a": 0, "b": 0, "m0": 0, "m1": 0}
    sym_map = {"s": "b", "W0": "m0", "W1": "m1"}
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty grading")
    pos = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        pos = 1
    while pos <= len(s):
        end = pos
        while end < len(s) and s[end] not in "+-":
            end += 1
        term = s[pos:end]
        if not term:
            raise ValueError("empty term at position %d in %r" % (pos, text))
        num = 1
        sym = None
        if "*" in term:
            numpart, sympart = term.split("*", 1)
            num = int(numpart)
            sym = sympart
        elif term.isdigit():
            num = int(term)
        else:
            sym = term
        if sym is None:
            coeffs["a"] += sign * num
        elif sym in sym_map:
            coeffs[sym_map[sym]] += sign * num
        else:
            raise ValueError("unknown grading symbol %r in %r" % (sym, text))
        if end == len(s):
            break
        sign = -1 if s[end] == "-" else 1
        pos = end + 1
    return GradingBT1(coeffs["a"], coeffs["b"], m0=coeffs["m0"],
                      m1=coeffs["m1"])


def format_grading(g):
    """Emit canonical text form, omitting zero terms."""
    parts = []
    for value, sym in ((g.a, None), (g.b, "s"), (g.m00, "W00"),
                       (g.m01, "W01"), (g.m10, "W10")):
        if value == 0:
            continue
        if sym is None:
            parts.append(("%+d" % value))
        elif value == 1:
            parts.append("+" + sym)
        elif value == -1:
            parts.append("-" + sym)
        else:
            parts.append("%+d*%s" % (value, sym))
    if not parts:
        return "0"
    out = "".join(parts)
    if out.startswith("+"):
        out = out[1:]
    return out
