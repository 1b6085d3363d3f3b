"""Exact arithmetic in the fragment of the C2-equivariant cohomology of a
point (Burnside ring coefficients) that the BT^2 computation uses.

Atoms and their RO(C2) gradings (written (a, b) for a + b*sigma):

    e           (0, 1)      Euler class of the sign representation
    xi          (-2, 2)     invertible after Borelification, not here
    kappa       (0, 0)      kappa = 2 - g, where g = [C2] in the Burnside ring
    g           (0, 0)      stored as 2 - kappa (grading-0 basis is {1, kappa})
    u[n]        (0, -2n)    u[n] = e^{-2n} kappa, n >= 1
    t[n]        (n, -n)     t[n] = tau(iota^{-n}), n >= 2

Normal-form monomials are 1, kappa, e^a xi^b (a + b >= 1), u[n] and t[n];
coefficients of the mixed monomials e^a xi^b with a, b >= 1 are 2-torsion
and are stored mod 2.  Every element is homogeneous; adding elements of
different gradings is an error.  Products that leave the validated
fragment (for example e * u[n] with an odd exponent gap) raise
OutsideFragmentError instead of guessing.
"""

from __future__ import annotations


class OutsideFragmentError(ArithmeticError):
    """Raised for products the presented fragment does not cover."""


# atom keys
ONE = ("one",)
KAPPA = ("kappa",)


def EXI(a, b):
    return ("exi", a, b)


def U(n):
    if n < 1:
        raise ValueError("u[n] needs n >= 1")
    return ("u", n)


def T(n):
    if n < 2:
        raise ValueError("t[n] needs n >= 2")
    return ("t", n)


def atom_grading(atom):
    kind = atom[0]
    if kind in ("one", "kappa"):
        return (0, 0)
    if kind == "exi":
        _, a, b = atom
        return (-2 * b, a + 2 * b)
    if kind == "u":
        return (0, -2 * atom[1])
    if kind == "t":
        return (atom[1], -atom[1])
    raise ValueError("bad atom %r" % (atom,))


def _is_torsion(atom):
    """Atoms whose coefficients live in Z/2.

    Mixed e^a xi^b with a, b >= 1 are 2-torsion by the forced consistency
    (kappa e^2) xi = 2 e^2 xi versus (kappa xi) e^2 = 0.  The odd tau
    classes t[2k+1] are 2-torsion by associativity:
    (xi t[3]) t[2] = 0 while xi (t[3] t[2]) = 2 t[3].
    """
    if atom[0] == "exi":
        return atom[1] >= 1 and atom[2] >= 1
    if atom[0] == "t":
        return atom[1] % 2 == 1
    return False


def atom_mul(x, y):
    """Product of two normal atoms as a list of (int, atom) pairs."""
    order = {"one": 0, "kappa": 1, "exi": 2, "u": 3, "t": 4}
    if order[x[0]] > order[y[0]]:
        x, y = y, x
    kx, ky = x[0], y[0]
    if kx == "one":
        return [(1, y)]
    if kx == "kappa":
        if ky == "kappa":
            return [(2, KAPPA)]
        if ky == "exi":
            _, a, b = y
            if b >= 1:
                return []              # kappa * xi = 0
            return [(2, EXI(a, 0))]    # kappa * e^a = 2 e^a
        if ky == "u":
            return [(2, y)]
        if ky == "t":
            return []
    if kx == "exi":
        if ky == "exi":
            return [(1, EXI(x[1] + y[1], x[2] + y[2]))]
        if ky == "u":
            _, a, b = x
            n = y[1]
            if b >= 1:
                return []              # xi * u[n] = 0
            d = a - 2 * n
            if d > 0:
                return [(2, EXI(d, 0))]
            if d == 0:
                return [(1, KAPPA)]
            if d % 2 == 0:
                return [(1, U(-d // 2))]
            raise OutsideFragmentError(
                "e^%d * u[%d] leaves the presented fragment" % (a, n))
        if ky == "t":
            _, a, b = x
            n = y[1]
            if a >= 1:
                return []              # e * t[n] = 0
            # xi^b * t[n]
            while b > 0 and n >= 4:
                b -= 1
                n -= 2
            if b == 0:
                return [(1, T(n))]
            if n == 3:
                return []
            # n == 2: xi * t[2] = g = 2 - kappa, and kappa * xi = 0
            b -= 1
            if b == 0:
                return [(2, ONE), (-1, KAPPA)]
            return [(2, EXI(0, b))]
    if kx == "u":
        if ky == "u":
            return [(2, U(x[1] + y[1]))]
        if ky == "t":
            return []
    if kx == "t" and ky == "t":
        # tau(x) tau(y) = tau(x rho(tau(y))) and rho kills odd tau classes
        if x[1] % 2 or y[1] % 2:
            return []
        return [(2, T(x[1] + y[1]))]
    raise OutsideFragmentError("no rule for %r * %r" % (x, y))


class HCoeff:
    """Homogeneous element of the fragment, a Z-combination of atoms."""

    __slots__ = ("grading", "terms")

    def __init__(self, terms=None, grading=None):
        clean = {}
        g = grading
        for atom, c in (terms or {}).items():
            if _is_torsion(atom):
                c %= 2
            if c == 0:
                continue
            ag = atom_grading(atom)
            if g is None:
                g = ag
            elif ag != g:
                raise ValueError("mixed gradings %s vs %s" % (g, ag))
            clean[atom] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "grading", g if clean else None)

    def __setattr__(self, name, value):
        raise AttributeError("HCoeff is immutable")

    # constructors -----------------------------------------------------
    @staticmethod
    def zero():
        return HCoeff()

    @staticmethod
    def from_int(n):
        return HCoeff({ONE: n})

    @staticmethod
    def one():
        return HCoeff({ONE: 1})

    @staticmethod
    def atom(atom, c=1):
        return HCoeff({atom: c})

    @staticmethod
    def e(power=1):
        return HCoeff({EXI(power, 0): 1})

    @staticmethod
    def xi(power=1):
        return HCoeff({EXI(0, power): 1})

    @staticmethod
    def kappa():
        return HCoeff({KAPPA: 1})

    @staticmethod
    def g():
        return HCoeff({ONE: 2, KAPPA: -1})

    @staticmethod
    def u(n=1):
        return HCoeff({U(n): 1})

    @staticmethod
    def t(n):
        return HCoeff({T(n): 1})

    # structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {ONE: 1}

    def int_value(self):
        """The integer n when the element is n * 1."""
        if self.is_zero():
            return 0
        if set(self.terms) == {ONE}:
            return self.terms[ONE]
        raise ValueError("%s is not an integer multiple of 1" % (self,))

    def __eq__(self, other):
        if isinstance(other, int):
            other = HCoeff.from_int(other)
        if not isinstance(other, HCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = HCoeff.from_int(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.grading != other.grading:
            raise ValueError("adding gradings %s and %s"
                             % (self.grading, other.grading))
        terms = dict(self.terms)
        for atom, c in other.terms.items():
            terms[atom] = terms.get(atom, 0) + c
        return HCoeff(terms)

    __radd__ = __add__

    def __neg__(self):
        return HCoeff({a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HCoeff.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return HCoeff({a: other * c for a, c in self.terms.items()})
        if not isinstance(other, HCoeff):
            return NotImplemented
        acc = {}
        for ax, cx in self.terms.items():
            for ay, cy in other.terms.items():
                for c, atom in atom_mul(ax, ay):
                    acc[atom] = acc.get(atom, 0) + cx * cy * c
        return HCoeff(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = HCoeff.one()
        for _ in range(n):
            out = out * self
        return out

    # the two validating homomorphisms ----------------------------------
    def rho(self):
        """Restriction to nonequivariant cohomology, Z[iota^{+-1}].

        e -> 0, xi -> iota^2, kappa -> 0, g -> 2, u[n] -> 0, and
        t[n] -> (1 + (-1)^n) iota^{-n}: the conjugation negates iota, so
        the transfer classes restrict to 2 iota^{-n} for even n and to 0
        for odd n (forced by tau(iota^{-3}) xi = 0 with xi invertible
        nonequivariantly).
        """
        out = Laurent1.zero("iota")
        for atom, c in self.terms.items():
            kind = atom[0]
            if kind == "one":
                out = out + Laurent1.term("iota", 0, c)
            elif kind == "exi":
                _, a, b = atom
                if a == 0:
                    out = out + Laurent1.term("iota", 2 * b, c)
            elif kind == "t" and atom[1] % 2 == 0:
                out = out + Laurent1.term("iota", -atom[1], 2 * c)
            # kappa, u[n], odd t[n] -> 0
        return out

    def phi(self):
        """Restriction to the fixed points of a point, Z[e^{+-1}].

        e -> e, xi -> 0, kappa -> 2, g -> 0, u[n] -> 2 e^{-2n}, t[n] -> 0.
        """
        out = Laurent1.zero("e")
        for atom, c in self.terms.items():
            kind = atom[0]
            if kind == "one":
                out = out + Laurent1.term("e", 0, c)
            elif kind == "kappa":
                out = out + Laurent1.term("e", 0, 2 * c)
            elif kind == "exi":
                _, a, b = atom
                if b == 0:
                    out = out + Laurent1.term("e", a, c)
            elif kind == "u":
                out = out + Laurent1.term("e", -2 * atom[1], 2 * c)
            # t[n] -> 0
        return out

    def __str__(self):
        from .expr import format_hcoeff
        return format_hcoeff(self)

    def __repr__(self):
        return "HCoeff<%s>" % (self,)


class Laurent1:
    """Sparse Laurent polynomial in a single variable over Z."""

    __slots__ = ("var", "terms")

    def __init__(self, var, terms=None):
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "terms",
                           {k: v for k, v in (terms or {}).items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("Laurent1 is immutable")

    @staticmethod
    def zero(var):
        return Laurent1(var)

    @staticmethod
    def term(var, exp, coeff=1):
        return Laurent1(var, {exp: coeff})

    @staticmethod
    def one(var):
        return Laurent1(var, {0: 1})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, Laurent1):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    def __hash__(self):
        return hash((self.var, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent1.term(self.var, 0, other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Laurent1(self.var, terms)

    __radd__ = __add__

    def __neg__(self):
        return Laurent1(self.var, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent1.term(self.var, 0, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Laurent1(self.var, {k: other * v for k, v in self.terms.items()})
        acc = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                acc[k] = acc.get(k, 0) + v1 * v2
        return Laurent1(self.var, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Laurent1.one(self.var)
        base = self
        for _ in range(abs(n)):
            out = out * base
        if n < 0:
            # only monomials +-v^k are invertible
            if len(self.terms) != 1:
                raise ValueError("cannot invert %s" % (self,))
            (exp, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("cannot invert %s" % (self,))
            inv = Laurent1.term(self.var, -exp, c)
            out = Laurent1.one(self.var)
            for _ in range(-n):
                out = out * inv
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            if exp == 0:
                bits.append("%+d" % c)
            else:
                head = "%+d*" % c if abs(c) != 1 else ("+" if c == 1 else "-")
                tail = self.var if exp == 1 else "%s^%d" % (self.var, exp)
                bits.append(head + tail)
        out = "".join(bits)
        return out[1:] if out.startswith("+") else out

    __repr__ = __str__


# ----------------------------------------------------------------------
# The defining relation set, kept as data so it can be validated against
# rho and phi and checked for confluence.  Rules are stated over the
# formal atom alphabet {e, xi, kappa, g, u[n], t[n]}.
# ----------------------------------------------------------------------

_LETTER_VALUE = {
    "e": HCoeff.e(),
    "xi": HCoeff.xi(),
    "kappa": HCoeff.kappa(),
    "g": HCoeff.g(),
}


def _letter_value(letter):
    if isinstance(letter, tuple):
        kind, n = letter
        return HCoeff.u(n) if kind == "u" else HCoeff.t(n)
    return _LETTER_VALUE[letter]


def h_rules(nmax=5):
    """Instances of the relation rules R-H1..R-H12 with u/t indices <= nmax.

    Each rule is (name, lhs_letters, rhs_element) with the product of the
    lhs letters equal to the rhs in the fragment.
    """
    rules = []
    rules.append(("R-H1", ("kappa", "kappa"), HCoeff.kappa() * 2))
    for n in range(1, nmax + 1):
        rhs = HCoeff.u(n - 1) if n > 1 else HCoeff.kappa()
        rules.append(("R-H2[%d]" % n, ("e", "e", ("u", n)), rhs))
        rules.append(("R-H3[%d]" % n, ("xi", ("u", n)), HCoeff.zero()))
        rules.append(("R-H4[%d]" % n, ("g", ("u", n)), HCoeff.zero()))
    rules.append(("R-H5", ("xi", ("t", 2)), HCoeff.g()))
    rules.append(("R-H6", ("xi", ("t", 3)), HCoeff.zero()))
    for n in range(2, nmax + 1):
        rules.append(("R-H7[%d]" % n, ("e", ("t", n)), HCoeff.zero()))
    rules.append(("R-H8", ("g",), HCoeff.g()))
    for n in range(1, nmax + 1):
        for m in range(n, nmax + 1):
            rules.append(("R-H9[%d,%d]" % (n, m), (("u", n), ("u", m)),
                          HCoeff.u(n + m) * 2))
    for n in range(2, nmax + 1):
        for m in range(n, nmax + 1):
            rhs = HCoeff.t(n + m) * 2 if n % 2 == 0 and m % 2 == 0 \
                else HCoeff.zero()
            rules.append(("R-H10a[%d,%d]" % (n, m), (("t", n), ("t", m)),
                          rhs))
    for n in range(4, nmax + 1):
        rules.append(("R-H10b[%d]" % n, ("xi", ("t", n)), HCoeff.t(n - 2)))
    for n in range(2, nmax + 1):
        for m in range(1, nmax + 1):
            rules.append(("R-H10c[%d,%d]" % (m, n), (("u", m), ("t", n)),
                          HCoeff.zero()))
        rules.append(("R-H10d[%d]" % n, ("kappa", ("t", n)), HCoeff.zero()))
    rules.append(("R-H11a", ("g", "e"), HCoeff.zero()))
    rules.append(("R-H12", ("kappa", "xi"), HCoeff.zero()))
    return rules


def validate_rules(nmax=5):
    """Check every rule against both rho and phi.  Returns failures."""
    bad = []
    for name, lhs, rhs in h_rules(nmax):
        lr = Laurent1.one("iota")
        lp = Laurent1.one("e")
        for letter in lhs:
            v = _letter_value(letter)
            lr = lr * v.rho()
            lp = lp * v.phi()
        if lr != rhs.rho() or lp != rhs.phi():
            bad.append(name)
    # the 2-torsion convention: 2 e^a xi^b = 0 must also hold downstream
    for a in (1, 2):
        for b in (1, 2):
            v = HCoeff.e(a) * HCoeff.xi(b) * 2
            if not (v.rho().is_zero() and v.phi().is_zero() and v.is_zero()):
                bad.append("R-H11b[%d,%d]" % (a, b))
    return bad


_LETTER_FOLD_ORDER = {"t": 0, "u": 1, "xi": 2, "kappa": 3, "g": 4, "e": 5}


def _fold_key(letter):
    if isinstance(letter, tuple):
        return (_LETTER_FOLD_ORDER[letter[0]], letter[1])
    return (_LETTER_FOLD_ORDER[letter], 0)


def _apply_letters(start, letters):
    """start * product(letters), multiplying the e's as one block so that
    complete e^2 u[n] pairs are consumed rather than stray e factors."""
    out = start
    e_count = 0
    for letter in sorted(letters, key=_fold_key):
        if letter == "e":
            e_count += 1
            continue
        if out.is_zero():
            return out
        out = out * _letter_value(letter)
    if e_count and not out.is_zero():
        out = out * HCoeff.e(e_count)
    return out


def check_h_confluence(nmax=4):
    """Join every nontrivial overlap of rule instances.

    For each pair of rules whose left sides share a letter, rewrite the
    union multiset one step with either rule and normalize both results
    with the fragment arithmetic; the pair joins if they agree.
    Returns the list of failing pairs (empty means confluent).
    """
    rules = h_rules(nmax)
    failures = []
    for i in range(len(rules)):
        for j in range(i + 1, len(rules)):
            n1, l1, r1 = rules[i]
            n2, l2, r2 = rules[j]
            shared = set(l1) & set(l2)
            if not shared:
                continue
            # least common multiple of the two multisets
            lcm = list(l1)
            rest1 = []  # lcm minus l1 is empty; build lcm minus l2
            counts = {}
            for x in l1:
                counts[x] = counts.get(x, 0) + 1
            for x in l2:
                if counts.get(x, 0) > 0:
                    counts[x] -= 1
                else:
                    lcm.append(x)
            # path 1: apply rule 1, keep lcm - l1
            extra1 = list(lcm)
            for x in l1:
                extra1.remove(x)
            # path 2
            extra2 = list(lcm)
            for x in l2:
                extra2.remove(x)
            try:
                v1 = _apply_letters(r1, extra1)
                v2 = _apply_letters(r2, extra2)
            except OutsideFragmentError as exc:
                failures.append((n1, n2, "outside fragment", str(exc)))
                continue
            if v1 != v2:
                failures.append((n1, n2, v1, v2))
    return failures
