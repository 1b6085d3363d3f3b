"""Commutative monomial rewriting over an exact coefficient ring.

A reduction system is a list of monic rules (W, f) where W is a monomial
and f is a polynomial all of whose monomials strictly precede W.  The
monomial order is: total weight first, then reverse lexicographic in the
generator order, so that among monomials of equal weight the one with the
higher power of the last generator precedes, ties broken by the next
generator back, and so on.  Positive weights give the descending chain
condition, hence termination of reduction.

Coefficients live in any exact ring exposing ``+``, ``*``, unary ``-``,
``==`` and ``is_zero()`` (plain integers also work).  A system's
coefficients may themselves be elements of another system's quotient
ring, which is how the two-level presentation of the BT^2 cohomology is
stacked on top of the BT^1 ring.

Confluence is certified by the diamond lemma: every pair of rules whose
left sides have a nontrivial common divisor is joined by fully
normalizing both one-step rewrites of their least common multiple.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count():
    """Worker cap from EQUICOHOM_THREADS (default 1, i.e. sequential)."""
    try:
        return max(1, int(os.environ.get("EQUICOHOM_THREADS", "1")))
    except ValueError:
        return 1


def _is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


# -- monomials: tuples of non-negative exponents -------------------------

def mono_one(n):
    return (0,) * n


def mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1, m2):
    """True if m1 divides m2."""
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m2, m1):
    return tuple(b - a for a, b in zip(m1, m2))


def mono_gcd(m1, m2):
    return tuple(min(a, b) for a, b in zip(m1, m2))


def mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


class GeneratorSet:
    """Ordered generators with positive weights and optional gradings."""

    __slots__ = ("names", "weights", "gradings", "index")

    def __init__(self, names, weights, gradings=None):
        names = tuple(names)
        weights = tuple(weights)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive, one per generator")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "gradings",
                           tuple(gradings) if gradings is not None else None)
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSet is immutable")

    def __len__(self):
        return len(self.names)

    def one(self):
        return mono_one(len(self.names))

    def monomial(self, **exps):
        m = [0] * len(self.names)
        for name, e in exps.items():
            m[self.index[name]] = e
        return tuple(m)

    def weight(self, m):
        return sum(e * w for e, w in zip(m, self.weights))

    def grading(self, m):
        g = None
        for e, gg in zip(m, self.gradings):
            if e:
                term = gg * e
                g = term if g is None else g + term
        if g is None:
            g = self.gradings[0] * 0
        return g

    def compare(self, m1, m2):
        """-1 if m1 precedes m2, 0 if equal, 1 otherwise."""
        if m1 == m2:
            return 0
        w1, w2 = self.weight(m1), self.weight(m2)
        if w1 != w2:
            return -1 if w1 < w2 else 1
        for i in range(len(m1) - 1, -1, -1):
            if m1[i] != m2[i]:
                # the higher power of the later generator precedes
                return -1 if m1[i] > m2[i] else 1
        return 0

    def sort_key(self, m):
        # ascending in the order: weight, then negated reversed exponents
        return (self.weight(m), tuple(-e for e in reversed(m)))

    def format(self, m):
        bits = []
        for name, e in zip(self.names, m):
            if e == 0:
                continue
            bits.append(name if e == 1 else "%s^%d" % (name, e))
        return "*".join(bits) if bits else "1"


class Reduction:
    """A monic rule W -> f with every monomial of f preceding W."""

    __slots__ = ("lhs", "rhs", "name")

    def __init__(self, lhs, rhs, name=""):
        object.__setattr__(self, "lhs", tuple(lhs))
        object.__setattr__(self, "rhs",
                           tuple((c, tuple(m)) for c, m in rhs if not _is_zero(c)))
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("Reduction is immutable")


class OrderViolation(ValueError):
    """A rule's right side fails to precede its left side."""


class RewriteSystem:
    """A confluence-checkable reduction system over a coefficient ring."""

    def __init__(self, gens, reductions, coeff_grading=None, check_order=True):
        self.gens = gens
        self.reductions = tuple(reductions)
        self.max_steps = 2_000_000
        if check_order:
            for red in self.reductions:
                for c, m in red.rhs:
                    if gens.compare(m, red.lhs) != -1:
                        raise OrderViolation(
                            "rule %s: monomial %s does not precede %s"
                            % (red.name or "?", gens.format(m),
                               gens.format(red.lhs)))
        if coeff_grading is not None and gens.gradings is not None:
            for red in self.reductions:
                glhs = gens.grading(red.lhs)
                for c, m in red.rhs:
                    g = gens.grading(m) + coeff_grading(c)
                    if g != glhs:
                        raise ValueError(
                            "rule %s is not graded: %s vs %s"
                            % (red.name or "?", g, glhs))

    # -- polynomial helpers ------------------------------------------
    def add(self, p1, p2):
        out = dict(p1)
        for m, c in p2.items():
            if m in out:
                s = out[m] + c
                if _is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return out

    def scale(self, p, c, m=None):
        """c * x^m * p for a coefficient c and optional monomial m."""
        out = {}
        for mm, cc in p.items():
            prod = c * cc
            if _is_zero(prod):
                continue
            key = mono_mul(mm, m) if m is not None else mm
            out[key] = prod
        return out

    def find_rule(self, m):
        for i, red in enumerate(self.reductions):
            if mono_divides(red.lhs, m):
                return i
        return None

    def apply_at(self, red, m):
        """Rewrite the monomial m once with the rule red (lhs must divide)."""
        q = mono_div(m, red.lhs)
        return {mono_mul(mm, q): c for c, mm in red.rhs}

    def reduce(self, poly):
        """Normal form: no remaining monomial is divisible by any lhs.

        Strategy: always rewrite the order-greatest reducible monomial,
        resolving rule ties by list position.  With a confluent system the
        result is strategy independent.
        """
        work = dict(poly)
        steps = 0
        while True:
            target = None
            rule = None
            for m in sorted(work, key=self.gens.sort_key, reverse=True):
                i = self.find_rule(m)
                if i is not None:
                    target = m
                    rule = self.reductions[i]
                    break
            if target is None:
                return work
            c = work.pop(target)
            work = self.add(work, self.scale(self.apply_at(rule, target), c))
            steps += 1
            if steps > self.max_steps:
                raise RuntimeError("reduction exceeded %d steps" % self.max_steps)

    def is_normal_monomial(self, m):
        return self.find_rule(m) is None

    # -- diamond lemma -------------------------------------------------
    def overlaps(self):
        """All unordered rule pairs with nontrivially overlapping lhs."""
        out = []
        n = len(self.reductions)
        for i in range(n):
            for j in range(i + 1, n):
                wi, wj = self.reductions[i].lhs, self.reductions[j].lhs
                if any(g > 0 for g in mono_gcd(wi, wj)):
                    out.append((i, j, mono_lcm(wi, wj)))
        return out

    def check_confluence(self):
        """Join every overlap; failure is reported, not raised."""
        pairs = self.overlaps()

        def join(item):
            i, j, lcm = item
            ri, rj = self.reductions[i], self.reductions[j]
            nf1 = self.reduce(self.apply_at(ri, lcm))
            nf2 = self.reduce(self.apply_at(rj, lcm))
            return {
                "rules": (ri.name or str(i), rj.name or str(j)),
                "lcm": lcm,
                "joined": nf1 == nf2,
                "nf1": nf1,
                "nf2": nf2,
            }

        workers = worker_count()
        if workers > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(join, pairs))
        else:
            results = [join(p) for p in pairs]
        return ConfluenceReport(results)


class ConfluenceReport:
    def __init__(self, pairs):
        self.pairs = pairs

    @property
    def ok(self):
        return all(p["joined"] for p in self.pairs)

    @property
    def failures(self):
        return [p for p in self.pairs if not p["joined"]]

    def __repr__(self):
        return "ConfluenceReport(ok=%s, pairs=%d)" % (self.ok, len(self.pairs))
