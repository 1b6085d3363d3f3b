"""FastAPI service exposing the symbolic engine.

The rewrite systems are built once per process and are immutable, so a
single service instance can serve any number of concurrent clients.  All
responses carry ``"schema": 1``.
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, classes, maps, verify
from .expr import ParseError, format_element, parse_element
from .grading import GradingBT1, parse_grading, parse_grading_bt1
from .hcoeff import OutsideFragmentError
from .rings import (BU2Element, UndecidableEqualityError, WindowError,
                    basis_enumerate, bt1_basis_monomials_in_grading,
                    bt1_ring, flat_ring)

SCHEMA = 1

RINGS = ("bt2", "bt1", "bu2", "h")
MAP_NAMES = ("rho", "phi", "eta", "sstar", "delta", "chi1", "chi2",
             "gamma", "t", "pi1", "pi2")


class NormalizeRequest(BaseModel):
    ring: str = "bt2"
    expr: str


class NormalizeResponse(BaseModel):
    schema_: int = Field(SCHEMA, alias="schema")
    ring: str
    input: str
    normal_form: str
    grading: Optional[str] = None

    model_config = {"populate_by_name": True}


class MultiplyRequest(BaseModel):
    ring: str = "bt2"
    exprs: List[str]


class BasisRequest(BaseModel):
    ring: str = "bt2"
    coset: str = "0"
    window: str = "0:6:0:10"
    monomials: bool = True


class BasisCell(BaseModel):
    a: int
    b: int
    count: int
    monomials: List[str] = []


class BasisResponse(BaseModel):
    schema_: int = Field(SCHEMA, alias="schema")
    ring: str
    coset: str
    cells: List[BasisCell]

    model_config = {"populate_by_name": True}


class MapRequest(BaseModel):
    name: str
    expr: str


class EulerRequest(BaseModel):
    m: int
    n: int
    twisted: bool = False


class WanerRequest(BaseModel):
    bundles: List[str]


class PushRequest(BaseModel):
    a0: str = "0"
    a1: str = "0"
    a2: str = "0"
    a3: str = "0"


class VerifyRequest(BaseModel):
    criteria: Optional[List[str]] = None


def _parse(text, ring):
    if ring not in RINGS:
        raise HTTPException(422, "unknown ring %r; expected one of %s"
                            % (ring, ", ".join(RINGS)))
    try:
        return parse_element(text, ring)
    except ParseError as exc:
        raise HTTPException(422, str(exc))
    except (OutsideFragmentError, ValueError) as exc:
        raise HTTPException(422, str(exc))


def _format(value):
    from .hcoeff import HCoeff
    from .rings import BT1Element, FlatElement
    from .expr import format_hcoeff
    if isinstance(value, FlatElement):
        return format_element(value.poly, value.ring.gens)
    if isinstance(value, BT1Element):
        return format_element(value.poly, value.ring.gens)
    if isinstance(value, BU2Element):
        from .rings import BU2_GENS
        return format_element(value.poly, BU2_GENS)
    if isinstance(value, HCoeff):
        return format_hcoeff(value)
    return str(value)


def _grading_str(value):
    try:
        g = value.grading()
    except (ValueError, AttributeError):
        return None
    return str(g) if g is not None else None


def _parse_window(text):
    try:
        a_min, a_max, b_min, b_max = (int(t) for t in text.split(":"))
    except ValueError:
        raise HTTPException(422, "window must be a_min:a_max:b_min:b_max")
    return a_min, a_max, b_min, b_max


def _parse_coset(text, ring):
    text = text.strip() or "0"
    try:
        if ring == "bt1":
            return parse_grading_bt1(text)
        return parse_grading(text)
    except ValueError as exc:
        raise HTTPException(422, "bad coset: %s" % exc)


def create_app():
    app = FastAPI(title="equicohom", version=__version__)

    @app.get("/health")
    def health():
        return {"schema": SCHEMA, "status": "ok", "version": __version__}

    @app.post("/normalize")
    def normalize(req: NormalizeRequest):
        value = _parse(req.expr, req.ring)
        return {"schema": SCHEMA, "ring": req.ring, "input": req.expr,
                "normal_form": _format(value),
                "grading": _grading_str(value)}

    @app.post("/multiply")
    def multiply(req: MultiplyRequest):
        if not req.exprs:
            raise HTTPException(422, "need at least one expression")
        value = _parse(req.exprs[0], req.ring)
        for text in req.exprs[1:]:
            value = value * _parse(text, req.ring)
        return {"schema": SCHEMA, "ring": req.ring,
                "normal_form": _format(value),
                "grading": _grading_str(value)}

    @app.post("/basis")
    def basis(req: BasisRequest):
        window = _parse_window(req.window)
        coset = _parse_coset(req.coset, req.ring)
        try:
            if req.ring == "bt1":
                B = bt1_ring("h")
                cells = {}
                a_min, a_max, b_min, b_max = window
                for a in range(a_min, a_max + 1):
                    for b in range(b_min, b_max + 1):
                        monos = bt1_basis_monomials_in_grading(
                            coset + GradingBT1(a, b))
                        if monos:
                            cells[(a, b)] = [B.gens.format(x) for x in monos]
            elif req.ring == "bt2":
                R = flat_ring("h")
                raw = basis_enumerate(coset, window)
                cells = {cell: [R.gens.format(x) for x in monos]
                         for cell, monos in raw.items()}
            else:
                raise HTTPException(422, "basis supports rings bt2 and bt1")
        except WindowError as exc:
            raise HTTPException(422, str(exc))
        out = [BasisCell(a=a, b=b, count=len(monos),
                         monomials=monos if req.monomials else [])
               for (a, b), monos in sorted(cells.items())]
        return BasisResponse(ring=req.ring, coset=req.coset, cells=out)

    @app.post("/map")
    def apply_map(req: MapRequest):
        name = req.name
        if name not in MAP_NAMES:
            raise HTTPException(422, "unknown map %r; expected one of %s"
                                % (name, ", ".join(MAP_NAMES)))
        src = {"sstar": "bu2", "pi1": "bt1", "pi2": "bt1"}.get(name, "bt2")
        x = _parse(req.expr, src)
        try:
            if name == "rho":
                result = str(maps.rho(x))
            elif name == "phi":
                result = [str(t) for t in maps.phi(x)]
            elif name == "eta":
                result = [str(t) for t in maps.eta(x)]
            else:
                result = _format(maps.pullback(name, x))
        except (ValueError, OutsideFragmentError) as exc:
            raise HTTPException(422, str(exc))
        return {"schema": SCHEMA, "name": name, "source_ring": src,
                "result": result}

    @app.post("/euler")
    def euler(req: EulerRequest):
        value = classes.euler_omn(req.m, req.n, req.twisted)
        return {"schema": SCHEMA, "m": req.m, "n": req.n,
                "twisted": req.twisted, "result": _format(value)}

    @app.post("/waner")
    def waner(req: WanerRequest):
        try:
            bundles = [classes.line_bundle(name) for name in req.bundles]
        except KeyError as exc:
            raise HTTPException(422, "unknown line bundle %s; expected %s"
                                % (exc, ", ".join(classes.LINE_BUNDLES)))
        if not bundles:
            raise HTTPException(422, "need at least one line bundle")
        coeffs = classes.waner_total(bundles)
        return {"schema": SCHEMA, "bundles": req.bundles,
                "coefficients": [_format(c) for c in coeffs]}

    @app.get("/units")
    @app.post("/units")
    def units():
        rep = classes.unit_check(bound=3)
        return {"schema": SCHEMA, **rep}

    @app.post("/push")
    def push(req: PushRequest):
        coords = tuple(_parse(t, "bu2") for t in (req.a0, req.a1, req.a2,
                                                  req.a3))
        value = maps.pushforward(coords)
        return {"schema": SCHEMA, "result": _format(value)}

    @app.post("/verify")
    def run_verify(req: VerifyRequest):
        results = verify.run_all(req.criteria)
        if req.criteria:
            known = {c[0] for c in verify.CRITERIA}
            unknown = [c for c in req.criteria if c not in known]
            if unknown:
                raise HTTPException(422, "unknown criteria: %s" % unknown)
        lines, ok = verify.report_lines(results)
        return {"schema": SCHEMA, "ok": ok, "results": results,
                "report": lines}

    return app


app = create_app()
