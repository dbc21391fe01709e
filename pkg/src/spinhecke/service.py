"""HTTP service exposing the exact-computation endpoints.

Long-running by design: algebra instances and their straightening memo
tables stay warm across requests, so repeated verification calls get
cheaper.  The CLI talks to this service (in-process by default, over HTTP
with --server).  All numbers in responses are exact canonical text; no
floats anywhere.
"""

from __future__ import annotations

import re

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .coeff import laurent_str
from .engine import (BudgetExceededError, Element, EngineError, element_str,
                     word_str)
from .exprs import ALGEBRAS, ParseError, get_algebra, parse, evaluate
from .jm import (CyclotomicError, a1_decompose, classify_ideal,
                 cyclotomic_dim, jm_images, poly_from_hc1, theorem63_map)
from .maps import named_map
from .reps import act, pi_q
from .suites import DEFAULT_SEED, SUITES, run_suite
from .localization import intertwiner_checks
from .finite import spin_ops

app = FastAPI(
    title="spinhecke",
    description="Exact symbolic computation in spin, covering and "
                "Hecke-Clifford algebras of finite and affine type.",
    version="0.1.0",
)


class TermModel(BaseModel):
    word: str
    atoms: list[str]
    coeff: str


class ElementModel(BaseModel):
    algebra: str
    n: int
    expr: str
    parity: str
    terms: list[TermModel]


class NormalFormRequest(BaseModel):
    algebra: str
    n: int = Field(ge=1)
    expr: str


class MulRequest(BaseModel):
    algebra: str
    n: int = Field(ge=1)
    lhs: str
    rhs: str


class MapRequest(BaseModel):
    name: str
    n: int = Field(ge=1)
    expr: str


class DimsModel(BaseModel):
    algebra: str
    n: int
    dimension: int
    even_dimension: int | None = None


class VerifyRequest(BaseModel):
    suite: str
    n: int | None = None
    seed: int = DEFAULT_SEED


class CheckModel(BaseModel):
    relation: str
    status: str
    millis: int
    detail: str | None = None


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    n: int | None = None
    seed: int | None = None
    checks: list[CheckModel]


class JMResponse(BaseModel):
    n: int
    p: list[str]
    q: list[str]


class CyclotomicRequest(BaseModel):
    F: str
    n: int | None = Field(default=None, ge=1)


class CyclotomicResponse(BaseModel):
    case: int
    d: int
    k: int
    f: str | None
    g: str | None
    dimension: int | None = None


class ClassifyRequest(BaseModel):
    gens: list[str]
    n: int | None = Field(default=None, ge=1)


class ClassifyResponse(BaseModel):
    case: int
    f: str
    g: str
    dimension: int | None = None


class RepResponse(BaseModel):
    n: int
    dim: int
    matrix: list[list[str]]


class IntertwineRequest(BaseModel):
    n: int = Field(ge=2)
    check: str = "all"
    seed: int = DEFAULT_SEED


def _bad(code: str, message: str, offset: int | None = None):
    detail = {"code": code, "message": message}
    if offset is not None:
        detail["offset"] = offset
    return HTTPException(status_code=400, detail=detail)


def _element_model(x: Element, algebra: str) -> ElementModel:
    ops = x.ops
    terms = [TermModel(word=word_str(ops, w),
                       atoms=[ops.atom_label(a) for a in ops.word_atoms(w)],
                       coeff=laurent_str(c))
             for w, c in x.sorted_terms()]
    return ElementModel(algebra=algebra, n=ops.n, expr=element_str(x),
                        parity=x.parity(), terms=terms)


def _parse_in(algebra: str, n: int, text: str) -> Element:
    try:
        ops = get_algebra(algebra, n)
        return evaluate(parse(text, ops), ops)
    except ParseError as exc:
        raise _bad("parse", exc.message, exc.offset)
    except BudgetExceededError as exc:
        raise HTTPException(500, detail={"code": "internal", "message": str(exc)})
    except EngineError as exc:
        raise _bad("parse", str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/algebras")
def algebras():
    return {"algebras": sorted(ALGEBRAS), "suites": sorted(SUITES),
            "maps": ["phi", "psi", "phi-aff", "psi-aff", "sigma", "s", "bar",
                     "tau", "sigma+", "sigma-", "sp", "sq", "barp", "barq"]}


@app.post("/nf", response_model=ElementModel)
def normal_form(req: NormalFormRequest):
    return _element_model(_parse_in(req.algebra, req.n, req.expr), req.algebra)


@app.post("/mul", response_model=ElementModel)
def multiply(req: MulRequest):
    lhs = _parse_in(req.algebra, req.n, req.lhs)
    rhs = _parse_in(req.algebra, req.n, req.rhs)
    return _element_model(lhs * rhs, req.algebra)


_MAP_SOURCE = {
    "phi": "hc", "psi": "tensor", "phi-aff": "hc-aff", "psi-aff": "tensor-aff",
    "sigma": "spin", "s": "spin", "bar": "spin", "tau": "spin",
}
_MAP_TARGET = {
    "phi": "tensor", "psi": "hc", "phi-aff": "tensor-aff", "psi-aff": "hc-aff",
}


@app.post("/map", response_model=ElementModel)
def apply_map(req: MapRequest):
    source = _MAP_SOURCE.get(req.name, "spin-aff")
    try:
        gmap = named_map(req.name, req.n)
    except EngineError as exc:
        raise _bad("parse", str(exc))
    x = _parse_in(source, req.n, req.expr)
    try:
        image = gmap(x)
    except EngineError as exc:
        raise _bad("parse", str(exc))
    return _element_model(image, _MAP_TARGET.get(req.name, source))


@app.get("/dims", response_model=DimsModel)
def dims(algebra: str, n: int):
    try:
        ops = get_algebra(algebra, n)
        dim = len(ops.basis())
        even = len(ops.even_basis()) if hasattr(ops, "even_basis") else None
    except ParseError as exc:
        raise _bad("parse", exc.message, exc.offset)
    except EngineError as exc:
        raise _bad("parse", str(exc))
    return DimsModel(algebra=algebra, n=n, dimension=dim, even_dimension=even)


@app.post("/verify", response_model=SuiteReport)
def verify(req: VerifyRequest):
    if req.suite not in SUITES:
        raise _bad("parse", f"unknown suite {req.suite!r}; choices: "
                   + ", ".join(sorted(SUITES)))
    return run_suite(req.suite, n=req.n, seed=req.seed)


@app.get("/jm", response_model=JMResponse)
def jm(n: int):
    if n < 1:
        raise _bad("parse", "rank n must be >= 1")
    ps, qs = jm_images(n)
    return JMResponse(n=n, p=[element_str(x) for x in ps[1:]],
                      q=[element_str(x) for x in qs[1:]])


@app.post("/cyclotomic", response_model=CyclotomicResponse)
def cyclotomic(req: CyclotomicRequest):
    text = re.sub(r"X(?![0-9i])", "X1", req.F)
    elt = _parse_in("hc-aff", 1, text)
    try:
        coeffs = poly_from_hc1(elt)
        res = theorem63_map(coeffs)
        dim = cyclotomic_dim(res.ideal(), req.n) if req.n else None
    except CyclotomicError as exc:
        raise _bad("parse", str(exc))
    return CyclotomicResponse(
        case=res.case, d=res.d, k=res.k,
        f=res.f.format("p1") if res.f is not None else None,
        g=res.g.format("p1") if res.g is not None else None,
        dimension=dim)


@app.post("/cyclotomic/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest):
    gens = []
    for text in req.gens:
        elt = _parse_in("spin-aff", 1, text)
        try:
            even, odd = a1_decompose(elt)
        except CyclotomicError as exc:
            raise _bad("parse", str(exc))
        if not even.is_zero() and not odd.is_zero():
            raise _bad("parse", f"generator {text!r} is not Z2-homogeneous")
        if even.is_zero() and odd.is_zero():
            raise _bad("parse", f"generator {text!r} is zero")
        gens.append((odd, 1) if even.is_zero() else (even, 0))
    try:
        ideal = classify_ideal(gens)
        dim = cyclotomic_dim(ideal, req.n) if req.n else None
    except CyclotomicError as exc:
        raise _bad("parse", str(exc))
    return ClassifyResponse(case=ideal.case, f=ideal.f.format("p1"),
                            g=ideal.g.format("p1"), dimension=dim)


@app.get("/rep", response_model=RepResponse)
def rep(n: int, expr: str):
    if n < 2:
        raise _bad("parse", "the basic spin representation needs n >= 2")
    x = _parse_in("spin", n, expr)
    try:
        m = act(x, pi_q(n))
    except EngineError as exc:
        raise _bad("parse", str(exc))
    return RepResponse(n=n, dim=len(m),
                       matrix=[[laurent_str(e) for e in row] for row in m])


@app.post("/intertwine", response_model=SuiteReport)
def intertwine(req: IntertwineRequest):
    import time
    checks = intertwiner_checks(req.n, req.check)
    entries = []
    for name, thunk in checks:
        t0 = time.perf_counter()
        try:
            ok = bool(thunk())
            detail = None
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        entries.append(CheckModel(
            relation=name, status="pass" if ok else "fail",
            millis=int((time.perf_counter() - t0) * 1000), detail=detail))
    return SuiteReport(suite="intertwine", n=req.n, seed=req.seed,
                       passed=all(e.status == "pass" for e in entries),
                       checks=entries)
