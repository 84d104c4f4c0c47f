"""HTTP service exposing every operation.

Run with: uvicorn patience_sorting.service:app

Errors: malformed text or an inapplicable pattern gives 400; a
structurally invalid object, an unstable pair, or an exceeded size guard
gives 409; request bodies that fail model validation give FastAPI's 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .core import (
    format_permutation,
    parse_permutation,
    pile_config_to_json,
)
from .enumeration import (
    all_pile_configs,
    count_avoiders,
    iter_stable_pairs,
    non_crossing_configs,
)
from .errors import DomainError, ParseError
from .extended import (
    extended_patience_sort,
    invert_extended,
    pair_from_json,
    pair_to_json,
)
from .patience import patience_sort
from .patterns import avoids, normal_form, occurrences, parse_pattern, ps_class
from .shadow import diagram_to_json, shadow_diagram
from .schemas import (
    AvoidOut,
    ClassOut,
    EnumerateIn,
    EnumerateOut,
    OccurrencesOut,
    PairModel,
    PatternQuery,
    PermIn,
    PermOut,
    PileConfigModel,
    ShadowOut,
    VerifyIn,
    VerifyOut,
)
from .verify import run_checks

app = FastAPI(title="patience-sorting", version=__version__)


@app.exception_handler(ParseError)
async def _parse_error(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(status_code=409, content={"detail": str(exc)})


_DOC_PATHS = {"/openapi.json", "/docs", "/docs/oauth2-redirect", "/redoc"}


@app.get("/")
def health() -> dict:
    return {
        "service": "patience-sorting",
        "version": __version__,
        "endpoints": sorted(
            route.path for route in app.routes if route.path not in _DOC_PATHS
        ),
    }


@app.post("/sort", response_model=PileConfigModel)
def sort_endpoint(body: PermIn) -> dict:
    return pile_config_to_json(patience_sort(parse_permutation(body.perm)))


@app.post("/rpw", response_model=PermOut)
def rpw_endpoint(body: PermIn) -> dict:
    return {"perm": format_permutation(normal_form(parse_permutation(body.perm)))}


@app.post("/normal", response_model=PermOut)
def normal_endpoint(body: PermIn) -> dict:
    return {"perm": format_permutation(normal_form(parse_permutation(body.perm)))}


@app.post("/shadow", response_model=ShadowOut)
def shadow_endpoint(body: PermIn) -> dict:
    return diagram_to_json(shadow_diagram(parse_permutation(body.perm)))


@app.post("/extended", response_model=PairModel)
def extended_endpoint(body: PermIn) -> dict:
    return pair_to_json(*extended_patience_sort(parse_permutation(body.perm)))


@app.post("/invert", response_model=PermOut)
def invert_endpoint(body: PairModel) -> dict:
    insertion, recording = pair_from_json(body.model_dump())
    return {"perm": format_permutation(invert_extended(insertion, recording))}


@app.post("/class", response_model=ClassOut)
def class_endpoint(body: PermIn) -> dict:
    members = sorted(ps_class(parse_permutation(body.perm)))
    return {"perms": [format_permutation(m) for m in members]}


@app.post("/avoid", response_model=AvoidOut)
def avoid_endpoint(body: PatternQuery) -> dict:
    return {
        "avoids": avoids(parse_permutation(body.perm), parse_pattern(body.pattern))
    }


@app.post("/occurrences", response_model=OccurrencesOut)
def occurrences_endpoint(body: PatternQuery) -> dict:
    found = occurrences(parse_permutation(body.perm), parse_pattern(body.pattern))
    return {"occurrences": [list(occ) for occ in found]}


@app.post("/enumerate", response_model=EnumerateOut)
def enumerate_endpoint(body: EnumerateIn) -> dict:
    if body.what == "configs":
        items = [pile_config_to_json(c) for c in all_pile_configs(body.n)]
        return {"items": items, "report": None}
    if body.what == "noncrossing":
        items = [pile_config_to_json(c) for c in non_crossing_configs(body.n)]
        return {"items": items, "report": None}
    if body.what == "stable-pairs":
        items = [pair_to_json(r, s) for r, s in iter_stable_pairs(body.n)]
        return {"items": items, "report": None}
    if body.pattern is None:
        raise ParseError("enumerating avoiders requires a pattern")
    report = count_avoiders(body.n, parse_pattern(body.pattern))
    return {"items": None, "report": report.to_json()}


@app.post("/verify", response_model=VerifyOut)
def verify_endpoint(body: VerifyIn) -> dict:
    results = run_checks(body.max_n)
    return {
        "results": [r.to_json() for r in results],
        "ok": all(r.passed for r in results),
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
