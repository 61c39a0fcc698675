"""HTTP front end: the same operations as the command line, as JSON over
POST.  Run with any ASGI server, e.g. `uvicorn longhom.service:app`.

Domain errors (bad terms, bad codes, out-of-range dimensions) come back as
400 with the library's message in `detail`; malformed request bodies are
FastAPI's usual 422.
"""

from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .dmatrix import bool_mat_mul, direction_matrix
from .lattice import count_antichains
from .pipes import code_equivalent, count_pipe_classes, pipe_preorder
from .signed import (classify_Rn_to_L, count_classes_Ln_to_R,
                     count_classes_Rn_to_L, signed_homotopy_class)
from .terms import (canonical_representative, compose, homotopy_class,
                    parse_term, parse_vector, print_term)

app = FastAPI(title="longhom", version=__version__)


@app.exception_handler(ValueError)
async def _value_error(request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


class ClassifyRequest(BaseModel):
    n: int
    term: str


class EquivRequest(BaseModel):
    n: int
    f: str
    g: str


class CountRequest(BaseModel):
    target: Literal["rn-to-r", "ln-to-r", "rn-to-l", "pipe"]
    n: Optional[int] = None
    code: Optional[str] = None


class DmatrixRequest(BaseModel):
    n: int
    terms: str


class MonoidCheckRequest(BaseModel):
    n: int
    f: str
    g: str


class PipeOrderRequest(BaseModel):
    code: str


class PipeEquivRequest(BaseModel):
    a: str
    b: str


class SignedClassRequest(BaseModel):
    n: int
    term: str


class ClassifyIntoLRequest(BaseModel):
    n: int
    sign: Literal["+", "-"]
    term: str


@app.get("/")
def index():
    return {
        "service": "longhom",
        "version": __version__,
        "endpoints": ["/classify", "/equiv", "/count", "/dmatrix",
                      "/monoid-check", "/pipe-order", "/pipe-equiv",
                      "/signed-class", "/classify-into-l"],
    }


@app.post("/classify")
def classify(req: ClassifyRequest):
    antichain = homotopy_class(parse_term(req.term, req.n), req.n)
    return {"antichain": antichain.to_lists(),
            "representative": print_term(canonical_representative(antichain))}


@app.post("/equiv")
def equiv(req: EquivRequest):
    left = homotopy_class(parse_term(req.f, req.n), req.n)
    right = homotopy_class(parse_term(req.g, req.n), req.n)
    return {"equivalent": left == right,
            "left": left.to_lists(), "right": right.to_lists()}


@app.post("/count")
def count(req: CountRequest):
    if req.target == "pipe":
        if req.code is None:
            raise ValueError("count pipe needs a code")
        return {"count": count_pipe_classes(req.code)}
    if req.n is None:
        raise ValueError(f"count {req.target} needs n")
    if req.target == "rn-to-r":
        return {"count": count_antichains(req.n)}
    if req.target == "ln-to-r":
        return {"count": count_classes_Ln_to_R(req.n)}
    return {"count": count_classes_Rn_to_L(req.n)}


@app.post("/dmatrix")
def dmatrix(req: DmatrixRequest):
    return direction_matrix(parse_vector(req.terms, req.n)).to_json_dict()


@app.post("/monoid-check")
def monoid_check(req: MonoidCheckRequest):
    f = parse_vector(req.f, req.n)
    g = parse_vector(req.g, req.n)
    lhs = direction_matrix(compose(f, g))
    rhs = bool_mat_mul(direction_matrix(g), direction_matrix(f))
    return {"equal": lhs == rhs,
            "lhs": lhs.to_json_dict(), "rhs": rhs.to_json_dict()}


@app.post("/pipe-order")
def pipe_order(req: PipeOrderRequest):
    order = pipe_preorder(req.code)
    return {"k": order.k,
            "order": [[i, j] for i, j in order.reach_pairs()],
            "classes": count_pipe_classes(req.code)}


@app.post("/pipe-equiv")
def pipe_equiv(req: PipeEquivRequest):
    return {"equivalent": code_equivalent(req.a, req.b)}


@app.post("/signed-class")
def signed_class(req: SignedClassRequest):
    antichain = signed_homotopy_class(parse_term(req.term, req.n), req.n)
    return {"antichain": antichain.to_token_lists()}


@app.post("/classify-into-l")
def classify_into_l(req: ClassifyIntoLRequest):
    term = parse_term(req.term, req.n)
    return classify_Rn_to_L(req.sign, term, req.n).to_json_dict()
