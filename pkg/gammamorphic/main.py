"""FastAPI service for the gammamorphic evaluators and the verification suite."""

import asyncio
import logging
from typing import Any, Dict, List, Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import config
from .cli import RunManifest, build_table
from .errors import GammamorphicError
from .identities import CATALOG, catalog_ids
from .registry import ConstantRow, EvalParams, TableRow, constants, evaluate, function_names
from .report import ComplexPair, Status

logger = logging.getLogger(__name__)

app = FastAPI(title="Gammamorphic API")

# Enable CORS for local development
app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:5173", "http://localhost:3000"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class EvalRequest(BaseModel):
    """Request to evaluate one function at one argument."""
    function: str
    x: Optional[Union[float, str]] = None
    params: EvalParams = EvalParams()
    log: bool = False


class EvalResponse(BaseModel):
    function: str
    value: ComplexPair
    abs_error: float
    route: str


class VerifyRequest(BaseModel):
    """Request to run the suite, optionally on a subset of identities."""
    only: Optional[List[str]] = None
    density: str = config.SUITE_DENSITY
    tolerances: Dict[str, float] = {}


class IdentityInfo(BaseModel):
    id: str
    formula: str
    domain: str
    tolerance: float
    status: Status
    grid_points: int


def _unprocessable(e: GammamorphicError) -> HTTPException:
    return HTTPException(status_code=422, detail=f"{type(e).__name__}: {e}")


@app.get("/")
async def root():
    """Health check endpoint."""
    return {"status": "ok", "service": "Gammamorphic API", "functions": function_names()}


@app.post("/api/eval", response_model=EvalResponse)
async def eval_function(request: EvalRequest):
    """Evaluate a registered function."""
    try:
        result = await asyncio.to_thread(evaluate, request.function, request.x, request.params, request.log)
    except GammamorphicError as e:
        raise _unprocessable(e)
    return EvalResponse(
        function=request.function,
        value=ComplexPair.of(result.value),
        abs_error=result.abs_error,
        route=result.route.value,
    )


@app.post("/api/table", response_model=List[TableRow])
async def table(manifest: RunManifest):
    """Evaluate a function over the manifest grid; the first failing argument aborts."""
    if manifest.function is None:
        raise HTTPException(status_code=422, detail="manifest names no function")
    try:
        return await asyncio.to_thread(build_table, manifest)
    except GammamorphicError as e:
        raise _unprocessable(e)


@app.post("/api/verify")
async def verify(request: VerifyRequest):
    """Run the verification suite and return reports plus the summary."""
    from .verification_graph import run_suite

    try:
        result = await asyncio.to_thread(run_suite, request.only, request.density, None, request.tolerances)
    except GammamorphicError as e:
        raise _unprocessable(e)
    return result.to_json_dict()


@app.get("/api/constants", response_model=List[ConstantRow])
async def get_constants():
    """γ, ζ(3), ln A, A, ln ω̃, ζ'(-1) and ln G(1/2)."""
    return await asyncio.to_thread(constants)


@app.get("/api/identities", response_model=List[IdentityInfo])
async def list_identities(density: str = config.SUITE_DENSITY):
    """The identity catalog in canonical order."""
    try:
        return [
            IdentityInfo(
                id=i.value,
                formula=CATALOG[i].formula,
                domain=CATALOG[i].domain,
                tolerance=CATALOG[i].tolerance,
                status=CATALOG[i].status,
                grid_points=len(CATALOG[i].params_for(density)),
            )
            for i in catalog_ids()
        ]
    except GammamorphicError as e:
        raise _unprocessable(e)


if __name__ == "__main__":
    import uvicorn
    logging.basicConfig(level=config.LOG_LEVEL)
    uvicorn.run(app, host="0.0.0.0", port=config.API_PORT)
