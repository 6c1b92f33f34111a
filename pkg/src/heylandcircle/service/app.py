"""HTTP service exposing the circle-diagram library.

Every endpoint accepts the raw test data, so requests are self-contained
and the service holds no state between calls. Library errors surface as
422 responses carrying the error class name and message.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Response

from ..construction import build_diagram
from ..errors import DiagramError
from ..oracle import validate_report
from ..performance import extremal_points, point_at_output, point_at_slip, sweep
from ..render import RenderOptions, render_svg
from ..testdata import MachineTestData, refer_to_rated
from .schemas import (
    DiagramOut,
    OperatingPointOut,
    QueryIn,
    RenderIn,
    SweepIn,
    SweepOut,
    TestDataIn,
    ValidateIn,
    ValidateOut,
)

app = FastAPI(
    title="heylandcircle",
    description="Circle-diagram construction and performance queries "
    "for induction-machine test data.",
    version="0.1.0",
)


def _reject(exc: DiagramError) -> HTTPException:
    return HTTPException(
        status_code=422,
        detail={"error": type(exc).__name__, "message": str(exc)},
    )


def _build(data_in: TestDataIn):
    data = data_in.to_machine_data()
    return data, build_diagram(refer_to_rated(data), data)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/diagram", response_model=DiagramOut)
def diagram(data_in: TestDataIn) -> DiagramOut:
    try:
        _, diag = _build(data_in)
    except DiagramError as exc:
        raise _reject(exc) from exc
    return DiagramOut.from_diagram(diag)


@app.post("/query", response_model=OperatingPointOut)
def query(request: QueryIn) -> OperatingPointOut:
    try:
        data, diag = _build(request.data)
        if request.at_rated:
            op = point_at_output(diag, data.P_rated_w)
        elif request.output_kw is not None:
            op = point_at_output(diag, request.output_kw * 1000.0)
        else:
            op = point_at_slip(diag, request.slip)
    except DiagramError as exc:
        raise _reject(exc) from exc
    return OperatingPointOut.from_operating_point(op)


@app.post("/sweep", response_model=SweepOut)
def sweep_endpoint(request: SweepIn) -> SweepOut:
    try:
        _, diag = _build(request.data)
        rows = sweep(diag, request.s_from, request.s_to, request.n,
                     log_spacing=request.log_spacing)
    except DiagramError as exc:
        raise _reject(exc) from exc
    return SweepOut(rows=[OperatingPointOut.from_operating_point(op) for op in rows])


@app.post("/validate", response_model=ValidateOut)
def validate(request: ValidateIn) -> ValidateOut:
    try:
        report = validate_report(request.data.to_machine_data(), samples=request.samples)
    except DiagramError as exc:
        raise _reject(exc) from exc
    return ValidateOut.from_report(report)


@app.post("/render")
def render(request: RenderIn) -> Response:
    try:
        _, diag = _build(request.data)
        opts = RenderOptions(
            width_px=request.width_px,
            height_px=request.height_px,
            margin_px=request.margin_px,
            show_full_circle=request.show_full_circle,
            show_slip_lines=tuple(request.slip_lines),
            show_labels=request.show_labels,
            title=request.title,
        )
        svg = render_svg(diag, extremal_points(diag), opts)
    except DiagramError as exc:
        raise _reject(exc) from exc
    return Response(content=svg, media_type="image/svg+xml")
