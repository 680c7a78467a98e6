"""Stateless HTTP API over the ranking engine.

Endpoints accept the same matrix document as the file format, plus an
upper-triangular "judgments" list from which reciprocals are completed
server-side.  All responses use the canonical JSON renderer, so identical
request bodies yield byte-identical response bodies.
"""

import os

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from .errors import DomainError, InputError, ValidationError
from .io import parse_document
from .jsonfmt import dumps_canonical
from .report import build_check_report, build_compare_report, build_rank_report
from .solvability import bound_table


def _json_response(payload, status_code=200):
    return Response(content=dumps_canonical(payload),
                    media_type="application/json", status_code=status_code)


def _validation_payload(exc):
    payload = {"error": "validation", "detail": str(exc)}
    index = getattr(exc, "index", None)
    if index is not None:
        payload["index"] = list(index) if isinstance(index, tuple) else index
    return payload


def create_app(ui_dir=None) -> FastAPI:
    app = FastAPI(title="HRE ranking service", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    async def _parse_body(request: Request):
        try:
            doc = await request.json()
        except Exception as exc:
            raise InputError(f"invalid JSON body: {exc}") from exc
        return parse_document(doc)

    @app.post("/api/rank")
    async def api_rank(request: Request):
        try:
            M, p = await _parse_body(request)
            report = build_rank_report(M, p)
        except (InputError, ValidationError, DomainError) as exc:
            return _json_response(_validation_payload(exc), 422)
        if report["error"] is not None:
            return _json_response(
                {"kind": report["error"]["kind"],
                 "detail": report["error"]["detail"],
                 "report": report},
                409,
            )
        return _json_response(report)

    @app.post("/api/check")
    async def api_check(request: Request):
        try:
            M, p = await _parse_body(request)
            report = build_check_report(M, p)
        except (InputError, ValidationError, DomainError) as exc:
            return _json_response(_validation_payload(exc), 422)
        return _json_response(report)

    @app.post("/api/compare")
    async def api_compare(request: Request):
        try:
            M, p = await _parse_body(request)
            report = build_compare_report(M, p)
        except (InputError, ValidationError, DomainError) as exc:
            return _json_response(_validation_payload(exc), 422)
        return _json_response(report)

    @app.get("/api/bound-table")
    async def api_bound_table(n_max: int = 7):
        try:
            table = bound_table(n_max)
        except DomainError as exc:
            return _json_response({"error": "domain", "detail": str(exc)}, 400)
        return _json_response({str(n): {str(r): v for r, v in row.items()}
                               for n, row in table.items()})

    if ui_dir:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def main(argv=None):
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="Run the HRE ranking service")
    parser.add_argument("--host", default=os.environ.get("HRE_HOST", "127.0.0.1"))
    parser.add_argument("--port", type=int,
                        default=int(os.environ.get("HRE_PORT", "8000")))
    parser.add_argument("--ui-dir", default=os.environ.get("HRE_UI_DIR"))
    args = parser.parse_args(argv)
    uvicorn.run(create_app(ui_dir=args.ui_dir), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
