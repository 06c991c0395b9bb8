"""HTTP service exposing the simplification pipeline.

Endpoints:

* ``GET /health`` -> 200 {"status": "ok"} once resources are loaded.
* ``POST /simplify`` with {"sentence": str, "mode": "we"|"transformer",
  "phi": number?, "model": str?} -> 200 {"simplified": str,
  "trace": [...], "pp_score": number, "trace_version": "1"}.

Malformed bodies get 400.  A transformer request whose embedding provider
is unconfigured or unreachable gets 503; a provider that fails mid-sentence
degrades that position to "no replacement" inside the trace instead of
failing the request.  Requests share the startup-loaded resources
read-only, so concurrent requests are independent.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .embeddings import EmbeddingError
from .pipeline import TRACE_VERSION, Mode, simplify
from .service import DEFAULT_MODEL_ID, Resources, ResourceError

__all__ = ["create_app"]


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def _unavailable(message: str) -> JSONResponse:
    return JSONResponse(status_code=503, content={"error": message})


def create_app(resources: Resources) -> FastAPI:
    app = FastAPI(title="lexsimp")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/simplify")
    async def simplify_endpoint(request: Request):
        try:
            body = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError):
            return _bad_request("request body must be a JSON object")
        if not isinstance(body, dict):
            return _bad_request("request body must be a JSON object")

        sentence = body.get("sentence")
        if not isinstance(sentence, str) or not sentence.split():
            return _bad_request("'sentence' must be a non-empty string")

        mode_value = body.get("mode", resources.default_mode.value)
        try:
            mode = Mode(mode_value)
        except ValueError:
            return _bad_request(f"'mode' must be 'we' or 'transformer', got {mode_value!r}")

        phi = body.get("phi", resources.default_phi)
        if not isinstance(phi, (int, float)) or isinstance(phi, bool) or not 0.0 <= phi <= 1.0:
            return _bad_request(f"'phi' must be a number in [0, 1], got {phi!r}")

        model_id = body.get("model", DEFAULT_MODEL_ID)
        if not isinstance(model_id, str) or not model_id:
            return _bad_request("'model' must be a non-empty string")

        if mode is Mode.WORD_EMBEDDING and resources.word_vectors is None:
            return _unavailable("word-embedding mode is not configured (no word vectors)")
        if mode is Mode.TRANSFORMER:
            try:
                resources.provider_for(model_id).ping()
            except (ResourceError, EmbeddingError) as exc:
                return _unavailable(str(exc))

        config = resources.pipeline_config(mode, float(phi), model_id)
        result = simplify(sentence.split(), config)
        return {
            "simplified": result.text,
            "trace": [trace.to_dict() for trace in result.traces],
            "pp_score": result.final_pp_score.combined,
            "trace_version": TRACE_VERSION,
        }

    return app
