"""JSON-over-HTTP service exposing the solvers, corpus, and reports.

Stateless by construction: the corpus snapshot given at startup is shared
read-only across request threads, every response is a pure function of the
request plus that snapshot, and numbers are serialized at full precision.
Domain errors map to HTTP 422 with a stable machine code, malformed JSON to
400, unknown routes or methods to 404.
"""

from __future__ import annotations

import json
import math
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .corpus import Corpus, EtaVariant, Mode, embedded_corpus
from .errors import BindFailure, PercepriceError
from .identity import (
    DEFAULT_EPSILON,
    ElasticityPair,
    PricePair,
    assess,
    classify,
    solve_actual_price,
    solve_income_elasticity,
    solve_price_elasticity,
    solve_reference_price,
)
from .reports import (
    figure1,
    figure2,
    plot_payload,
    table1,
    table2,
    table3_4,
    table5_6,
    table_payload,
)
from .statkit import LogTransformPolicy

_MODES = {"recomputed": Mode.RECOMPUTED, "as_published": Mode.AS_PUBLISHED}
_POLICIES = {
    "abs": LogTransformPolicy.ABS_LOG,
    "abs_log": LogTransformPolicy.ABS_LOG,
    "signed-log1p": LogTransformPolicy.SIGNED_LOG1P,
    "signed_log1p": LogTransformPolicy.SIGNED_LOG1P,
    "drop": LogTransformPolicy.DROP_NON_POSITIVE,
    "drop_non_positive": LogTransformPolicy.DROP_NON_POSITIVE,
}
_VARIANTS = {
    "reconciled": EtaVariant.SIGN_RECONCILED,
    "sign_reconciled": EtaVariant.SIGN_RECONCILED,
    "as_printed": EtaVariant.AS_PRINTED,
}
_SOLVE_INPUTS = {
    "pa": ("pr", "eta_p", "eta_i"),
    "pr": ("pa", "eta_p", "eta_i"),
    "eta_p": ("pa", "pr", "eta_i"),
    "eta_i": ("pa", "pr", "eta_p"),
}


class _Invalid(Exception):
    """Request payload fails schema validation."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


def _number(body: dict, key: str, optional: bool = False) -> float | None:
    if key not in body or body[key] is None:
        if optional:
            return None
        raise _Invalid(f"missing required field {key!r}", field=key)
    value = body[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _Invalid(f"field {key!r} must be a number", field=key)
    value = float(value)
    if not math.isfinite(value):
        raise _Invalid(f"field {key!r} must be finite", field=key)
    return value


def _choice(params: dict, key: str, table: dict, default):
    raw = params.get(key, [None])[0]
    if raw is None:
        return default
    if raw not in table:
        raise _Invalid(
            f"query parameter {key!r} must be one of {sorted(set(table))}", field=key
        )
    return table[raw]


def _dataset_payload(corpus: Corpus, mode: Mode) -> dict:
    records = []
    for record in corpus:
        recomputed_ratio = record.eta_p / record.eta_i if record.eta_i != 0 else None
        recomputed_error = (
            recomputed_ratio - 1.0 if recomputed_ratio is not None else None
        )
        if mode is Mode.RECOMPUTED:
            ratio, error = recomputed_ratio, recomputed_error
        else:
            ratio, error = record.published_ratio, record.published_error
        classification = (
            classify(error, DEFAULT_EPSILON).api_name if error is not None else None
        )
        records.append(
            {
                "commodity": record.commodity,
                "eta_p": record.eta_p,
                "eta_i": record.eta_i,
                "source": record.source,
                "published_ratio": record.published_ratio,
                "published_error": record.published_error,
                "recomputed_ratio": recomputed_ratio,
                "recomputed_error": recomputed_error,
                "ratio": ratio,
                "error": error,
                "classification": classification,
            }
        )
    return {"count": len(records), "mode": mode.value, "records": records}


class _Handler(BaseHTTPRequestHandler):
    server_version = "perceprice"
    protocol_version = "HTTP/1.1"

    @property
    def corpus(self) -> Corpus:
        return self.server.corpus  # type: ignore[attr-defined]

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib name
        pass

    def _send(self, status: int, payload: dict | None) -> None:
        body = b""
        if payload is not None:
            body = (json.dumps(payload, ensure_ascii=False) + "\n").encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        if body:
            self.wfile.write(body)

    def _fail(self, status: int, code: str, message: str, field: str | None = None) -> None:
        payload = {"code": code, "message": message}
        if field:
            payload["field"] = field
        self._send(status, payload)

    def _not_found(self) -> None:
        self._fail(404, "not_found", f"no such route: {self.command} {self.path}")

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        try:
            body = json.loads(raw.decode("utf-8") or "null")
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise _MalformedBody(str(exc)) from exc
        if not isinstance(body, dict):
            raise _Invalid("request body must be a JSON object")
        return body

    def do_OPTIONS(self) -> None:  # noqa: N802 - stdlib dispatch name
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802 - stdlib dispatch name
        try:
            self._route_get()
        except _Invalid as exc:
            self._fail(422, "validation_failed", str(exc), exc.field)
        except PercepriceError as exc:
            self._fail(422, exc.code, str(exc), getattr(exc, "field", None))
        except Exception as exc:  # pragma: no cover - defensive
            self._fail(500, "internal_error", str(exc))

    def do_POST(self) -> None:  # noqa: N802 - stdlib dispatch name
        try:
            self._route_post()
        except _MalformedBody as exc:
            self._fail(400, "malformed_json", str(exc))
        except _Invalid as exc:
            self._fail(422, "validation_failed", str(exc), exc.field)
        except ValueError as exc:
            self._fail(422, "validation_failed", str(exc))
        except PercepriceError as exc:
            self._fail(422, exc.code, str(exc), getattr(exc, "field", None))
        except Exception as exc:  # pragma: no cover - defensive
            self._fail(500, "internal_error", str(exc))

    def _route_get(self) -> None:
        url = urlsplit(self.path)
        params = parse_qs(url.query)
        path = url.path.rstrip("/") or "/"
        if path == "/health":
            self._send(200, {"status": "ok"})
            return
        if path == "/v1/dataset":
            mode = _choice(params, "mode", _MODES, Mode.RECOMPUTED)
            self._send(200, _dataset_payload(self.corpus, mode))
            return
        if path.startswith("/v1/replicate/"):
            self._replicate(path.removeprefix("/v1/replicate/"), params)
            return
        if path.startswith("/v1/figures/"):
            self._figure(path.removeprefix("/v1/figures/"), params)
            return
        self._not_found()

    def _replicate(self, name: str, params: dict) -> None:
        mode = _choice(params, "mode", _MODES, Mode.RECOMPUTED)
        variant = _choice(params, "eta_variant", _VARIANTS, EtaVariant.SIGN_RECONCILED)
        policy = _choice(params, "log_policy", _POLICIES, LogTransformPolicy.ABS_LOG)
        corpus = self.corpus
        if name == "table1":
            table = table1(corpus, mode, variant)
        elif name == "table2":
            table = table2(corpus, mode)
        elif name in ("table3", "table4"):
            quadratic, linear = table3_4(corpus, eta_variant=variant)
            table = quadratic if name == "table3" else linear
        elif name in ("table5", "table6"):
            income, price = table5_6(
                corpus, policy=policy, ratio_mode=mode, eta_variant=variant
            )
            table = income if name == "table5" else price
        else:
            self._not_found()
            return
        self._send(200, table_payload(table))

    def _figure(self, name: str, params: dict) -> None:
        mode = _choice(params, "mode", _MODES, Mode.RECOMPUTED)
        variant = _choice(params, "eta_variant", _VARIANTS, EtaVariant.SIGN_RECONCILED)
        if name == "figure1":
            plot = figure1(self.corpus, mode, eta_variant=variant)
        elif name == "figure2":
            plot = figure2(self.corpus, eta_variant=variant)
        else:
            self._not_found()
            return
        self._send(200, plot_payload(plot))

    def _route_post(self) -> None:
        path = urlsplit(self.path).path.rstrip("/")
        if path == "/v1/perception/assess":
            body = self._read_body()
            eta_p = _number(body, "eta_p")
            eta_i = _number(body, "eta_i")
            epsilon = _number(body, "epsilon", optional=True)
            outcome = assess(
                ElasticityPair(eta_p, eta_i),
                epsilon=DEFAULT_EPSILON if epsilon is None else epsilon,
            )
            self._send(
                200,
                {
                    "ratio": outcome.ratio,
                    "error": outcome.error,
                    "classification": outcome.classification.api_name,
                    "epsilon": outcome.epsilon,
                },
            )
            return
        if path == "/v1/perception/solve":
            body = self._read_body()
            target = body.get("solve_for")
            if target not in _SOLVE_INPUTS:
                raise _Invalid(
                    f"solve_for must be one of {sorted(_SOLVE_INPUTS)}", field="solve_for"
                )
            known = {key: _number(body, key) for key in _SOLVE_INPUTS[target]}
            if target == "pa":
                result = solve_actual_price(
                    known["pr"], ElasticityPair(known["eta_p"], known["eta_i"])
                )
            elif target == "pr":
                result = solve_reference_price(
                    known["pa"], ElasticityPair(known["eta_p"], known["eta_i"])
                )
            elif target == "eta_p":
                result = solve_price_elasticity(
                    PricePair(known["pa"], known["pr"]), known["eta_i"]
                )
            else:
                result = solve_income_elasticity(
                    PricePair(known["pa"], known["pr"]), known["eta_p"]
                )
            self._send(200, {target: result.value, "warnings": list(result.warnings)})
            return
        self._not_found()


class _MalformedBody(Exception):
    """Request body is not parseable JSON."""


class _Server(ThreadingHTTPServer):
    daemon_threads = True
    allow_reuse_address = True


def create_server(host: str, port: int, corpus: Corpus | None = None) -> ThreadingHTTPServer:
    """Bind and return a server; callers drive serve_forever/shutdown."""
    try:
        server = _Server((host, port), _Handler)
    except OSError as exc:
        raise BindFailure(f"cannot bind {host}:{port}: {exc}") from exc
    server.corpus = corpus if corpus is not None else embedded_corpus()  # type: ignore[attr-defined]
    return server


def serve_forever(host: str, port: int, corpus: Corpus | None = None) -> None:
    """Run the service until interrupted."""
    server = create_server(host, port, corpus)
    bound_host, bound_port = server.server_address[0], server.server_address[1]
    print(f"serving on http://{bound_host}:{bound_port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
