"""HTTP service behaviour against a live threaded instance."""

import json
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor

import pytest

from perceprice import classify
from perceprice.errors import BindFailure
from perceprice.service import create_server


@pytest.fixture(scope="module")
def base_url():
    server = create_server("127.0.0.1", 0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        yield f"http://127.0.0.1:{server.server_address[1]}"
    finally:
        server.shutdown()
        server.server_close()
        thread.join(timeout=5)


def request(base_url, method, path, body=None):
    data = None
    headers = {}
    if body is not None:
        data = body if isinstance(body, bytes) else json.dumps(body).encode("utf-8")
        headers["Content-Type"] = "application/json"
    req = urllib.request.Request(base_url + path, data=data, method=method, headers=headers)
    try:
        with urllib.request.urlopen(req, timeout=30) as resp:
            return resp.status, dict(resp.headers), resp.read()
    except urllib.error.HTTPError as err:
        return err.code, dict(err.headers), err.read()


def get_json(base_url, path):
    status, headers, raw = request(base_url, "GET", path)
    return status, headers, json.loads(raw)


def post_json(base_url, path, body):
    status, headers, raw = request(base_url, "POST", path, body)
    return status, headers, json.loads(raw)


def test_health(base_url):
    status, headers, payload = get_json(base_url, "/health")
    assert status == 200
    assert payload == {"status": "ok"}
    assert headers["Content-Type"].startswith("application/json")


def test_trailing_slash_tolerated(base_url):
    status, _, payload = get_json(base_url, "/health/")
    assert status == 200
    assert payload == {"status": "ok"}


def test_cors_headers_everywhere(base_url):
    for path in ("/health", "/no-such-route"):
        _, headers, _ = request(base_url, "GET", path)
        assert headers["Access-Control-Allow-Origin"] == "*"


def test_options_preflight(base_url):
    status, headers, raw = request(base_url, "OPTIONS", "/v1/perception/assess")
    assert status == 204
    assert raw == b""
    assert "POST" in headers["Access-Control-Allow-Methods"]
    assert headers["Access-Control-Allow-Headers"] == "Content-Type"


def test_dataset_recomputed(base_url, corpus):
    status, _, payload = get_json(base_url, "/v1/dataset")
    assert status == 200
    assert payload["count"] == 30
    assert payload["mode"] == "recomputed"
    assert len(payload["records"]) == 30

    by_name = {rec["commodity"]: rec for rec in payload["records"]}
    onions = by_name["Organic onions"]
    assert onions["eta_p"] == -1.56
    assert onions["eta_i"] == 0.32
    assert onions["ratio"] == -1.56 / 0.32
    assert onions["error"] == -1.56 / 0.32 - 1.0
    assert onions["classification"] == classify(onions["error"]).api_name
    assert onions["classification"] == "overestimate"

    for rec in payload["records"]:
        assert rec["ratio"] == rec["recomputed_ratio"]
        assert rec["source"]


def test_dataset_as_published(base_url):
    status, _, payload = get_json(base_url, "/v1/dataset?mode=as_published")
    assert status == 200
    assert payload["mode"] == "as_published"
    by_name = {rec["commodity"]: rec for rec in payload["records"]}
    sugar = by_name["Sugar, USA"]
    # published sign disagrees with the stored elasticities for this record
    assert sugar["ratio"] == sugar["published_ratio"] == 0.33
    assert sugar["recomputed_ratio"] == pytest.approx(-0.3274, abs=5e-4)


def test_dataset_rejects_unknown_mode(base_url):
    status, _, payload = get_json(base_url, "/v1/dataset?mode=bogus")
    assert status == 422
    assert payload["code"] == "validation_failed"
    assert payload["field"] == "mode"


def test_assess_basic(base_url):
    status, _, payload = post_json(
        base_url, "/v1/perception/assess", {"eta_p": -1.2, "eta_i": 0.4}
    )
    assert status == 200
    assert payload["ratio"] == -1.2 / 0.4
    assert payload["error"] == -1.2 / 0.4 - 1.0
    assert payload["classification"] == "overestimate"
    assert payload["epsilon"] == 0.05


def test_assess_custom_epsilon(base_url):
    status, _, payload = post_json(
        base_url, "/v1/perception/assess", {"eta_p": 1.04, "eta_i": 1.0, "epsilon": 0.1}
    )
    assert status == 200
    assert payload["classification"] == "aligned"
    assert payload["epsilon"] == 0.1


def test_assess_zero_income_elasticity(base_url):
    status, _, payload = post_json(
        base_url, "/v1/perception/assess", {"eta_p": 1.0, "eta_i": 0.0}
    )
    assert status == 422
    assert payload["code"] == "zero_income_elasticity"


def test_assess_schema_violations(base_url):
    cases = [
        ({"eta_p": True, "eta_i": 1.0}, "eta_p"),
        ({"eta_p": "1", "eta_i": 1.0}, "eta_p"),
        ({"eta_i": 1.0}, "eta_p"),
        ({"eta_p": 1.0, "eta_i": None}, "eta_i"),
    ]
    for body, field in cases:
        status, _, payload = post_json(base_url, "/v1/perception/assess", body)
        assert status == 422, body
        assert payload["code"] == "validation_failed"
        assert payload["field"] == field


def test_assess_rejects_non_finite_numbers(base_url):
    # json Infinity parses but must fail finiteness validation
    raw = b'{"eta_p": Infinity, "eta_i": 1.0}'
    status, _, raw_out = request(base_url, "POST", "/v1/perception/assess", raw)
    payload = json.loads(raw_out)
    assert status == 422
    assert payload["code"] == "validation_failed"
    assert payload["field"] == "eta_p"


def test_malformed_json_is_400(base_url):
    status, _, raw = request(base_url, "POST", "/v1/perception/assess", b"{nope")
    payload = json.loads(raw)
    assert status == 400
    assert payload["code"] == "malformed_json"


def test_non_object_body_is_422(base_url):
    status, _, raw = request(base_url, "POST", "/v1/perception/assess", b"[1, 2]")
    payload = json.loads(raw)
    assert status == 422
    assert payload["code"] == "validation_failed"


def test_solve_all_four_targets(base_url):
    cases = [
        ({"solve_for": "pa", "pr": 100.0, "eta_p": -1.2, "eta_i": 0.4}, "pa", 20.0),
        ({"solve_for": "pr", "pa": 50.0, "eta_p": -0.3, "eta_i": 0.5}, "pr", 130.0),
        ({"solve_for": "eta_p", "pa": 50.0, "pr": 130.0, "eta_i": 0.5}, "eta_p", -0.3),
        ({"solve_for": "eta_i", "pa": 50.0, "pr": 130.0, "eta_p": -0.3}, "eta_i", 0.5),
    ]
    for body, key, expected in cases:
        status, _, payload = post_json(base_url, "/v1/perception/solve", body)
        assert status == 200, body
        assert payload[key] == pytest.approx(expected, rel=1e-12)
        assert payload["warnings"] == []


def test_solve_passes_warnings_through(base_url):
    status, _, payload = post_json(
        base_url,
        "/v1/perception/solve",
        {"solve_for": "pa", "pr": 100.0, "eta_p": 3.0, "eta_i": 1.0},
    )
    assert status == 200
    assert payload["pa"] == -100.0
    assert len(payload["warnings"]) == 1
    assert "non_physical" in payload["warnings"][0]


def test_solve_singular_rearrangement(base_url):
    status, _, payload = post_json(
        base_url,
        "/v1/perception/solve",
        {"solve_for": "pa", "pr": 100.0, "eta_p": 4.0, "eta_i": 2.0},
    )
    assert status == 422
    assert payload["code"] == "singular_rearrangement"


def test_solve_unknown_target(base_url):
    status, _, payload = post_json(
        base_url, "/v1/perception/solve", {"solve_for": "volume", "pr": 1.0}
    )
    assert status == 422
    assert payload["code"] == "validation_failed"
    assert payload["field"] == "solve_for"


def test_replicate_tables(base_url):
    status, _, payload = get_json(base_url, "/v1/replicate/table1")
    assert status == 200
    assert payload["headers"] == ["", "η_p", "η_i", "η_p / η_i"]
    assert len(payload["rows"]) == 8
    mean = next(row for row in payload["rows"] if row[0] == "Mean")
    assert mean[1] == 0.016833333333333346  # full precision, not print rounding

    status, _, payload = get_json(base_url, "/v1/replicate/table2?mode=as_published")
    assert status == 200
    assert payload["rows"][0][0] == "Non-organic potatoes"

    for name in ("table3", "table4", "table5", "table6"):
        status, _, payload = get_json(base_url, f"/v1/replicate/{name}")
        assert status == 200, name
        assert payload["rows"], name


def test_replicate_respects_query_parameters(base_url):
    _, _, printed = get_json(base_url, "/v1/replicate/table1?eta_variant=as_printed")
    _, _, reconciled = get_json(base_url, "/v1/replicate/table1?eta_variant=reconciled")
    printed_min = next(row for row in printed["rows"] if row[0] == "Minimum")
    reconciled_min = next(row for row in reconciled["rows"] if row[0] == "Minimum")
    assert printed_min[2] == -0.62
    assert reconciled_min[2] == -0.898

    _, _, slog = get_json(base_url, "/v1/replicate/table5?log_policy=signed-log1p")
    assert any("slog1p" in row[0] for row in slog["rows"])


def test_replicate_unknown_artifact_is_404(base_url):
    status, _, payload = get_json(base_url, "/v1/replicate/table9")
    assert status == 404
    assert payload["code"] == "not_found"


def test_figures(base_url):
    status, _, payload = get_json(base_url, "/v1/figures/figure1")
    assert status == 200
    kinds = [series["kind"] for series in payload["series"]]
    assert "histogram" in kinds or "bar" in kinds or len(payload["series"]) >= 1

    status, _, payload = get_json(base_url, "/v1/figures/figure2")
    assert status == 200
    kinds = [series["kind"] for series in payload["series"]]
    assert kinds == ["scatter", "curve"]
    scatter = payload["series"][0]
    assert len(scatter["points"]) == 30

    status, _, payload = get_json(base_url, "/v1/figures/figure9")
    assert status == 404


def test_unknown_route_and_wrong_method(base_url):
    status, _, payload = get_json(base_url, "/v2/dataset")
    assert status == 404
    assert payload["code"] == "not_found"

    status, _, payload = post_json(base_url, "/health", {})
    assert status == 404

    status, _, raw = request(base_url, "GET", "/v1/perception/assess")
    assert status == 404


def test_responses_are_stateless(base_url):
    first = request(base_url, "GET", "/v1/dataset?mode=as_published")[2]
    second = request(base_url, "GET", "/v1/dataset?mode=as_published")[2]
    assert first == second
    assert first.endswith(b"\n")


def test_concurrent_requests(base_url):
    paths = [
        "/health",
        "/v1/dataset",
        "/v1/replicate/table1",
        "/v1/figures/figure2",
    ] * 6

    def hit(path):
        return path, request(base_url, "GET", path)[0]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(hit, paths))
    assert all(status == 200 for _, status in results)


def test_bind_failure_on_taken_port(base_url):
    port = int(base_url.rsplit(":", 1)[1])
    with pytest.raises(BindFailure):
        create_server("127.0.0.1", port)
