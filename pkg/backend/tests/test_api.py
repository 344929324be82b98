import httpx
import pytest
from fastapi.testclient import TestClient

from main import app

client = TestClient(app)


class TestService:
    def test_root(self):
        response = client.get("/")
        assert response.status_code == 200
        assert response.json()["status"] == "running"

    def test_health(self):
        assert client.get("/health").json() == {"status": "healthy", "service": "cofinite-injection-engine"}


class TestAlgebraRoutes:
    def test_eval(self):
        response = client.post("/api/v1/eval", json={"expression": "idem{0} * perm(0 1)"})
        assert response.status_code == 200
        assert response.json() == {"element": "cfinj{k=0; N=2; t=[0->_, 1->0]}"}

    def test_stats(self):
        body = client.post("/api/v1/stats", json={"expression": "shift(1)"}).json()
        assert (body["dbar"], body["rbar"], body["index"]) == (0, 1, -1)

    def test_classify(self):
        body = client.post("/api/v1/classify", json={"expression": "perm(0 1)"}).json()
        assert body["kinds"] == ["finitary_unit", "unit"]

    def test_window(self):
        body = client.post("/api/v1/window", json={"expression": "idem{0}", "width": 3}).json()
        assert body["rows"] == [None, 1, 2]
        assert body["text"] == "[0->_, 1->1, 2->2]"

    def test_leq(self):
        assert client.post("/api/v1/leq", json={"left": "idem{0}", "right": "id"}).json() == {"result": True}

    def test_parse_error_is_bad_request(self):
        response = client.post("/api/v1/eval", json={"expression": "shift("})
        assert response.status_code == 400
        body = response.json()
        assert body["error"] == "ParseError"
        assert body["details"] == {"exit_code": 1}

    def test_domain_error_is_unprocessable(self):
        response = client.post("/api/v1/leq", json={"left": "shift(1)", "right": "id"})
        assert response.status_code == 422
        assert response.json()["error"] == "NotIdempotent"


class TestGreenRoutes:
    def test_relation(self):
        response = client.post("/api/v1/green", json={"relation": "R", "left": "shift(1)", "right": "id"})
        assert response.json() == {"result": True}

    def test_hclass(self):
        body = client.post("/api/v1/green/hclass", json={"domain_holes": [0], "range_holes": []}).json()
        assert body["element"] == "cfinj{k=-1; N=1; t=[0->_]}"

    def test_hclass_rejects_negative_holes(self):
        response = client.post("/api/v1/green/hclass", json={"domain_holes": [], "range_holes": [-1]})
        assert response.status_code == 422

    def test_dwitness(self):
        body = client.post("/api/v1/green/dwitness", json={"left": "id", "right": "idem{0}"}).json()
        assert body["element"] == "cfinj{k=1; N=0; t=[]}"

    def test_factor(self):
        body = client.post("/api/v1/green/factor", json={"left": "shift(1)", "right": "id"}).json()
        assert body == {"gamma": "cfinj{k=0; N=0; t=[]}", "delta": "cfinj{k=-1; N=1; t=[0->_]}"}

    def test_sepidem(self):
        body = client.post("/api/v1/green/sepidem", json={"expression": "perm(1 2)"}).json()
        assert body == {"idempotent": "cfinj{k=0; N=2; t=[0->0, 1->_]}", "point": 1}

    def test_sepidem_on_identity(self):
        response = client.post("/api/v1/green/sepidem", json={"expression": "id"})
        assert response.status_code == 422
        assert response.json()["details"] == {"exit_code": 2}


class TestCongruenceRoutes:
    def test_index(self):
        assert client.post("/api/v1/index", json={"expression": "shift(-1)"}).json() == {"index": 1}

    def test_dequiv(self):
        assert client.post("/api/v1/dequiv", json={"left": "idem{0}", "right": "perm(0 1)"}).json() == {"result": True}

    def test_sigma(self):
        body = client.post("/api/v1/sigma", json={"left": "perm(0 1)", "right": "id"}).json()
        assert body == {"related": True, "witness": "cfinj{k=0; N=2; t=[0->_, 1->_]}"}
        body = client.post("/api/v1/sigma", json={"left": "shift(1)", "right": "id"}).json()
        assert body == {"related": False, "witness": None}

    def test_unitrep_with_targets(self):
        body = client.post("/api/v1/unitrep", json={"expression": "idem{0,1}", "targets": [1, 0]}).json()
        assert body["unit"] == "cfinj{k=0; N=2; t=[0->1, 1->0]}"

    def test_solve(self):
        body = client.post("/api/v1/solve", json={"side": "right", "left": "idem{0}", "right": "idem{0}"}).json()
        assert body["count"] == 2
        assert body["solutions"] == ["cfinj{k=0; N=0; t=[]}", "cfinj{k=0; N=1; t=[0->_]}"]


class TestChainRoutes:
    def test_generators(self):
        body = client.post("/api/v1/chain/generators", json={"start": "idem{0}", "prefix": [3]}).json()
        assert body["p"] == "cfinj{k=1; N=4; t=[0->_, 1->2, 2->4, 3->1]}"
        assert body["unit"] == "cfinj{k=0; N=1; t=[0->_]}"

    def test_element(self):
        body = client.post("/api/v1/chain/element", json={"chain": {}, "position": 4}).json()
        assert body["element"] == "cfinj{k=0; N=3; t=[0->_, 1->_, 2->_]}"

    def test_embed(self):
        body = client.post("/api/v1/chain/embed", json={"members": ["id", "idem{2}"]}).json()
        assert body["chain"] == "chain{start=cfinj{k=0; N=0; t=[]}; prefix=[2]}"

    def test_translate(self):
        body = client.post("/api/v1/chain/translate", json={"nu": "idem{0}", "count": 2}).json()
        assert body["members"] == ["cfinj{k=0; N=1; t=[0->_]}", "cfinj{k=0; N=2; t=[0->_, 1->_]}"]

    def test_collapse(self):
        body = client.post("/api/v1/chain/collapse", json={"nu": "idem{0}", "count": 2}).json()
        assert body["chain"] == "chain{start=cfinj{k=0; N=0; t=[]}; prefix=[0,1]}"

    def test_separate(self):
        body = client.post("/api/v1/chain/separate", json={"left": "shift(1)", "right": "id"}).json()
        assert body["lower"] == "cfinj{k=0; N=1; t=[0->_]}"
        assert body["upper"] == "cfinj{k=0; N=0; t=[]}"

    def test_embed_rejects_ascending_members(self):
        response = client.post("/api/v1/chain/embed", json={"members": ["idem{0}", "id"]})
        assert response.status_code == 422
        assert response.json()["error"] == "NotAChain"


@pytest.mark.asyncio
async def test_eval_over_async_transport():
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://test") as async_client:
        response = await async_client.post("/api/v1/eval", json={"expression": "shift(1)^2"})
    assert response.status_code == 200
    assert response.json() == {"element": "cfinj{k=2; N=0; t=[]}"}
