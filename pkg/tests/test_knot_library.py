import json
import random

import pytest

from hfsplice.cfk_complex import validate
from hfsplice.knot_library import NAMES, get, random_complex, resolve, scramble
from hfsplice.type_d import TypeDStructure


def test_all_fixtures_load():
    for name in NAMES:
        e = get(name)
        assert e.name == name
        assert e.is_complex == (name != "sigma237_core_cfd")


def test_unknown_fixture():
    with pytest.raises(KeyError):
        get("trefoil")


def test_sigma237_fixture_shape():
    d = get("sigma237_core_cfd").payload
    assert set(d.names) == {"xi_0", "xi_1", "xi_2", "eta_1", "eta_2", "kappa", "lambda", "mu_1", "mu_2"}
    assert len(d.arrows()) == 11
    assert ("xi_0", "12", "xi_0") in d.arrows()
    with pytest.raises(TypeError):
        get("sigma237_core_cfd").normal_form()


def test_resolve_reads_files(tmp_path):
    p = tmp_path / "k.json"
    p.write_text(json.dumps(get("figure8").payload.to_json()))
    assert resolve(str(p)).payload.to_json() == get("figure8").payload.to_json()
    q = tmp_path / "d.json"
    q.write_text(json.dumps(get("sigma237_core_cfd").payload.to_json()))
    assert isinstance(resolve(str(q)).payload, TypeDStructure)


def test_random_complexes_respect_limits():
    rng = random.Random(7)
    for _ in range(50):
        c = random_complex(rng, max_genus=3, max_n=4)
        assert validate(c).ok
        assert c.rank <= 9 and max(c.alexander) <= 3


def test_scramble_keeps_rank_one_complexes():
    u = get("unknot").payload
    assert scramble(u, random.Random(0), 5).to_json() == u.to_json()
