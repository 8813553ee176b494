import json
from pathlib import Path

import pytest

from eqclass.builders import projective_datum
from eqclass.cli import main
from eqclass.fixtures import load_json

jsonschema = pytest.importorskip("jsonschema")

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "schemas" / "eqclass.schema.json").read_text())


def validate(instance, name):
    jsonschema.validate(instance, dict(SCHEMA, **{"$ref": f"#/$defs/{name}"}))


def cli(capsys, *argv):
    main(list(argv))
    return json.loads(capsys.readouterr().out)


def test_schema_is_well_formed():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_datum_and_fixture():
    validate(projective_datum(3, (0, 1, 1, 5), 6).to_json(), "datum")
    validate(load_json("s3_p2.json")["datum"], "datum")
    validate({"product": [{"projective_space": {"n": 1, "weights": [0, 1], "conductor": 2}}, {"wproj": {"weights": [1, 2]}}]}, "builder")


@pytest.mark.parametrize(
    "argv, name",
    [
        (["genus", "--n", "2", "--weights", "0,1,2", "--conductor", "3", "--y", "zeta:1/3"], "genus_output"),
        (["quotient-genus", "--builder", "wproj-cover", "--weights", "1,2"], "quotient_genus_output"),
        (["wproj-class", "--weights", "1,1,2"], "wproj_class_output"),
        (["specialize", "--input", '{"terms": [[0, 1], [1, -1]], "denom_power": 0}', "--y", "1/2"], "specialize_output"),
        (["verify", "--suite", "9"], "verify_output"),
        (["genus", "--n", "1", "--weights", "0,1", "--conductor", "100"], "error"),
        (["defect", "--input", '{"group_order": 2, "points": {"g": [{"angles": ["1/2"], "chi_g": 2, "chi_plain": 1}]}}'], "defect_output"),
    ],
)
def test_cli_outputs(capsys, argv, name):
    validate(cli(capsys, *argv), name)


def test_bad_instance_rejected():
    with pytest.raises(jsonschema.ValidationError):
        validate({"conductor": 3, "coeffs": [1.5]}, "cyclotomic")
