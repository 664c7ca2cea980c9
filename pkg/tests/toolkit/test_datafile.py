import json

import pytest

import catalog
import constants
from toolkit.datafile import load_matrices, read_matrices, rows_checksum
from toolkit.errors import ChecksumError, MissingCorpusError, ParseError, SchemaError

ROWS = [[2, -1], [-1, 2]]


def write_data(tmp_path, matrices, digests, schema=constants.SCHEMA):
    path = tmp_path / "gamma_test.json"
    document = {
        "schema": schema,
        "name": "test",
        "matrices": {key: [[str(x) for x in row] for row in rows] for key, rows in matrices.items()},
        "sha256": digests,
    }
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


def test_rows_checksum():
    assert rows_checksum(ROWS) == rows_checksum(((2, -1), (-1, 2)))
    assert rows_checksum(ROWS) != rows_checksum([[2, -1], [-1, 3]])


def test_read_verified(tmp_path):
    path = write_data(tmp_path, {"gram": ROWS}, {"gram": rows_checksum(ROWS)})
    assert read_matrices(path) == {"gram": ((2, -1), (-1, 2))}


@pytest.mark.parametrize("digests", [{"gram": "0" * 64}, {}])
def test_tampered_or_unsigned_matrix(tmp_path, digests):
    path = write_data(tmp_path, {"gram": ROWS}, digests)
    with pytest.raises(ChecksumError):
        read_matrices(path)


def test_edited_entry_is_caught(tmp_path):
    path = write_data(tmp_path, {"gram": ROWS}, {"gram": rows_checksum(ROWS)})
    path.write_text(path.read_text(encoding="utf-8").replace('"-1"', '"1"', 1), encoding="utf-8")
    with pytest.raises(ChecksumError):
        read_matrices(path)


def test_malformed_files(tmp_path):
    with pytest.raises(MissingCorpusError):
        read_matrices(tmp_path / "absent.json")
    with pytest.raises(SchemaError):
        read_matrices(write_data(tmp_path, {"gram": ROWS}, {"gram": rows_checksum(ROWS)}, schema="other/1"))
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ParseError):
        read_matrices(broken)


@pytest.mark.parametrize("name, rank", [("sextic", 18), ("quadric", 4), ("f2", 5)])
def test_shipped_gamma_files(name, rank):
    data = load_matrices(constants.GAMMA_FILE.format(name=name))
    assert len(data["images"]) == rank
    assert all(len(row) == constants.K3_RANK for row in data["images"])


def test_catalog_reads_the_data_files(quadric_case):
    data = catalog.gamma_data("quadric")
    assert quadric_case.pic.gram.to_rows() == [list(row) for row in data["gram"]]
    assert quadric_case.action.to_rows() == [list(row) for row in data["action"]]
