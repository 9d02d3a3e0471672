"""Tests for the Cayley-table catalog and text format"""
import pytest

from src.exceptions import TableParseError
from src.quasigroup.catalog import (
    catalog_entry,
    catalog_name,
    format_table,
    load_catalog,
    load_catalog_files,
    read_table,
    short_name,
)

pytestmark = pytest.mark.unit


class TestCatalog:
    def test_twelve_tables_in_order(self):
        names = [q.name for q in load_catalog()]
        assert names == [f"#6.{k}.1.1" for k in range(1, 13)]

    def test_data_files_match_embedded_tables(self):
        files = load_catalog_files()
        assert set(files) == {q.name for q in load_catalog()}
        for q in load_catalog():
            assert files[q.name] == q

    @pytest.mark.parametrize("label", ["#6.4.1.1", "6.4.1.1", "6.4", " #6.4 "])
    def test_entry_labels(self, label):
        assert catalog_entry(label).name == "#6.4.1.1"

    def test_unknown_entry(self):
        with pytest.raises(KeyError):
            catalog_entry("6.13")

    def test_names(self):
        assert catalog_name("6.10") == "#6.10.1.1"
        assert short_name("#6.10.1.1") == "6.10"
        with pytest.raises(ValueError):
            catalog_name("six")

    def test_first_row_is_identity(self):
        for q in load_catalog():
            assert q.rows()[0] == tuple(range(6))


class TestTableFormat:
    def test_format_then_read(self):
        q = catalog_entry("6.8")
        assert read_table(format_table(q)) == q
        assert read_table(format_table(q)).name == "#6.8.1.1"

    def test_explicit_name_wins(self):
        q = read_table("2\n1 2\n2 1\n# ignored\n", name="Z2")
        assert q.name == "Z2"
        assert q.rows() == ((0, 1), (1, 0))

    def test_short_row_reports_line(self):
        with pytest.raises(TableParseError) as info:
            read_table("3\n1 2 3\n2 3\n")
        assert info.value.line == 3

    def test_non_integer_reports_line(self):
        with pytest.raises(TableParseError) as info:
            read_table("# comment\n2\n1 x\n2 1\n")
        assert info.value.line == 3
        assert "line 3" in str(info.value)

    def test_bad_order_line(self):
        with pytest.raises(TableParseError) as info:
            read_table("2 2\n1 2\n2 1\n")
        assert info.value.line == 1

    def test_missing_rows(self):
        with pytest.raises(TableParseError):
            read_table("3\n1 2 3\n")

    def test_not_latin(self):
        with pytest.raises(TableParseError):
            read_table("2\n1 2\n1 2\n")

    def test_entry_out_of_range(self):
        with pytest.raises(TableParseError) as info:
            read_table("2\n1 3\n2 1\n")
        assert info.value.line == 2
