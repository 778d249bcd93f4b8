from __future__ import annotations

import io
from pathlib import Path

import pytest

from super_o.config import Config, colour_enabled
from super_o.errors import InvalidParameterError


def write_config(*, tmp_path: Path, body: str) -> Path:
    path = tmp_path / "super_o.conf"
    path.write_text(body)
    return path


def test_defaults_are_valid() -> None:
    cfg = Config().validate()
    assert cfg.max_basis_size == 20000
    assert cfg.output_format == "json"
    assert cfg.check_relations is True
    assert cfg.long_tests is False


def test_overrides_ignore_none() -> None:
    cfg = Config().with_overrides(max_depth=None, output_format="csv")
    assert cfg.max_depth == Config().max_depth
    assert cfg.output_format == "csv"


@pytest.mark.parametrize("overrides", [{"max_depth": 0}, {"max_basis_size": -1}, {"output_format": "xml"}])
def test_invalid_overrides(overrides: dict[str, object]) -> None:
    with pytest.raises(InvalidParameterError):
        Config().with_overrides(**overrides)


def test_from_file(tmp_path: Path) -> None:
    path = write_config(
        tmp_path=tmp_path,
        body="# caps\nmax-depth = 9\ncheck_relations = off  # faster\n\noutput_format = table\n",
    )
    cfg = Config.from_file(path)
    assert cfg.max_depth == 9
    assert cfg.check_relations is False
    assert cfg.output_format == "table"


@pytest.mark.parametrize(
    "body",
    ["colour = yes\n", "max_depth = many\n", "check_relations = maybe\n", "max_depth 9\n"],
)
def test_from_file_rejects_bad_lines(tmp_path: Path, body: str) -> None:
    with pytest.raises(InvalidParameterError):
        Config.from_file(write_config(tmp_path=tmp_path, body=body))


def test_from_env_long(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SUPER_O_LONG", "yes")
    assert Config.from_env().long_tests is True
    monkeypatch.setenv("SUPER_O_LONG", "0")
    assert Config.from_env().long_tests is False


def test_colour_respects_no_color(monkeypatch: pytest.MonkeyPatch) -> None:
    class Tty(io.StringIO):
        def isatty(self) -> bool:
            return True

    monkeypatch.delenv("NO_COLOR", raising=False)
    assert colour_enabled(Tty()) is True
    assert colour_enabled(io.StringIO()) is False
    monkeypatch.setenv("NO_COLOR", "1")
    assert colour_enabled(Tty()) is False
