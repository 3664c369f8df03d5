import json

import pytest

from polarbrauer import brauer, cli, polar


def test_parse_double_touch():
    element = cli.parse("h(1) ; h(1)")
    assert len(element.terms) == 1
    (word,) = element.terms
    assert word.order == 2


def test_parse_closed_single_touch_is_zero():
    assert cli.parse("cap(1) ; h(1)*id(1) ; cup(1)").is_zero()


def test_parse_crossing_squares_to_identity():
    assert cli.parse("x(1) ; x(1)") == polar.identity_element(2)


def test_parse_linear_combination_and_scalars():
    element = cli.parse("2 h(1) - h(1)")
    assert element == polar.h_connector()
    element = cli.parse("1/2 id(1) + 1/2 id(1)")
    assert element == polar.identity_element(1)


def test_parse_pole_and_perm():
    assert cli.parse("pole") == polar.pole_identity()
    assert cli.parse("perm(2,1)") == polar.iota(brauer.s_diagram(1, 2))


def test_parse_tensor():
    assert cli.parse("h(1)*id(1)") == polar.h0i(1, 2)


def test_parse_errors_carry_positions():
    with pytest.raises(cli.ParseError):
        cli.parse("h(1) ; cap(1)")  # arity mismatch: 1 strand then cap of 2
    with pytest.raises(cli.ParseError):
        cli.parse("h(1) +")
    with pytest.raises(cli.ParseError):
        cli.parse("frob(2)")


def test_render_parse_roundtrip():
    for text in ["h(1) ; h(1)", "x(1)", "cup(1)", "2 h(1)*id(2)"]:
        element = cli.parse(text)
        rendered = cli.render(element)
        if rendered != "0":
            assert cli.render(cli.parse_rendered(rendered)) == rendered


def test_run_suite_unknown_name():
    with pytest.raises(KeyError):
        cli.run_suite("no-such-suite")


def test_cli_exit_codes(tmp_path):
    out = tmp_path / "report.json"
    code = cli.main(["--suite", "brauer-skew", "--json", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    assert any("bent-H" in c["name"] for c in payload["checks"])
    assert cli.main(["run", "definitely-not-a-suite"]) == 2


def test_cli_parse_command(capsys):
    code = cli.main(["parse", "h(1) ; h(1)"])
    assert code == 0
    assert "h(1)" in capsys.readouterr().out


def test_cli_rank_atl(tmp_path):
    out = tmp_path / "rank.json"
    code = cli.main(["--json", str(out), "rank-atl", "--max-n", "3"])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
