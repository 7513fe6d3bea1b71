import pytest

try:
    import seqalg as sa
except ImportError:  # extension on PYTHONPATH without the package wrapper
    import _seqalg as sa


def test_terms_exact_rationals():
    assert sa.terms("catalan", n=8) == ["1", "1", "2", "5", "14", "42", "132", "429"]
    assert sa.terms("lgnx", n=4) == ["0", "1", "-1/2", "1/3"]
    assert sa.terms("facs", n=6, whole=True) == ["1", "1", "2", "6", "24", "120"]


def test_terms_gaussian_field():
    assert sa.terms("expx o (i*x)", n=4, field="gaussian") == [
        "1",
        "0+1i",
        "-1/2",
        "0-1/6i",
    ]


def test_triangle_rows():
    assert sa.triangle("schroeder", from_=1, to=4) == [
        ["0"],
        ["1", "0"],
        ["0", "1", "0"],
        ["0", "1", "2", "0"],
    ]
    assert sa.triangle("ebinom", from_=1, to=3, mode="rows-e2o") == [
        ["1"],
        ["1", "1"],
        ["1", "2", "1"],
    ]


def test_names_registry():
    entries = dict(sa.names())
    assert entries["derangement"] == "set o nonLoopCycle"
    assert "catalan" in entries


def test_check_suite():
    results = sa.check("errors")
    assert results and all(passed for _, passed, _ in results)
    with pytest.raises(sa.EvalError):
        sa.check("nosuch")


def test_errors():
    with pytest.raises(sa.ParseError):
        sa.terms("1+*x")
    with pytest.raises(sa.EvalError):
        sa.terms("nosuchseq")
    with pytest.raises(sa.EvalError):
        sa.terms("lgnx", n=3, whole=True)


def test_cli_entry_point():
    code, out, err = sa.run(["terms", "-n", "8", "catalan"])
    assert code == 0
    assert out.strip() == "[1,1,2,5,14,42,132,429]"
    code, _, _ = sa.run(["terms", "1+*x"])
    assert code == 2
