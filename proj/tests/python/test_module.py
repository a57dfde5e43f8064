import pytest

artinmem = pytest.importorskip("artinmem")


def load(graphs_dir, name):
    return artinmem.Graph.load(str(graphs_dir / name))


def test_graph_roundtrip():
    g = artinmem.Graph.parse("vertex a\nvertex b\nedge a b 3\n")
    assert g.vertices == ["a", "b"]
    assert g.edges() == [("a", "b", 3)]
    assert g.label("a", "b") == 3
    assert artinmem.Graph.parse(g.serialize()) == g
    h = artinmem.Graph()
    h.add_vertex("a")
    h.add_vertex("b")
    h.add_edge("a", "b", 3)
    assert h == g
    assert len(g.induced(["a"])) == 1


def test_parse_errors_map_to_python_exceptions():
    with pytest.raises(artinmem.ParseError):
        artinmem.Graph.parse("edge a b 1\n")
    assert issubclass(artinmem.ParseError, artinmem.Error)
    assert issubclass(artinmem.PoisonousGraph, artinmem.UnsupportedContext)


def test_classify_poisonous(graphs_dir):
    g = load(graphs_dir, "p3_23.ag")
    assert artinmem.find_forbidden(g) == {"type": "Path3", "vertices": ["a", "b", "c"], "labels": [2, 3]}
    v = artinmem.classify(g)
    assert v["problems"]["submonoid"] == "undecidable"
    with pytest.raises(artinmem.PoisonousGraph):
        artinmem.decompose(g)


def test_classify_clean(graphs_dir):
    g = load(graphs_dir, "star3.ag")
    assert artinmem.find_forbidden(g) is None
    v = artinmem.classify(g)
    assert set(v["problems"].values()) == {"decidable"}
    assert artinmem.decompose(g)["description"] == "Z × F_3"


def test_witness(graphs_dir):
    r = artinmem.witness(load(graphs_dir, "triangle_234.ag"))
    assert r["verified"]
    assert [a["word"] for a in r["assignment"]] == ["bb", "bcbbcb", "cc", "cacacaca"]
    with pytest.raises(artinmem.UnsupportedContext):
        artinmem.witness(load(graphs_dir, "star3.ag"))


def test_garside():
    nf = artinmem.garside_nf(3, "abab")
    assert nf["text"] == "Δ^1 · b"
    assert artinmem.garside_nf(3, "a'b")["delta_power"] == -1
    assert artinmem.dihedral_commutes(3, "abaaba", "a")
    assert not artinmem.dihedral_commutes(3, "a", "b")
    assert artinmem.hn_coset(3, "ab") == 1
    assert artinmem.hn_coset(3, "b'") == 2


def test_raag_and_elementary(graphs_dir):
    c4 = artinmem.Graph.parse("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d\nedge d a\n")
    assert artinmem.raag_reduce(c4, "b a b'") == "a"
    t = load(graphs_dir, "triangle_225.ag")
    assert artinmem.normal_key(t, "a b") == artinmem.normal_key(t, "b a")
    assert artinmem.normal_key(t, "bcbcb a") == artinmem.normal_key(t, "a cbcbc")


def test_membership():
    z = artinmem.GroupContext.raag(artinmem.Graph.parse("vertex a\n"))
    assert z.kind == "raag"
    r = artinmem.member_submonoid(z, ["aa", "aaa"], "aaaaaaa", 4)
    assert r["outcome"] == "member"
    assert r["certificate"]["factorization"] == [0, 0, 1]
    assert artinmem.member_submonoid(z, ["aa", "aaa"], "a", 10)["outcome"] == "unknown"
    d3 = artinmem.GroupContext.dihedral(3)
    assert d3.equal("aba", "bab")
    f2 = artinmem.GroupContext.raag(artinmem.Graph.parse("vertex a\nvertex b\n"))
    assert artinmem.member_rational(f2, "(ab)*", "ababababab", 10)["outcome"] == "member"
    assert artinmem.member_rational(f2, "(ab)*", "ababababab", 9)["outcome"] == "unknown"


def test_run_cli(graphs_dir):
    code, out, err = artinmem.run_cli(["nf", "--dihedral", "3", "abab"])
    assert (code, out, err) == (0, "Δ^1 · b\n", "")
    code, _, err = artinmem.run_cli(["analyze", str(graphs_dir / "missing.ag")])
    assert code != 0 and err
