from garside import cli

WREATH_FILE = """\
germ v1
simples: 1 a b c ab ac bc abc
delta: abc
prod a b ab
prod b a ab
prod a c ac
prod c b ac
prod b c bc
prod c a bc
prod a bc abc
prod b ac abc
prod c ab abc
prod ab c abc
prod ac a abc
prod bc b abc
"""


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pure(capsys):
    code, out, _ = run(capsys, "pure", "--germ", "braid:3")
    assert code == 0
    assert out == "delta-pure: true\natom-classes: 1\n"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--germ", "wreath", "a.bc")
    assert code == 0 and out == "D^1\n"
    code, out, _ = run(capsys, "nf", "--germ", "wreath", "a.a.c")
    assert out == "ac|b\n"
    code, out, _ = run(capsys, "nf", "--germ", "wreath", "1")
    assert out == "1\n"


def test_gcd_lcm_divides(capsys):
    code, out, _ = run(capsys, "gcd", "--germ", "wreath", "ab", "ac")
    assert out == "a\n"
    code, out, _ = run(capsys, "lcm", "--germ", "wreath", "a", "c")
    assert out == "ac\n"
    code, out, _ = run(capsys, "divides", "--germ", "wreath", "b", "a.c")
    assert out == "false\n"
    code, out, _ = run(capsys, "divides", "--germ", "wreath", "1", "a.c")
    assert out == "true\n"


def test_deltas_classes(capsys):
    code, out, _ = run(capsys, "deltas", "--germ", "wreath")
    assert out == "a -> ab\nb -> ab\nc -> c\n"
    code, out, _ = run(capsys, "classes", "--germ", "wreath")
    assert out == "{a,b} -> ab\n{c} -> c\n"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--germ", "wreath", "--left", "a,b")
    assert code == 0
    lines = out.splitlines()
    assert "delta_G: ab" in lines
    assert "delta_H: c" in lines
    assert "delta_G*delta_H: abc" in lines
    assert "check: ok" in lines


def test_gh_hg(capsys):
    code, out, _ = run(capsys, "gh", "--germ", "wreath", "--left", "a,b", "c.a")
    assert out == "G: b\nH: c\n"
    code, out, _ = run(capsys, "hg", "--germ", "wreath", "--left", "a,b", "c.a")
    assert out == "H: c\nG: a\n"


def test_act(capsys):
    code, out, _ = run(capsys, "act", "--germ", "wreath", "--left", "a,b",
                       "--op", "rr", "--h", "c", "--g", "a")
    assert out == "b\n"
    code, out, _ = run(capsys, "act", "--germ", "wreath", "--left", "a,b",
                       "--op", "rr", "--h", "c", "--g", "a.a")
    assert out == "b.b\n"
    code, out, _ = run(capsys, "act", "--germ", "wreath", "--left", "a,b",
                       "--op", "rr-inv", "--h", "c", "--g", "b")
    assert out == "a\n"
    code, out, _ = run(capsys, "act", "--germ", "wreath", "--left", "a,b",
                       "--op", "lr", "--h", "c", "--g", "a.a")
    assert out == "c\n"


def test_split_merge(capsys):
    code, out, _ = run(capsys, "merge-nf", "--germ", "wreath", "--left", "a,b",
                       "a|a", "c")
    assert code == 0 and out == "ac|b\n"
    code, out, _ = run(capsys, "split-nf", "--germ", "wreath", "--left", "a,b",
                       "a.a.c")
    assert out == "G: a|a\nH: c\n"
    # textual round trip: split output feeds back into merge
    code, out, _ = run(capsys, "merge-nf", "--germ", "wreath", "--left", "a,b",
                       "ab|a", "c")
    code2, out2, _ = run(capsys, "split-nf", "--germ", "wreath", "--left", "a,b",
                         out.strip().replace("|", "."))
    assert out2 == "G: ab|a\nH: c\n"


def test_automaton_and_count(capsys):
    code, out, _ = run(capsys, "automaton", "--germ", "wreath",
                       "--variant", "proper", "--format", "tsv")
    assert code == 0
    assert out.startswith("state\tletter\tnext\n")
    code, out, _ = run(capsys, "count", "--germ", "wreath",
                       "--variant", "proper", "--n", "1")
    assert out == "6\n"
    code, out, _ = run(capsys, "count", "--germ", "wreath", "--left", "a,b",
                       "--lang", "G", "--variant", "full", "--n", "2")
    assert code == 0


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--germ", "wreath", "--left", "a,b",
                       "--suite", "round-trip")
    assert code == 0
    assert out.startswith("suite round-trip: ok")
    code, out, err = run(capsys, "check", "--germ", "wreath",
                         "--suite", "no-such-suite")
    assert code == 2


def test_germ_file(tmp_path, capsys):
    path = tmp_path / "wreath.germ"
    path.write_text(WREATH_FILE)
    code, out, _ = run(capsys, "validate", "--germ", f"file:{path}")
    assert code == 0
    assert "lattice: pass" in out
    code, out, _ = run(capsys, "nf", "--germ", f"file:{path}", "a.a.c")
    assert out == "ac|b\n"


def test_invalid_germ_file_is_domain_error(tmp_path, capsys):
    path = tmp_path / "bad.germ"
    path.write_text("germ v1\nsimples: 1 a\ndelta: a\nprod a a a\n")
    code, out, err = run(capsys, "validate", "--germ", f"file:{path}")
    assert code == 1
    assert "cancellativity" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "nf", "--germ", "octonion:3", "a")
    assert code == 2
    code, _, err = run(capsys, "nf", "--germ", "wreath", "a.z")
    assert code == 2 and "unknown simple" in err
    code, _, err = run(capsys, "gh", "--germ", "wreath", "a.b")
    assert code == 2 and "--left" in err


def test_domain_errors(capsys):
    code, _, err = run(capsys, "gh", "--germ", "braid:3", "--left", "213", "213")
    assert code == 1
    code, _, err = run(capsys, "act", "--germ", "wreath", "--left", "a,b",
                       "--op", "rr", "--h", "a", "--g", "a")
    assert code == 1 and "not a" in err


def test_outputs_stable(capsys):
    first = run(capsys, "automaton", "--germ", "braid:3", "--format", "dot")
    second = run(capsys, "automaton", "--germ", "braid:3", "--format", "dot")
    assert first == second
