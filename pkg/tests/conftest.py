import textwrap

import pytest

BATTING_HEADER = "team,season,game_index,date,opponent,home,hr,bb,hbp,so\n"
PITCHING_HEADER = "team,season,game_index,date,opponent,pitcher,ip\n"


def write(path, header, body):
    path.write_text(header + textwrap.dedent(body).lstrip("\n"), encoding="utf-8")
    return path


@pytest.fixture
def box_scores(tmp_path):
    """Six BOS/NYY games covering the innings edge cases.

    g1 regulation 9/9; g2 NYY (home) wins without batting in the 9th, so BOS
    pitches 8 innings; g3 BOS walk-off at home, NYY gets 26 outs; g4 11
    innings; g5 (10 innings, NYY walk-off) and g6 (NYY home win, no bottom
    9th) are a doubleheader on the same date.
    """
    bat = write(tmp_path / "batting.csv", BATTING_HEADER, """
        BOS,2019,1,2019-04-01,NYY,1,1,3,0,8
        BOS,2019,2,2019-04-02,NYY,0,2,1,1,10
        BOS,2019,3,2019-04-03,NYY,1,0,4,0,5
        BOS,2019,4,2019-04-04,NYY,1,3,2,2,12
        BOS,2019,5,2019-04-05,NYY,0,0,0,0,7
        BOS,2019,6,2019-04-05,NYY,0,1,2,0,6
        NYY,2019,1,2019-04-01,BOS,0,0,2,0,9
        NYY,2019,2,2019-04-02,BOS,1,1,3,0,7
        NYY,2019,3,2019-04-03,BOS,0,2,2,1,6
        NYY,2019,4,2019-04-04,BOS,0,1,5,0,14
        NYY,2019,5,2019-04-05,BOS,1,2,1,0,8
        NYY,2019,6,2019-04-05,BOS,1,0,1,0,4
    """)
    pit = write(tmp_path / "pitching.csv", PITCHING_HEADER, """
        BOS,2019,1,2019-04-01,NYY,sale,6.0
        BOS,2019,1,2019-04-01,NYY,barnes,2.0
        BOS,2019,1,2019-04-01,NYY,workman,1.0
        BOS,2019,2,2019-04-02,NYY,price,7.0
        BOS,2019,2,2019-04-02,NYY,brasier,1.0
        BOS,2019,3,2019-04-03,NYY,porcello,9.0
        BOS,2019,4,2019-04-04,NYY,eovaldi,6.0
        BOS,2019,4,2019-04-04,NYY,barnes,3.0
        BOS,2019,4,2019-04-04,NYY,workman,2.0
        BOS,2019,5,2019-04-05,NYY,rodriguez,9.2
        BOS,2019,6,2019-04-05,NYY,velazquez,4.1
        BOS,2019,6,2019-04-05,NYY,hembree,3.2
        NYY,2019,1,2019-04-01,BOS,tanaka,9.0
        NYY,2019,2,2019-04-02,BOS,paxton,9.0
        NYY,2019,3,2019-04-03,BOS,german,5.2
        NYY,2019,3,2019-04-03,BOS,ottavino,2.1
        NYY,2019,3,2019-04-03,BOS,chapman,0.2
        NYY,2019,4,2019-04-04,BOS,severino,7.0
        NYY,2019,4,2019-04-04,BOS,britton,3.2
        NYY,2019,5,2019-04-05,BOS,happ,7.0
        NYY,2019,5,2019-04-05,BOS,green,3.0
        NYY,2019,6,2019-04-05,BOS,cessa,6.0
        NYY,2019,6,2019-04-05,BOS,green,3.0
    """)
    return bat, pit


# --- acceptance reporting -------------------------------------------------

_acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion; printed at the end
    of the run."""

    def record(label, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        _acceptance_lines.append(f"[{status}] {label}: {detail}")
        print(f"[{status}] {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
