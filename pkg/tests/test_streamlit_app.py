import pytest
from streamlit.testing.v1 import AppTest

from pcalc.cli.main import main as cli_main
from pcalc.cli.report import load_report
from pcalc.streamlit_app.app import SESSION_REPORT_KEY, task_label


def viewer_script():
    from pcalc.streamlit_app.app import main

    main()


@pytest.fixture
def report(data_dir, tmp_path):
    target = tmp_path / "report.json"
    cli_main(["run", str(data_dir / "corrupted_expectation.json"), "--report", str(target)])
    return load_report(target)


def test_task_label():
    task = {"status": "failed", "name": "sample", "op": "dual", "verdict": "mismatch"}
    assert task_label(task) == "🔴 failed • sample (dual) • ❌ mismatch"
    assert task_label({"status": "passed", "name": "x", "op": "validate"}) == "🟢 passed • x (validate)"


def test_empty_page_renders():
    app = AppTest.from_function(viewer_script).run()
    assert not app.exception
    assert len(app.metric) == 0


def test_loaded_report_is_summarised(report):
    app = AppTest.from_function(viewer_script)
    app.session_state[SESSION_REPORT_KEY] = report
    app.run()
    assert not app.exception
    assert [metric.value for metric in app.metric] == ["1", "0", "1"]
    assert len(app.expander) == 1
    assert app.expander[0].label.startswith("🔴 failed • corrupted")
